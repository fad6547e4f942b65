"""Exact graded Betti tables, partial elimination ideals and inner projections."""

from .betti import BettiTable, GradedModule, TruncatedTable, betti_table, satisfies_N, strand_invariants
from .catalog import CatalogEntry, build, standard_entries
from .config import Config
from .field import FieldSpec
from .groebner import Ideal
from .io import format_ideal_file, parse_ideal_text, read_ideal
from .pei import PEIFiltration, pei, pei_filtration
from .polynomial import DEGLEX, LinearChange, MonomialOrder, ParseError, Polynomial, Ring
from .projection import delta_genus, inner_project, iterate_inner, sample_smooth_point
from .resolution import resolution_betti

__all__ = [
    "BettiTable", "CatalogEntry", "Config", "DEGLEX", "FieldSpec", "GradedModule", "Ideal", "LinearChange",
    "MonomialOrder", "PEIFiltration", "ParseError", "Polynomial", "Ring", "TruncatedTable", "betti_table",
    "build", "delta_genus", "format_ideal_file", "inner_project", "iterate_inner", "parse_ideal_text", "pei",
    "pei_filtration", "read_ideal", "resolution_betti", "sample_smooth_point", "satisfies_N",
    "standard_entries", "strand_invariants",
]

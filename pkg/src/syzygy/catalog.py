"""Example varieties and unions with known invariants.

Every entry carries the expected Betti table (nonzero entries of R/I) and
where that expectation comes from: ``published`` for tables printed in the
literature this package reproduces, ``oracle`` for tables computed by the
independent resolution and frozen here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .field import FieldSpec
from .groebner import Ideal
from .polynomial import Polynomial, Ring


@dataclass
class CatalogEntry:
    name: str
    params: tuple
    ideal: Ideal
    irreducible: bool
    category: str  # "Var", "CC1" or "AlgSet"
    delta: int | None
    expected: dict | None = None  # {(p, q): beta} of R/I
    source: str = "oracle"
    acm: bool | None = None
    notes: str = ""
    components: tuple = ()

    @property
    def quadratic(self) -> bool:
        return all(g.degree == 2 for g in self.ideal.generators)

    @property
    def codim(self) -> int:
        return self.ideal.hilbert_data().codim

    def to_ideal_file(self) -> str:
        from .io import format_ideal_file

        return format_ideal_file(self.ideal, comment=f"catalog entry {self.name}")


def _minors2(ring: Ring, top: list, bottom: list) -> list[Polynomial]:
    out = []
    for i in range(len(top)):
        for j in range(i + 1, len(top)):
            out.append(top[i] * bottom[j] - top[j] * bottom[i])
    return out


def _table(*rows):
    """Expected table from rows given as (q, [beta_{p,q} for p = 0, 1, ...])."""
    out = {}
    for q, vals in rows:
        for p, v in enumerate(vals):
            if v:
                out[(p, q)] = v
    return out


def _vmd_table(e: int) -> dict:
    from math import comb

    t = {(0, 0): 1}
    for p in range(1, e + 1):
        t[(p, 1)] = p * comb(e + 1, p + 1)
    return t


def rnc(d: int, field: FieldSpec | None = None) -> CatalogEntry:
    if d < 1:
        raise ValueError("rational normal curve needs degree >= 1")
    R = Ring.standard(d + 1, field)
    x = R.gens()
    I = Ideal(R, _minors2(R, x[:-1], x[1:]))
    return CatalogEntry(f"rnc({d})", (d,), I, True, "Var", 0, _vmd_table(d - 1), "oracle", True)


def scroll(*blocks: int, field: FieldSpec | None = None) -> CatalogEntry:
    if not blocks or any(int(a) < 1 for a in blocks):
        raise ValueError("scroll blocks must be positive integers")
    blocks = tuple(int(a) for a in blocks)
    n = sum(a + 1 for a in blocks)
    R = Ring.standard(n, field)
    x = R.gens()
    top, bottom = [], []
    pos = 0
    for a in blocks:
        top += x[pos:pos + a]
        bottom += x[pos + 1:pos + a + 1]
        pos += a + 1
    I = Ideal(R, _minors2(R, top, bottom))
    e = sum(blocks) - 1
    name = "scroll(" + ",".join(map(str, blocks)) + ")"
    return CatalogEntry(name, blocks, I, True, "Var", 0, _vmd_table(e), "oracle", True)


def veronese5(field: FieldSpec | None = None) -> CatalogEntry:
    R = Ring.standard(6, field)
    x = R.gens()
    M = [[x[0], x[1], x[2]], [x[1], x[3], x[4]], [x[2], x[4], x[5]]]
    gens = []
    for r in [(0, 1), (0, 2), (1, 2)]:
        for c in [(0, 1), (0, 2), (1, 2)]:
            g = M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]
            if g and g not in gens and -g not in gens:
                gens.append(g)
    I = Ideal(R, gens)
    return CatalogEntry("veronese5", (), I, True, "Var", 0, _vmd_table(3), "oracle", True)


def cone(entry: CatalogEntry) -> CatalogEntry:
    """Cone over an entry: one new variable absent from every generator."""
    R = entry.ideal.ring
    T = Ring.standard(R.nvars + 1, R.field)
    gens = [Polynomial(T, {m + (0,): c for m, c in g.terms.items()}) for g in entry.ideal.generators]
    return CatalogEntry(f"cone({entry.name})", (entry.name,), Ideal(T, gens), entry.irreducible,
                        entry.category, entry.delta, entry.expected, entry.source, entry.acm)


def hyperquadric(field: FieldSpec | None = None) -> CatalogEntry:
    R = Ring.standard(4, field)
    I = Ideal.from_strings(R, ["x0*x3-x1*x2"])
    return CatalogEntry("hyperquadric", (), I, True, "Var", 0, _vmd_table(1), "oracle", True)


def ci_quadrics(n: int = 1, field: FieldSpec | None = None) -> CatalogEntry:
    """Complete intersection of two diagonal quadrics: an n-fold del Pezzo variety in P^{n+2}."""
    if n < 1:
        raise ValueError("ci_quadrics needs n >= 1")
    R = Ring.standard(n + 3, field)
    x = R.gens()
    q1 = sum((xi * xi for xi in x[1:]), x[0] * x[0])
    q2 = sum((xi * xi * (i + 1) for i, xi in enumerate(x[1:], start=1)), x[0] * x[0])
    I = Ideal(R, [q1, q2])
    expected = _table((0, [1]), (1, [0, 2]), (2, [0, 0, 1]))
    return CatalogEntry(f"ci_quadrics({n})", (n,), I, True, "Var", 1, expected, "oracle", True)


ELLIPTIC_COEFFS = (1, 3)


def elliptic_nc5(field: FieldSpec | None = None) -> CatalogEntry:
    """Elliptic normal quintic: 4x4 Pfaffians of a 5x5 skew linear matrix."""
    R = Ring.standard(5, field)
    x = R.gens()
    a, b = ELLIPTIC_COEFFS
    s = [0, a, b, -b, -a]
    zero = R.zero()
    M = [[x[(i + j) % 5].scale(s[(j - i) % 5]) if i != j else zero for j in range(5)] for i in range(5)]

    def pf4(idx):
        i, j, k, l = idx
        return M[i][j] * M[k][l] - M[i][k] * M[j][l] + M[i][l] * M[j][k]

    gens = []
    for drop in range(5):
        idx = [r for r in range(5) if r != drop]
        gens.append(pf4(idx))
    I = Ideal(R, gens)
    expected = _table((0, [1]), (1, [0, 5, 5]), (2, [0, 0, 0, 1]))
    return CatalogEntry("elliptic_nc5", (), I, True, "Var", 1, expected, "published", True)


def rational_quartic_p3(field: FieldSpec | None = None) -> CatalogEntry:
    """Smooth rational quartic (s^4 : s^3 t : s t^3 : t^4): Delta = 1 but not ACM."""
    R = Ring.standard(4, field)
    I = Ideal.from_strings(R, ["x0*x3-x1*x2", "x1^3-x0^2*x2", "x2^3-x1*x3^2", "x0*x2^2-x1^2*x3"])
    expected = _table((0, [1]), (1, [0, 1]), (2, [0, 3, 4, 1]))
    return CatalogEntry("rational_quartic_p3", (), I, True, "Var", 1, expected, "oracle", False)


def skew_lines(field: FieldSpec | None = None) -> CatalogEntry:
    R = Ring.standard(4, field)
    I = Ideal.from_strings(R, ["x0*x2", "x0*x3", "x1*x2", "x1*x3"])
    expected = _table((0, [1]), (1, [0, 4, 4, 1]))
    comps = (Ideal.from_strings(R, ["x0", "x1"]), Ideal.from_strings(R, ["x2", "x3"]))
    return CatalogEntry("skew_lines", (), I, False, "AlgSet", -1, expected, "published", False,
                        "linearly joined but not connected in codimension one", comps)


def _union(name, R, parts, expected, source, delta, category, acm, notes) -> CatalogEntry:
    comps = tuple(Ideal.from_strings(R, p) for p in parts)
    I = comps[0]
    for c in comps[1:]:
        I = I.intersect(c)
    return CatalogEntry(name, (), I, False, category, delta, expected, source, acm, notes, comps)


def line_cup_tcubic(field: FieldSpec | None = None) -> CatalogEntry:
    """A line meeting a twisted cubic in one point, which is also where their spans meet."""
    R = Ring.standard(5, field)
    return _union("line_cup_tcubic", R,
                  [["x4", "x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"], ["x1", "x2", "x3"]],
                  _vmd_table(3), "published", 0, "CC1", True,
                  "twisted cubic in x4=0 and the line x1=x2=x3=0 through (1:0:0:0:0)")


def conics_meet_pt(field: FieldSpec | None = None) -> CatalogEntry:
    """Two plane conics whose planes meet in a single common point of both."""
    R = Ring.standard(5, field)
    return _union("conics_meet_pt", R,
                  [["x3", "x4", "x1^2-x0*x2"], ["x1", "x2", "x3^2-x0*x4"]],
                  _vmd_table(3), "published", 0, "CC1", True,
                  "conics in the planes x3=x4=0 and x1=x2=0, both through (1:0:0:0:0)")


def conic_cup_tcubic_dbl(field: FieldSpec | None = None) -> CatalogEntry:
    """Conic and twisted cubic sharing a tangent line at one point (a double point),
    with spans meeting exactly in that line."""
    R = Ring.standard(5, field)
    return _union("conic_cup_tcubic_dbl", R,
                  [["x4", "x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"], ["x2", "x3", "x0*x4-x1^2"]],
                  _table((0, [1]), (1, [0, 5, 5]), (2, [0, 0, 0, 1])), "published", 1, "CC1", None,
                  "cubic in x4=0, conic in x2=x3=0; both tangent to the line x2=x3=x4=0 at (1:0:0:0:0)")


def planecubic_cup_conic(field: FieldSpec | None = None) -> CatalogEntry:
    """Cuspidal plane cubic and a plane conic whose planes meet in one common point."""
    R = Ring.standard(5, field)
    return _union("planecubic_cup_conic", R,
                  [["x3", "x4", "x0*x1^2-x2^3"], ["x0", "x2", "x1*x3-x4^2"]],
                  _table((0, [1]), (1, [0, 5, 6, 2]), (2, [0, 1, 2, 1])), "published", 1, "CC1", None,
                  "cubic in x3=x4=0 and conic in x0=x2=0, both through (0:1:0:0:0)")


BUILDERS = {
    "rnc": rnc,
    "scroll": scroll,
    "veronese5": veronese5,
    "hyperquadric": hyperquadric,
    "ci_quadrics": ci_quadrics,
    "elliptic_nc5": elliptic_nc5,
    "rational_quartic_p3": rational_quartic_p3,
    "skew_lines": skew_lines,
    "line_cup_tcubic": line_cup_tcubic,
    "conics_meet_pt": conics_meet_pt,
    "conic_cup_tcubic_dbl": conic_cup_tcubic_dbl,
    "planecubic_cup_conic": planecubic_cup_conic,
}

# the entries that `catalog list` and the verification suites walk through
STANDARD = (
    "rnc(3)", "rnc(4)", "rnc(5)", "scroll(1,2)", "veronese5", "cone(rnc(3))", "hyperquadric",
    "ci_quadrics(1)", "ci_quadrics(2)", "elliptic_nc5", "rational_quartic_p3", "skew_lines",
    "line_cup_tcubic", "conics_meet_pt", "conic_cup_tcubic_dbl", "planecubic_cup_conic",
)

_CALL = re.compile(r"^\s*([a-z_0-9]+?)\s*(?:\((.*)\))?\s*$")


def build(name: str, params: tuple = (), field: FieldSpec | None = None) -> CatalogEntry:
    """Build an entry from a name such as ``rnc(4)``, ``scroll(1,2)`` or ``cone(rnc(3))``."""
    m = _CALL.match(name)
    if not m:
        raise ValueError(f"cannot parse catalog name {name!r}")
    head, inner = m.group(1), m.group(2)
    # allow the compact spellings rnc3 / rnc4
    if head not in BUILDERS and head != "cone":
        mm = re.fullmatch(r"rnc(\d+)", head)
        if mm:
            head, inner = "rnc", mm.group(1)
    if head == "cone":
        if not inner:
            raise ValueError("cone needs an entry, e.g. cone(rnc(3))")
        return cone(build(inner, field=field))
    if head not in BUILDERS:
        raise ValueError(f"unknown catalog entry {head!r}; known: {', '.join(sorted(BUILDERS))}")
    args = tuple(params)
    if inner:
        try:
            args = tuple(int(a) for a in inner.split(","))
        except ValueError:
            raise ValueError(f"catalog parameters must be integers: {inner!r}") from None
    return BUILDERS[head](*args, field=field)


def standard_entries(field: FieldSpec | None = None) -> list[CatalogEntry]:
    return [build(n, field=field) for n in STANDARD]

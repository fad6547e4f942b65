"""Graded Betti numbers through Koszul homology of graded pieces.

For a graded module M over a polynomial ring with variables y_1..y_n,

    beta_{p,q}(M) = dim H_p(K(y; M))_{p+q},

the homology of  wedge^{p+1} V (x) M_{q-1} -> wedge^p V (x) M_q -> wedge^{p-1} V (x) M_{q+1}.
All modules here are subquotients M/N of a polynomial ring's graded pieces,
so every term is a finite-dimensional space given by RREF bases.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb
from typing import Callable

import numpy as np

from . import linalg
from .field import FieldSpec
from .hilbert import quotient_regularity_bound
from .pieces import monomial_basis
from .polynomial import DEGLEX, MonomialOrder

SCHEMA_VERSION = 1
DEFAULT_QMAX = 4


class TruncatedTable(RuntimeError):
    """A Betti table is missing rows needed by the caller."""


@dataclass
class GradedModule:
    """Subquotient M/N of the graded pieces of k[x_0..x_{nvars-1}].

    ``sub(m)`` returns the RREF (rows, pivots) of M_m inside the monomial
    coordinates of degree m, or None when M_m is everything.  ``rel(m)`` gives
    N_m, which must be contained in M_m.  Only the variables in ``acting``
    act, so S-modules living inside R are modules over k[acting].
    """

    nvars: int
    field: FieldSpec
    acting: tuple
    sub: Callable | None
    rel: Callable | None
    reg_bound: int | None = None  # certified bound for reg(M), None if unknown
    name: str = "module"
    order: MonomialOrder = DEGLEX
    _cache: dict = dc_field(default_factory=dict, repr=False)

    def ambient_dim(self, m: int) -> int:
        if m < 0:
            return 0
        return len(monomial_basis(self.nvars, self.order).monos(m)[0])

    def quotient_basis(self, m: int):
        """(B, Nrows, Npiv, keep): B spans a complement of N_m in M_m, in ambient
        coordinates; quotient coordinates of v in M_m are (v mod N)[keep]."""
        got = self._cache.get(m)
        if got is not None:
            return got
        F = self.field
        amb = self.ambient_dim(m)
        if m < 0 or amb == 0:
            got = (linalg.zeros((0, max(amb, 0)), F), linalg.zeros((0, max(amb, 0)), F), [], [])
            self._cache[m] = got
            return got
        if self.sub is None:
            M, Mpiv = None, list(range(amb))
        else:
            M, Mpiv = self.sub(m)
        if self.rel is None:
            N, Npiv = linalg.zeros((0, amb), F), []
        else:
            N, Npiv = self.rel(m)
        nset = set(Npiv)
        keep_rows = [r for r, c in enumerate(Mpiv) if c not in nset]
        keep = [Mpiv[r] for r in keep_rows]
        if M is None:
            B = linalg.zeros((len(keep), amb), F)
            for r, c in enumerate(keep):
                B[r, c] = F.one
        else:
            B = M[keep_rows]
        got = (B, N, list(Npiv), keep)
        self._cache[m] = got
        return got

    def hilbert_function(self, m: int) -> int:
        return len(self.quotient_basis(m)[3])

    def multiplication(self, m: int, j: int) -> np.ndarray:
        """Matrix of y_j : (M/N)_m -> (M/N)_{m+1} in quotient coordinates."""
        key = ("mult", m, j)
        got = self._cache.get(key)
        if got is not None:
            return got
        F = self.field
        B, _, _, _ = self.quotient_basis(m)
        B1, N1, Npiv1, keep1 = self.quotient_basis(m + 1)
        X = linalg.zeros((B.shape[0], self.ambient_dim(m + 1)), F)
        if B.shape[0] and keep1:
            idx = monomial_basis(self.nvars, self.order).mult(m, j)
            X[:, idx] = B
            X = linalg.reduce_modulo(X, N1, Npiv1, F)
        Y = X[:, keep1] if keep1 else linalg.zeros((B.shape[0], 0), F)
        self._cache[key] = Y
        return Y


def quotient_module(ideal) -> GradedModule:
    """R/I over all variables of R."""
    gp = ideal.pieces(DEGLEX)
    reg = None if ideal.is_unit() else quotient_regularity_bound(ideal)
    return GradedModule(ideal.ring.nvars, ideal.field, tuple(range(ideal.ring.nvars)), None,
                        gp.ideal_rref, reg, name="R/I")


def ideal_module(ideal) -> GradedModule:
    """I itself as a graded R-module."""
    gp = ideal.pieces(DEGLEX)
    if ideal.is_zero():
        reg = -1
    else:
        b = quotient_regularity_bound(ideal)
        reg = None if b is None else b + 1
    return GradedModule(ideal.ring.nvars, ideal.field, tuple(range(ideal.ring.nvars)),
                        gp.ideal_rref, None, reg, name="I")


# Koszul complex


def _koszul_rank(mod: GradedModule, p: int, q: int, subsets: dict) -> int:
    """Rank of wedge^p (x) M_q -> wedge^{p-1} (x) M_{q+1}."""
    n = len(mod.acting)
    if p <= 0 or p > n or q < 0:
        return 0
    a = mod.hilbert_function(q)
    b = mod.hilbert_function(q + 1)
    if a == 0 or b == 0:
        return 0
    F = mod.field
    src = subsets[p]
    tgt = {S: i for i, S in enumerate(subsets[p - 1])}
    D = linalg.zeros((len(src) * a, len(tgt) * b), F)
    Y = {j: mod.multiplication(q, mod.acting[j]) for j in range(n)}
    p_char = F.characteristic
    for r, S in enumerate(src):
        for k, j in enumerate(S):
            T = S[:k] + S[k + 1:]
            c = tgt[T]
            block = Y[j] if k % 2 == 0 else (-Y[j] % p_char if p_char else -Y[j])
            D[r * a:(r + 1) * a, c * b:(c + 1) * b] = block
    return linalg.rank(D, F)


@dataclass
class BettiTable:
    """Finite map (p, q) -> beta_{p,q} with the row range that was computed.

    Rows q <= qmax are exact.  ``complete`` records whether every row beyond
    qmax (and every column beyond pmax) is certified to vanish.
    """

    entries: dict
    pmax: int
    qmax: int
    complete: bool
    nvars: int
    qmin: int = 0
    reg_bound: int | None = None
    label: str = ""

    def __getitem__(self, pq) -> int:
        p, q = pq
        if q > self.qmax or p > self.pmax:
            if not self.complete:
                raise TruncatedTable(f"beta_{p},{q} lies outside the computed range; raise qmax/pmax")
            return 0
        return self.entries.get((p, q), 0)

    def get(self, p: int, q: int) -> int:
        return self[p, q]

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def row(self, q: int, length: int | None = None) -> list[int]:
        length = self.pmax + 1 if length is None else length
        return [self.entries.get((p, q), 0) for p in range(length)]

    def strand(self, q: int = 1, start: int = 1, stop: int | None = None) -> list[int]:
        stop = self.ncols - 1 if stop is None else stop
        return [self.entries.get((p, q), 0) for p in range(start, stop + 1)]

    @property
    def ncols(self) -> int:
        used = [p for (p, q), v in self.entries.items() if v]
        return max(used, default=0) + 1

    @property
    def rows_used(self) -> list[int]:
        qs = sorted({q for (p, q), v in self.entries.items() if v})
        return list(range(qs[0], qs[-1] + 1)) if qs else []

    def total(self, p: int) -> int:
        return sum(v for (pp, _), v in self.entries.items() if pp == p)

    def regularity(self):
        """max q with a nonzero entry (module regularity); None for the zero module."""
        if not self.complete:
            raise TruncatedTable("regularity needs a complete table")
        qs = [q for (p, q), v in self.entries.items() if v]
        return max(qs) if qs else None

    def projective_dimension(self):
        if not self.complete:
            raise TruncatedTable("projective dimension needs a complete table")
        ps = [p for (p, q), v in self.entries.items() if v]
        return max(ps) if ps else None

    # rendering

    def _grid(self):
        cols = list(range(max(self.ncols, 1)))
        rows = self.rows_used or [self.qmin]
        return cols, rows

    def to_text(self) -> str:
        cols, rows = self._grid()
        cells = [[str(self.entries.get((p, q), 0) or "-") for p in cols] for q in rows]
        totals = [str(self.total(p)) for p in cols]
        w = max(len(s) for r in cells + [totals, [str(c) for c in cols]] for s in r)
        lw = max(len("total:"), max(len(f"{q}:") for q in rows))
        out = [" " * lw + " " + " ".join(str(c).rjust(w) for c in cols)]
        out.append("total:".rjust(lw) + " " + " ".join(t.rjust(w) for t in totals))
        for q, r in zip(rows, cells):
            out.append(f"{q}:".rjust(lw) + " " + " ".join(s.rjust(w) for s in r))
        if not self.complete:
            out.append(f"(rows above q={self.qmax} not certified)")
        return "\n".join(out)

    def to_csv(self) -> str:
        cols, rows = self._grid()
        lines = ["q," + ",".join(str(p) for p in cols)]
        for q in rows:
            lines.append(f"{q}," + ",".join(str(self.entries.get((p, q), 0) or "-") for p in cols))
        return "\n".join(lines)

    def to_markdown(self) -> str:
        cols, rows = self._grid()
        lines = ["| q \\ p | " + " | ".join(str(p) for p in cols) + " |",
                 "|---" * (len(cols) + 1) + "|"]
        for q in rows:
            lines.append(f"| {q} | " + " | ".join(str(self.entries.get((p, q), 0) or "-") for p in cols) + " |")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "entries": [[p, q, v] for (p, q), v in sorted(self.entries.items()) if v],
            "pmax": self.pmax,
            "qmax": self.qmax,
            "complete": self.complete,
            "nvars": self.nvars,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BettiTable":
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {d.get('schema')!r}")
        entries = {(p, q): v for p, q, v in d["entries"]}
        return cls(entries, d["pmax"], d["qmax"], d["complete"], d["nvars"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def format(self, fmt: str) -> str:
        return {"text": self.to_text, "csv": self.to_csv, "markdown": self.to_markdown,
                "md": self.to_markdown, "json": self.to_json}[fmt]()

    def __str__(self):
        return self.to_text()


def koszul_betti(mod: GradedModule, pmax: int | None = None, qmax: int | None = None,
                 qmin: int = 0) -> BettiTable:
    n = len(mod.acting)
    pmax = n if pmax is None else min(pmax, n)
    if qmax is None:
        qmax = mod.reg_bound if mod.reg_bound is not None else DEFAULT_QMAX
        qmax = max(qmax, qmin)
    subsets = {p: list(combinations(range(n), p)) for p in range(0, n + 1)}
    ranks: dict = {}

    def rk(p, q):
        if (p, q) not in ranks:
            ranks[(p, q)] = _koszul_rank(mod, p, q, subsets)
        return ranks[(p, q)]

    entries = {}
    for q in range(qmin, qmax + 1):
        hq = mod.hilbert_function(q)
        for p in range(0, pmax + 1):
            v = comb(n, p) * hq - rk(p, q) - rk(p + 1, q - 1)
            if v:
                entries[(p, q)] = v
    complete = pmax >= n and mod.reg_bound is not None and mod.reg_bound <= qmax
    return BettiTable(entries, pmax, qmax, complete, n, qmin, mod.reg_bound, mod.name)


def betti_table(target, pmax: int | None = None, qmax: int | None = None) -> BettiTable:
    """Betti table of R/I (for an Ideal) or of a GradedModule."""
    from .groebner import Ideal

    if isinstance(target, Ideal):
        if not target.is_homogeneous():
            raise ValueError("Betti tables need homogeneous generators")
        return koszul_betti(quotient_module(target), pmax, qmax)
    return koszul_betti(target, pmax, qmax)


def module_betti_S(mod: GradedModule, pmax: int | None = None, qmax: int | None = None) -> BettiTable:
    """Betti table over the ring generated by the module's acting variables."""
    return koszul_betti(mod, pmax, qmax)


def ideal_betti_as_quotient_shift(table: BettiTable) -> BettiTable:
    """Table of the ideal K from the table of the quotient by K: beta_p,q(K) = beta_{p+1,q-1}."""
    entries = {(p - 1, q + 1): v for (p, q), v in table.entries.items() if p >= 1}
    return BettiTable(entries, max(table.pmax - 1, 0), table.qmax + 1, table.complete, table.nvars,
                      table.qmin + 1, None if table.reg_bound is None else table.reg_bound + 1, "ideal")


# strand invariants


@dataclass(frozen=True)
class StrandInvariants:
    a: int
    b: int
    reg: int | None  # regularity of the ideal: max{q+1 : beta_{p,q}(R/I) != 0, p >= 1}
    pd: int
    depth: int
    empty_linear_strand: bool = False

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "reg": self.reg, "pd": self.pd, "depth": self.depth,
                "empty_linear_strand": self.empty_linear_strand}


def strand_invariants(table: BettiTable, nvars: int | None = None) -> StrandInvariants:
    """a, b, regularity, projective dimension and depth from a table of R/I."""
    if not table.complete:
        raise TruncatedTable(
            f"table certified only through q={table.qmax}; rerun with qmax >= {table.reg_bound or table.qmax + 1}")
    nvars = table.nvars if nvars is None else nvars
    nz = table.nonzero()
    top = max((p for (p, q) in nz), default=0)

    def b1(p):
        return nz.get((p, 1), 0)

    def higher_free(p):
        return all(v == 0 for (pp, q), v in nz.items() if pp == p and q >= 2)

    a = 0
    for p in range(1, top + 1):
        if b1(p) and higher_free(p):
            a = p
        else:
            break
    last_linear = max((p for (p, q) in nz if q == 1), default=0)
    b = last_linear + 1
    reg_q = [q for (p, q) in nz if p >= 1]
    reg = max(reg_q) + 1 if reg_q else None
    pd = top
    return StrandInvariants(a, b, reg, pd, nvars - pd, empty_linear_strand=(b1(1) == 0))


def satisfies_N(table: BettiTable, d: int, p: int) -> bool:
    """Property N_{d,p}: beta_{i,j}(I) = 0 for 0 <= i < p and j > d, read off R/I."""
    # beta_{i,j}(I) = beta_{i+1,j-1}(R/I)
    for (pp, q), v in table.nonzero().items():
        i, j = pp - 1, q + 1
        if v and 0 <= i < p and j > d:
            return False
    if not table.complete:
        raise TruncatedTable("N_{d,p} needs rows beyond the computed range")
    return True

"""Degree-by-degree normal-form tables of a homogeneous ideal.

For each degree m we store the monomials of R_m (descending in the order),
which of them are standard (not in the initial ideal), and the normal form
of every monomial in standard-monomial coordinates.  The rows u - NF(u),
u a nonstandard monomial, are then a fully reduced row echelon basis of I_m.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .polynomial import MonomialOrder, mono_div, mono_divides, monomials_of_degree


@dataclass
class Piece:
    degree: int
    monos: list  # descending in the order
    index: dict
    std: list  # positions of standard monomials
    nonstd: list  # positions of initial-ideal monomials
    nf: np.ndarray  # len(monos) x len(std)

    @property
    def dim_ambient(self) -> int:
        return len(self.monos)

    @property
    def dim_quotient(self) -> int:
        return len(self.std)

    @property
    def dim_ideal(self) -> int:
        return len(self.nonstd)


class MonomialBasis:
    """Ordered monomial bases of R_m with multiplication maps, shared by pieces."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        self._monos: dict = {}
        self._mult: dict = {}

    def monos(self, m: int):
        got = self._monos.get(m)
        if got is None:
            ms = sorted(monomials_of_degree(self.nvars, m), key=self.order.key, reverse=True)
            got = self._monos[m] = (ms, {u: i for i, u in enumerate(ms)})
        return got

    def mult(self, m: int, j: int) -> np.ndarray:
        """Position in degree m+1 of x_j times each monomial of degree m."""
        key = (m, j)
        got = self._mult.get(key)
        if got is None:
            ms, _ = self.monos(m)
            _, idx = self.monos(m + 1)
            out = np.empty(len(ms), dtype=np.int64)
            for i, u in enumerate(ms):
                v = list(u)
                v[j] += 1
                out[i] = idx[tuple(v)]
            got = self._mult[key] = out
        return got


_BASES: dict = {}


def monomial_basis(nvars: int, order: MonomialOrder) -> MonomialBasis:
    key = (nvars, order)
    if key not in _BASES:
        _BASES[key] = MonomialBasis(nvars, order)
    return _BASES[key]


class GradedPieces:
    def __init__(self, ideal, order: MonomialOrder):
        if not ideal.is_homogeneous():
            raise ValueError("graded pieces need a homogeneous ideal")
        self.ideal = ideal
        self.order = order
        self.F = ideal.field
        self.basis = monomial_basis(ideal.ring.nvars, order)
        gb = ideal.groebner_basis(order)
        self._gb = []
        for g in gb:
            lm = g.leading_monomial(order)
            tail = [(m, c) for m, c in g.terms.items() if m != lm]
            self._gb.append((lm, tail))
        self._pieces: dict = {}

    def piece(self, m: int) -> Piece:
        got = self._pieces.get(m)
        if got is not None:
            return got
        F = self.F
        monos, index = self.basis.monos(m)
        n = len(monos)
        divisor = [None] * n
        for i, u in enumerate(monos):
            for lm, tail in self._gb:
                if mono_divides(lm, u):
                    divisor[i] = (lm, tail)
                    break
        std = [i for i in range(n) if divisor[i] is None]
        nonstd = [i for i in range(n) if divisor[i] is not None]
        col = {i: k for k, i in enumerate(std)}
        nf = linalg.zeros((n, len(std)), F)
        p = F.characteristic
        native = nf.dtype != object
        # ascending order: every tail monomial is smaller than u
        for i in reversed(range(n)):
            d = divisor[i]
            if d is None:
                nf[i, col[i]] = F.one
                continue
            lm, tail = d
            shift = mono_div(monos[i], lm)
            row = linalg.zeros(len(std), F)
            for t, c in tail:
                j = index[tuple(a + b for a, b in zip(t, shift))]
                if native:
                    row = (row - c * nf[j]) % p
                else:
                    row = row - nf[j] * c
                    if p:
                        row = np.array([x % p for x in row], dtype=object)
            nf[i] = row
        got = Piece(m, monos, index, std, nonstd, nf)
        self._pieces[m] = got
        return got

    def ideal_rref(self, m: int, max_first: int | None = None):
        """RREF basis of I_m (rows u - NF(u)) in ambient coordinates.

        With ``max_first`` only rows whose pivot has first-variable exponent at
        most that value are kept: for deglex with x0 first this is K~_i(I)_m.
        """
        P = self.piece(m)
        rows_idx = P.nonstd
        if max_first is not None:
            rows_idx = [i for i in rows_idx if P.monos[i][0] <= max_first]
        F = self.F
        R = linalg.zeros((len(rows_idx), P.dim_ambient), F)
        for r, i in enumerate(rows_idx):
            R[r, P.std] = linalg._normalize(-P.nf[i], F) if R.dtype == object else (-P.nf[i]) % F.characteristic
            R[r, i] = F.one
        return R, list(rows_idx)

    def hilbert_function(self, m: int) -> int:
        return self.piece(m).dim_quotient

"""Hilbert series and regularity bounds computed from monomial (initial) ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .field import FieldSpec
from .polynomial import DEGLEX, mono_divides, mono_lcm


def minimalize(monos) -> list:
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_sub_shift(a: list, b: list, shift: int) -> list:
    n = max(len(a), len(b) + shift)
    out = a + [0] * (n - len(a))
    for i, c in enumerate(b):
        out[i + shift] -= c
    return out


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    # pairwise coprime generators: product of (1 - t^deg)
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in gens]
    if all(not (supports[i] & supports[j]) for i in range(len(gens)) for j in range(i + 1, len(gens))):
        out = [1]
        for m in gens:
            out = _poly_sub_shift(out, out, sum(m))
        return tuple(out)
    *rest, last = gens
    rest = tuple(minimalize(rest))
    colon = tuple(minimalize(tuple(max(a - b, 0) for a, b in zip(m, last)) for m in rest))
    a = list(_numerator(rest))
    b = list(_numerator(colon))
    return tuple(_trim(_poly_sub_shift(a, b, sum(last))))


def _trim(c: list) -> list:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def hilbert_numerator(monos, nvars: int) -> list[int]:
    """K(t) with HS(R/J) = K(t) / (1-t)^nvars for the monomial ideal J."""
    gens = tuple(minimalize(monos))
    if any(sum(m) == 0 for m in gens):
        return [0]
    return list(_numerator(gens))


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple  # K(t) over (1-t)^nvars
    h_vector: tuple  # K(t) / (1-t)^(nvars - dim)
    nvars: int
    dim: int  # Krull dimension of R/I, -1 for the unit ideal
    degree: int

    @property
    def projective_dim(self) -> int:
        return self.dim - 1

    @property
    def codim(self) -> int:
        """Codimension of V(I) in P^(nvars-1)."""
        return self.nvars - self.dim

    def hilbert_function(self, m: int) -> int:
        n = self.nvars
        total = 0
        for i, c in enumerate(self.numerator):
            if c and m - i >= 0:
                total += c * comb(m - i + n - 1, n - 1)
        return total

    def hilbert_polynomial_values(self, ms):
        return [self.hilbert_function(m) for m in ms]


def hilbert_data_from_monomials(monos, nvars: int) -> HilbertData:
    K = hilbert_numerator(monos, nvars)
    if all(c == 0 for c in K):
        return HilbertData((0,), (0,), nvars, -1, 0)
    h = list(K)
    codim = 0
    while True:
        # synthetic division by (1 - t) when h(1) == 0
        if sum(h) != 0:
            break
        q = []
        acc = 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = _trim(q) if q else [0]
        codim += 1
    return HilbertData(tuple(K), tuple(h), nvars, nvars - codim, sum(h))


def hilbert_data(ideal) -> HilbertData:
    return hilbert_data_from_monomials(ideal.leading_monomials(DEGLEX), ideal.ring.nvars)


# multigraded Betti numbers of monomial ideals (regularity certificates)

def _reduced_homology_dims(faces_by_dim: dict, F: FieldSpec) -> dict:
    """dim H~_k over F for a simplicial complex given as {dim: [sorted vertex tuples]}."""
    from . import linalg

    dims = sorted(faces_by_dim)
    ranks = {}
    for k in dims:
        if k - 1 not in faces_by_dim:
            ranks[k] = 0
            continue
        rows = faces_by_dim[k]
        cols = {f: i for i, f in enumerate(faces_by_dim[k - 1])}
        M = linalg.zeros((len(rows), len(cols)), F)
        for r, face in enumerate(rows):
            for j in range(len(face)):
                sub = face[:j] + face[j + 1:]
                M[r, cols[sub]] = F(1 if j % 2 == 0 else -1)
        ranks[k] = linalg.rank(M, F)
    out = {}
    for k in dims:
        out[k] = len(faces_by_dim[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def monomial_betti(monos, nvars: int, F: FieldSpec | None = None, lattice_cap: int = 50_000):
    """Graded Betti numbers {(i, degree): count} of the monomial ideal J (as a module),
    via upper Koszul simplicial complexes over the LCM lattice.  Returns None when
    the lattice exceeds ``lattice_cap``."""
    F = F or FieldSpec()
    gens = minimalize(monos)
    if not gens:
        return {}
    lattice = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                l = mono_lcm(a, g)
                if l not in lattice:
                    lattice.add(l)
                    nxt.append(l)
                    if len(lattice) > lattice_cap:
                        return None
        frontier = nxt

    def in_J(m):
        return any(mono_divides(g, m) for g in gens)

    out: dict = {}
    for alpha in lattice:
        supp = [i for i, x in enumerate(alpha) if x]
        faces: dict = {}
        for k in range(len(supp) + 1):
            for S in combinations(supp, k):
                beta = list(alpha)
                for i in S:
                    beta[i] -= 1
                if in_J(beta):
                    faces.setdefault(k - 1, []).append(S)
        if not faces:
            continue
        h = _reduced_homology_dims(faces, F)
        deg = sum(alpha)
        for k, v in h.items():
            if v:
                out[(k + 1, deg)] = out.get((k + 1, deg), 0) + v
    return out


def monomial_regularity(monos, nvars: int, F: FieldSpec | None = None):
    """reg(J) for a monomial ideal J (None if the lattice is too large; 0 for J = 0)."""
    b = monomial_betti(monos, nvars, F)
    if b is None:
        return None
    if not b:
        return 0
    return max(d - i for (i, d) in b)


def quotient_regularity_bound(ideal):
    """Upper bound for reg(R/I) from reg(R/in(I)); exact for monomial ideals."""
    if ideal.is_unit():
        return 0
    lms = ideal.leading_monomials(DEGLEX)
    if not lms:
        return 0
    r = monomial_regularity(lms, ideal.ring.nvars, ideal.field)
    return None if r is None else r - 1

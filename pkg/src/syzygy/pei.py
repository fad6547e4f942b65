"""Partial elimination ideals K_i(I) with respect to a point moved to (1:0:...:0).

After a coordinate change sending the center q to e_0, the reduced Gröbner
basis of I for deglex with x0 first yields every K_i: it is generated by the
x0^{d0(g)}-coefficients of the basis elements g with d0(g) <= i.  That rule
is certified here against a direct linear-algebra computation of the
definition in each degree up to a cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from . import linalg
from .betti import GradedModule
from .groebner import Ideal
from .hilbert import quotient_regularity_bound
from .pieces import monomial_basis
from .polynomial import DEGLEX, LinearChange, Polynomial, Ring, d0_of, monomials_of_degree, normalize_point

CERTIFY_DEGREE = 6


class SingularPoint(ValueError):
    """The requested point is not a smooth point of the scheme."""


def normalize_at(ideal: Ideal, point) -> tuple[LinearChange, Ideal]:
    """Coordinate change x = A y with q = A e_0, and the ideal in the y coordinates."""
    F = ideal.field
    q = normalize_point(point, F)
    if len(q) != ideal.ring.nvars:
        raise ValueError(f"point has {len(q)} coordinates, ring has {ideal.ring.nvars} variables")
    if q == tuple(F.one if i == 0 else F.zero for i in range(len(q))):
        change = LinearChange.identity(len(q), F)
        return change, ideal
    change = LinearChange.moving_to_origin(q, F)
    return change, ideal.transform(change)


def pei_from_normalized(ideal: Ideal, i: int) -> Ideal:
    """K_i of an ideal whose center already sits at (1:0:...:0)."""
    S = ideal.ring.drop_first()
    if i < 0:
        return Ideal(S, [])
    gens = []
    for g in ideal.groebner_basis(DEGLEX):
        d0 = d0_of(g)
        if d0 <= i:
            gens.append(g.coefficient_in_first(d0))
    return Ideal(S, gens)


def pei(ideal: Ideal, point, i: int) -> Ideal:
    _, Iq = normalize_at(ideal, point)
    return pei_from_normalized(Iq, i)


# linear-algebra definition, used as a certificate


def _span_of_multiples(ideal: Ideal, m: int, cols: dict):
    F = ideal.field
    n = ideal.ring.nvars
    rows = []
    for g in ideal.generators:
        d = g.degree
        if d > m:
            continue
        for u in monomials_of_degree(n, m - d):
            row = [0] * len(cols)
            for w, c in g.terms.items():
                row[cols[tuple(a + b for a, b in zip(w, u))]] = c
            rows.append(row)
    return linalg.asarray(rows, F, len(cols))


def pei_piece_by_definition(ideal: Ideal, i: int, k: int):
    """RREF rows spanning K_i(I)_k in deglex S-monomial coordinates, straight from
    the definition: x0^i-coefficients of f in I_{k+i} with deg_x0(f) <= i."""
    F = ideal.field
    n = ideal.ring.nvars
    m = k + i
    S_monos, S_idx = monomial_basis(n - 1, DEGLEX).monos(k)
    if i < 0 or m < 0:
        return linalg.zeros((0, len(S_monos)), F)
    # columns sorted so that higher x0 powers come first
    monos = sorted(monomials_of_degree(n, m), key=lambda u: (-u[0], u))
    cols = {u: j for j, u in enumerate(monos)}
    A = _span_of_multiples(ideal, m, cols)
    if A.shape[0] == 0:
        return linalg.zeros((0, len(S_monos)), F)
    Rr, piv = linalg.rref(A, F)
    low = [r for r, c in enumerate(piv) if monos[c][0] <= i]
    out = linalg.zeros((len(low), len(S_monos)), F)
    for r_out, r in enumerate(low):
        for j, u in enumerate(monos):
            if u[0] == i and Rr[r, j]:
                out[r_out, S_idx[u[1:]]] = Rr[r, j]
    if out.shape[0] == 0:
        return out
    R2, _ = linalg.rref(out, F)
    return R2


def ideal_piece(ideal: Ideal, k: int):
    """RREF of I_k in the deglex monomial coordinates of its ring."""
    if ideal.is_zero():
        n = len(monomial_basis(ideal.ring.nvars, DEGLEX).monos(k)[0])
        return linalg.zeros((0, n), ideal.field)
    rows, _ = ideal.pieces(DEGLEX).ideal_rref(k)
    return rows


def certify_level(normalized: Ideal, K: Ideal, i: int, cap: int = CERTIFY_DEGREE) -> list:
    """Degrees k (with k + i <= cap) where the extracted K_i disagrees with the definition."""
    F = normalized.field
    bad = []
    for k in range(0, cap - i + 1):
        a = ideal_piece(K, k)
        b = pei_piece_by_definition(normalized, i, k)
        if not linalg.same_row_space(a, b, F):
            bad.append(k)
    return bad


# the filtration


def ktilde_dim(normalized: Ideal, i: int, m: int) -> int:
    if i < 0 or m < 0:
        return 0
    rows, _ = normalized.pieces(DEGLEX).ideal_rref(m, max_first=i)
    return rows.shape[0]


def ideal_dim(K: Ideal, k: int) -> int:
    if k < 0:
        return 0
    total = comb(k + K.ring.nvars - 1, K.ring.nvars - 1)
    if K.is_zero():
        return 0
    return total - K.pieces(DEGLEX).hilbert_function(k)


@dataclass
class PEIFiltration:
    point: tuple
    change: LinearChange
    normalized: Ideal  # I in coordinates where the point is (1:0:...:0)
    levels: list  # K_0, ..., K_s (then constant)
    s: int
    t: int
    codim: int
    top: int  # largest d0 among Gröbner basis elements
    certified: dict = dc_field(default_factory=dict)  # level -> list of bad degrees

    @property
    def K_infinity(self) -> Ideal:
        return self.levels[self.s]

    def K(self, i: int) -> Ideal:
        if i < 0:
            return Ideal(self.normalized.ring.drop_first(), [])
        return self.levels[min(i, len(self.levels) - 1)]

    @property
    def outer(self) -> bool:
        return self.K_infinity.is_unit()

    def certify(self, cap: int = CERTIFY_DEGREE) -> bool:
        for i in range(0, len(self.levels)):
            self.certified[i] = certify_level(self.normalized, self.levels[i], i, cap)
        # one level past the last stored also matches K_infinity
        extra = len(self.levels)
        if extra <= cap:
            self.certified[extra] = certify_level(self.normalized, self.levels[-1], extra, cap)
        return all(not v for v in self.certified.values())

    def exact_sequence_failures(self, cap: int = CERTIFY_DEGREE) -> list:
        """Degrees where the dimension identities of the two PEI sequences fail."""
        N = self.normalized
        bad = []
        for i in range(0, len(self.levels) + 1):
            Ki, Kp = self.K(i), self.K(i - 1)
            for m in range(0, cap + 1):
                lhs = ktilde_dim(N, i, m) - ktilde_dim(N, i - 1, m)
                if lhs != ideal_dim(Ki, m - i):
                    bad.append(("first", i, m))
                q_i = ktilde_dim(N, i, m) - ktilde_dim(N, i - 1, m)
                q_prev = ktilde_dim(N, i - 1, m - 1) - ktilde_dim(N, i - 2, m - 1)
                quot = ideal_dim(Ki, m - i) - ideal_dim(Kp, m - i)
                if q_i != q_prev + quot:
                    bad.append(("second", i, m))
        return bad

    def to_dict(self) -> dict:
        F = self.normalized.field
        return {
            "point": [int(F.signed(x)) if F.characteristic else str(x) for x in self.point],
            "s": self.s,
            "t": self.t,
            "codim": self.codim,
            "levels": [[g.to_str() for g in K.groebner_basis()] for K in self.levels],
            "outer": self.outer,
            "certified": {str(k): (not v) for k, v in sorted(self.certified.items())},
        }


def pei_filtration(ideal: Ideal, point, codim: int | None = None) -> PEIFiltration:
    F = ideal.field
    q = normalize_point(point, F)
    change, N = normalize_at(ideal, q)
    gb = N.groebner_basis(DEGLEX)
    top = max((d0_of(g) for g in gb), default=0)
    levels = [pei_from_normalized(N, i) for i in range(0, top + 1)]
    final = levels[-1]
    s = next(i for i, K in enumerate(levels) if K == final)
    levels = levels[: s + 1]
    K1 = levels[min(1, s)]
    t = len(K1.linear_forms()) if not K1.is_unit() else K1.ring.nvars
    if codim is None:
        codim = ideal.hilbert_data().codim
    return PEIFiltration(q, change, N, levels, s, t, codim, top)


# K~_i as graded S-modules


def _reg_of_ideal(K: Ideal):
    if K.is_zero():
        return None  # zero module: contributes nothing
    if K.is_unit():
        return 0
    b = quotient_regularity_bound(K)
    return None if b is None else b + 1


def ktilde_reg_bound(filt: PEIFiltration, i: int):
    """Bound reg(K~_i) <= max_{j <= i} (reg K_j + j) from the first exact sequence."""
    best = -1
    for j in range(0, i + 1):
        K = filt.K(j)
        if K.is_zero():
            continue
        r = _reg_of_ideal(K)
        if r is None:
            return None
        best = max(best, r + j)
    return best


def ktilde_module(filt: PEIFiltration, i: int) -> GradedModule:
    N = filt.normalized
    gp = N.pieces(DEGLEX)
    n = N.ring.nvars

    def sub(m, i=i):
        return gp.ideal_rref(m, max_first=i)

    return GradedModule(n, N.field, tuple(range(1, n)), sub, None, ktilde_reg_bound(filt, i),
                        name=f"K~_{i}")


def ktilde_quotient(filt: PEIFiltration, h: int, d: int | None = None) -> GradedModule:
    """K~_d / K~_h, or I / K~_h when d is None (regularity then left uncertified)."""
    N = filt.normalized
    gp = N.pieces(DEGLEX)
    n = N.ring.nvars
    if d is None:
        sub = gp.ideal_rref
    else:
        def sub(m):
            return gp.ideal_rref(m, max_first=d)

    def rel(m):
        if h < 0:
            amb = len(monomial_basis(n, DEGLEX).monos(m)[0])
            return linalg.zeros((0, amb), N.field), []
        return gp.ideal_rref(m, max_first=h)

    name = f"I/K~_{h}" if d is None else f"K~_{d}/K~_{h}"
    return GradedModule(n, N.field, tuple(range(1, n)), sub, rel, None, name=name)


@dataclass
class KtildePresentation:
    level: int
    generators: list  # (degree, (coefficient of x0^0, ..., of x0^i)) with S-polynomial coefficients
    cap: int
    truncated: bool


def ktilde_generators(filt: PEIFiltration, i: int, cap: int) -> KtildePresentation:
    """Minimal S-module generators of K~_i, degree by degree up to ``cap``."""
    mod = ktilde_module(filt, i)
    N = filt.normalized
    F = N.field
    n = N.ring.nvars
    basis = monomial_basis(n, DEGLEX)
    S = N.ring.drop_first()
    gens = []
    bound = mod.reg_bound
    stop = cap if bound is None else min(cap, bound)
    for m in range(0, stop + 1):
        B, _, _, _ = mod.quotient_basis(m)
        if B.shape[0] == 0:
            continue
        if m > 0:
            prev, _, _, _ = mod.quotient_basis(m - 1)
            shifted = []
            for j in range(1, n):
                X = linalg.zeros((prev.shape[0], B.shape[1]), F)
                if prev.shape[0]:
                    X[:, basis.mult(m - 1, j)] = prev
                shifted.append(X)
            P = np.vstack(shifted) if shifted else linalg.zeros((0, B.shape[1]), F)
        else:
            P = linalg.zeros((0, B.shape[1]), F)
        if P.shape[0]:
            P, ppiv = linalg.rref(P, F)
        else:
            ppiv = []
        rem = linalg.reduce_modulo(B, P, ppiv, F)
        rem, _ = linalg.rref(rem, F) if rem.shape[0] else (rem, [])
        monos = basis.monos(m)[0]
        for row in rem:
            parts = [dict() for _ in range(i + 1)]
            for c, v in zip(monos, row):
                if v:
                    parts[c[0]][c[1:]] = int(v) if F.characteristic else v
            gens.append((m, tuple(Polynomial(S, p) for p in parts)))
    truncated = bound is None or bound > cap
    return KtildePresentation(i, gens, cap, truncated)


# tangent spaces


def jacobian_at(ideal: Ideal, point) -> list:
    F = ideal.field
    return [[g.derivative(j).evaluate(point) for j in range(ideal.ring.nvars)] for g in ideal.generators]


def jacobian_rank(ideal: Ideal, point) -> int:
    J = jacobian_at(ideal, point)
    if not J:
        return 0
    return linalg.rank(linalg.asarray(J, ideal.field), ideal.field)


def tangent_space_ideal(ideal: Ideal, point, codim: int | None = None) -> Ideal:
    """Linear forms cutting the tangent space at a smooth point, in the normalized S."""
    F = ideal.field
    q = normalize_point(point, F)
    if codim is None:
        codim = ideal.hilbert_data().codim
    if any(g.evaluate(q) for g in ideal.generators):
        raise ValueError("point does not lie on the scheme")
    J = linalg.asarray(jacobian_at(ideal, q), F) if ideal.generators else linalg.zeros((0, len(q)), F)
    rows, _ = linalg.rref(J, F) if J.shape[0] else (J, [])
    if rows.shape[0] != codim:
        raise SingularPoint(f"Jacobian rank {rows.shape[0]} at {q} differs from codimension {codim}")
    change, _ = normalize_at(ideal, q)
    R = ideal.ring
    S = R.drop_first()
    forms = []
    for row in rows:
        L = change.apply(R.linear_form(list(row)))
        if L.coefficient_in_first(1):
            raise SingularPoint("tangent form does not vanish at the point")
        forms.append(L.coefficient_in_first(0))
    return Ideal(S, forms)

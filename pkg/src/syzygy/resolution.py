"""Minimal free resolution of R/I by iterated syzygies, degree by degree.

This is the second, independent route to graded Betti numbers.  It never
builds a Koszul complex.  I_m is spanned by multiples of the generators,
each syzygy module is a kernel computed one degree at a time, and minimal
generators in degree m are a complement of R_1 * Z_{m-1} inside Z_m.
Gröbner bases appear only in the default degree range, reg(R/in(I)).
"""

from __future__ import annotations

from . import linalg
from .polynomial import mono_mul, monomials_of_degree


class _FreeModule:
    """Graded free module with generators in degrees ``shifts``; fixed monomial bases."""

    def __init__(self, nvars: int, shifts: list):
        self.nvars = nvars
        self.shifts = list(shifts)
        self._bases: dict = {}

    def basis(self, m: int):
        got = self._bases.get(m)
        if got is None:
            items = []
            for k, d in enumerate(self.shifts):
                for u in sorted(monomials_of_degree(self.nvars, m - d)):
                    items.append((k, u))
            got = self._bases[m] = (items, {it: i for i, it in enumerate(items)})
        return got


def _shift_rows(vectors, src: _FreeModule, m: int, F):
    """All products x_j * v for v in a basis of degree m, as rows of degree m+1."""
    items, _ = src.basis(m)
    _, idx1 = src.basis(m + 1)
    out = linalg.zeros((len(vectors) * src.nvars, len(idx1)), F)
    r = 0
    for v in vectors:
        nz = [(i, c) for i, c in enumerate(v) if c]
        for j in range(src.nvars):
            e = [0] * src.nvars
            e[j] = 1
            e = tuple(e)
            for i, c in nz:
                k, u = items[i]
                out[r, idx1[(k, mono_mul(u, e))]] = c
            r += 1
    return out


def _map_matrix(src: _FreeModule, images: list, tgt: _FreeModule, m: int, F):
    """Matrix (rows = basis of src_m) of the map sending generator k to images[k]."""
    items, _ = src.basis(m)
    _, tidx = tgt.basis(m)
    A = linalg.zeros((len(items), len(tidx)), F)
    for r, (k, u) in enumerate(items):
        for (kk, w), c in images[k].items():
            A[r, tidx[(kk, mono_mul(w, u))]] = c
    return A


def resolution_betti(ideal, max_degree: int | None = None, max_length: int | None = None) -> dict:
    """Betti numbers {(p, q): beta} of R/I from a minimal free resolution.

    ``max_degree`` bounds the regularity of R/I: generators of the p-th module
    are searched in degrees p .. p + max_degree.  Defaults to reg(R/in(I)),
    which bounds reg(R/I) from above.
    """
    R = ideal.ring
    F = R.field
    n = R.nvars
    if max_length is None:
        max_length = n
    gens = [g for g in ideal.generators if not g.is_zero()]
    if max_degree is None:
        from .hilbert import quotient_regularity_bound

        max_degree = quotient_regularity_bound(ideal)
        if max_degree is None:
            raise ValueError("pass max_degree explicitly")
    betti = {(0, 0): 1}
    if not gens:
        return betti
    if any(g.degree == 0 for g in gens):
        return {}

    # level 0: the module to resolve is I inside F_0 = R
    F_prev = _FreeModule(n, [0])
    cand = [({(0, m): c for m, c in g.terms.items()}, g.degree) for g in gens]

    def span_in_degree(m):
        rows = []
        items, idx = F_prev.basis(m)
        for vec, d in cand:
            if d > m:
                continue
            for u in monomials_of_degree(n, m - d):
                row = [F.zero] * len(items)
                for (k, w), c in vec.items():
                    row[idx[(k, mono_mul(w, u))]] = c
                rows.append(row)
        return linalg.asarray(rows, F, len(items))

    level = 1
    kernel_in_degree = span_in_degree
    while level <= max_length:
        lo = level if level > 1 else min(d for _, d in cand)
        hi = level + max_degree
        new_shifts = []
        new_images = []
        prev_Z = None
        for m in range(lo - 1, hi + 1):
            Z = kernel_in_degree(m)
            Z, _ = linalg.rref(Z, F) if Z.shape[0] else (Z, [])
            if m < lo:
                prev_Z = Z
                continue
            if prev_Z is not None and prev_Z.shape[0]:
                P = _shift_rows(list(prev_Z), F_prev, m - 1, F)
                P, ppiv = linalg.rref(P, F)
            else:
                P, ppiv = linalg.zeros((0, Z.shape[1]), F), []
            if Z.shape[0] and Z.shape[0] > P.shape[0]:
                rem = linalg.reduce_modulo(Z, P, ppiv, F)
                rem, _ = linalg.rref(rem, F)
                items, _ = F_prev.basis(m)
                for row in rem:
                    new_shifts.append(m)
                    new_images.append({items[i]: c for i, c in enumerate(row) if c})
                betti[(level, m - level)] = betti.get((level, m - level), 0) + rem.shape[0]
            prev_Z = Z
        if not new_shifts:
            break
        F_cur = _FreeModule(n, new_shifts)

        def kernel_in_degree(m, F_cur=F_cur, F_prev=F_prev, images=new_images):
            items, _ = F_cur.basis(m)
            if not items:
                return linalg.zeros((0, 0), F)
            A = _map_matrix(F_cur, images, F_prev, m, F)
            return linalg.left_kernel(A, F)

        F_prev = F_cur
        level += 1
    return {k: v for k, v in betti.items() if v}

"""Exact dense linear algebra over GF(p) (vectorized int64) and QQ (object arrays).

Matrices use the row-vector convention: a linear map is stored with one row
per domain basis vector, expressed in codomain coordinates.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .field import FieldSpec


def _native(F: FieldSpec) -> bool:
    p = F.characteristic
    return p != 0 and p * p < 2**62


def dtype_for(F: FieldSpec):
    return np.int64 if _native(F) else object


def zeros(shape, F: FieldSpec) -> np.ndarray:
    if _native(F):
        return np.zeros(shape, dtype=np.int64)
    a = np.empty(shape, dtype=object)
    a.fill(F.zero)
    return a


def asarray(rows, F: FieldSpec, ncols: int | None = None) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return zeros((0, ncols or 0), F)
    if _native(F):
        return np.array(rows, dtype=np.int64) % F.characteristic
    a = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            a[i, j] = F(x)
    return a


def _normalize(a: np.ndarray, F: FieldSpec) -> np.ndarray:
    p = F.characteristic
    if p and a.dtype != object:
        return a % p
    if p:
        return np.vectorize(lambda x: x % p, otypes=[object])(a) if a.size else a
    return a


def matmul(a: np.ndarray, b: np.ndarray, F: FieldSpec) -> np.ndarray:
    """Product reduced into the field; int64 path splits to avoid overflow."""
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return zeros((a.shape[0], b.shape[1]), F)
    if _native(F):
        p = F.characteristic
        # chunk the inner dimension so partial sums stay below 2**63
        chunk = max(1, (2**62) // (p * p))
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for s in range(0, a.shape[1], chunk):
            out = (out + a[:, s:s + chunk] @ b[s:s + chunk]) % p
        return out
    return _normalize(a.dot(b), F)


def _eliminate(A: np.ndarray, F: FieldSpec, full: bool):
    """In-place Gaussian elimination; returns (rank, pivot columns)."""
    p = F.characteristic
    native = _native(F)
    m, n = A.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        piv = A[r, c]
        if native:
            inv = pow(int(piv), -1, p)
            A[r, c:] = A[r, c:] * inv % p
        elif p:
            inv = pow(int(piv), -1, p)
            A[r, c:] = _normalize(A[r, c:] * inv, F)
        else:
            A[r, c:] = A[r, c:] / Fraction(piv)
        lo = 0 if full else r + 1
        col = A[lo:, c].copy()
        if full:
            col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            rows = rows + lo
            upd = A[rows, c:] - np.outer(A[rows, c], A[r, c:])
            A[rows, c:] = upd % p if native else _normalize(upd, F)
        pivots.append(c)
        r += 1
    return r, pivots


def rank(A: np.ndarray, F: FieldSpec) -> int:
    if A.size == 0:
        return 0
    # eliminate along the shorter side
    B = A.T.copy() if A.shape[0] > A.shape[1] else A.copy()
    r, _ = _eliminate(B, F, full=False)
    return r


def rref(A: np.ndarray, F: FieldSpec):
    """Reduced row echelon form: (nonzero rows, pivot column list)."""
    B = A.copy()
    if B.size == 0:
        return B[:0], []
    r, piv = _eliminate(B, F, full=True)
    return B[:r], piv


def left_kernel(A: np.ndarray, F: FieldSpec) -> np.ndarray:
    """Basis (as rows) of {v : v A = 0}."""
    m = A.shape[0]
    if m == 0:
        return zeros((0, 0), F)
    if A.shape[1] == 0:
        return identity(m, F)
    R, piv = rref(A.T.copy(), F)
    free = [j for j in range(m) if j not in set(piv)]
    K = zeros((len(free), m), F)
    for k, j in enumerate(free):
        K[k, j] = F.one
        for i, pc in enumerate(piv):
            if R[i, j]:
                K[k, pc] = F.neg(R[i, j])
    return K


def identity(n: int, F: FieldSpec) -> np.ndarray:
    I = zeros((n, n), F)
    for i in range(n):
        I[i, i] = F.one
    return I


def reduce_modulo(V: np.ndarray, R: np.ndarray, pivots, F: FieldSpec) -> np.ndarray:
    """Reduce rows of V modulo the row space of an RREF matrix R."""
    if R.shape[0] == 0 or V.shape[0] == 0:
        return V
    coeff = V[:, list(pivots)]
    p = F.characteristic
    out = V - matmul(coeff, R, F)
    return out % p if _native(F) else _normalize(out, F)


def same_row_space(A: np.ndarray, B: np.ndarray, F: FieldSpec) -> bool:
    ra, rb = rank(A, F), rank(B, F)
    if ra != rb:
        return False
    if A.shape[0] == 0:
        return True
    return rank(np.vstack([A, B]), F) == ra

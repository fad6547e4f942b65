"""Rational points over GF(p), smoothness, and inner projections from points."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .betti import BettiTable, betti_table
from .groebner import Ideal, buchberger
from .pei import jacobian_rank, normalize_at, pei_from_normalized
from .polynomial import DEGLEX, LinearChange, MonomialOrder, Polynomial, Ring, normalize_point

DEFAULT_BUDGET = 64


class SamplingError(RuntimeError):
    """No smooth rational point was found within the sample budget."""


class NotOnScheme(ValueError):
    """An inner projection was requested from a point outside V(I)."""


class DegenerateIdeal(ValueError):
    pass


def delta_genus(ideal: Ideal) -> int:
    """deg - codim - 1 for a nondegenerate scheme."""
    if ideal.linear_forms():
        raise DegenerateIdeal("ideal contains linear forms; restrict to the linear span first")
    h = ideal.hilbert_data()
    return h.degree - h.codim - 1


# point search


def _compose(f: Polynomial, images: list, ring: Ring) -> Polynomial:
    """f(images[0], ..., images[n-1]) in ``ring``."""
    cache: dict = {}
    out = ring.zero()
    for m, c in f.terms.items():
        t = ring.const(c)
        for i, k in enumerate(m):
            if k:
                key = (i, k)
                if key not in cache:
                    cache[key] = images[i] ** k
                t = t * cache[key]
        out = out + t
    return out


def _univariate_roots(coeffs: dict, p: int) -> list[int]:
    """Roots in GF(p) of sum c_k t^k, by evaluation at every field element."""
    deg = max(coeffs)
    ts = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for k in range(deg, -1, -1):
        acc = (acc * ts + coeffs.get(k, 0)) % p
    return [int(x) for x in np.flatnonzero(acc == 0)]


def _solve_zero_dim(polys: list[dict], nvars: int, p: int, rng: random.Random, F):
    """One GF(p)-solution of a zero-dimensional system, or None."""
    if nvars == 0:
        return () if all(not f for f in polys) else None
    lex = MonomialOrder("lex")
    gb = buchberger(polys, F, lex)
    if not gb:
        return None
    if any(all(x == 0 for x in m) for g in gb for m in g if len(g) == 1):
        return None
    last = nvars - 1
    uni = [g for g in gb if all(all(x == 0 for j, x in enumerate(m) if j != last) for m in g)]
    if not uni:
        return None
    g = min(uni, key=lambda h: max(m[last] for m in h))
    roots = _univariate_roots({m[last]: c for m, c in g.items()}, p)
    rng.shuffle(roots)
    for r in roots[:4]:
        sub = []
        for h in gb:
            out: dict = {}
            for m, c in h.items():
                key = m[:last]
                out[key] = (out.get(key, 0) + c * pow(r, m[last], p)) % p
            out = {k: v for k, v in out.items() if v}
            sub.append(out)
        if any(len(h) == 1 and all(x == 0 for x in next(iter(h))) for h in sub):
            continue
        rest = _solve_zero_dim([h for h in sub if h], last, p, rng, F)
        if rest is not None:
            return rest + (r,)
    return None


def is_smooth_point(ideal: Ideal, point, codim: int | None = None) -> bool:
    if codim is None:
        codim = ideal.hilbert_data().codim
    if any(g.evaluate(point) for g in ideal.generators):
        return False
    return jacobian_rank(ideal, point) == codim


def sample_smooth_point(ideal: Ideal, rng: random.Random | int, budget: int = DEFAULT_BUDGET) -> tuple:
    """A smooth GF(p)-point of V(I): cut by a random complementary linear space and solve."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    F = ideal.field
    p = F.characteristic
    if p == 0:
        raise SamplingError("point sampling needs a prime field")
    if ideal.is_unit():
        raise SamplingError("the unit ideal has no points")
    h = ideal.hilbert_data()
    n = ideal.ring.nvars
    r = h.projective_dim
    if r < 0:
        raise SamplingError("V(I) is empty")
    codim = h.codim
    k = n - 1 - r  # affine coordinates on the cutting space u0 = 1
    A_ring = Ring.standard(k, F, prefix="u", start=1)
    for _ in range(budget):
        A = [[rng.randrange(p) for _ in range(n)] for _ in range(k + 1)]
        # x_i = A[0][i] + sum_j A[j][i] u_j
        images = []
        for i in range(n):
            lin = A_ring.const(A[0][i])
            for j in range(1, k + 1):
                if A[j][i]:
                    lin = lin + A_ring.var(j - 1).scale(A[j][i])
            images.append(lin)
        polys = [dict(_compose(g, images, A_ring).terms) for g in ideal.generators]
        sol = _solve_zero_dim([f for f in polys if f], k, p, rng, F)
        if sol is None:
            continue
        u = (1,) + sol
        x = tuple(sum(u[j] * A[j][i] for j in range(k + 1)) % p for i in range(n))
        if not any(x):
            continue
        x = normalize_point(x, F)
        if is_smooth_point(ideal, x, codim):
            return x
    raise SamplingError(f"no smooth point found in {budget} samples")


# projections


@dataclass
class ProjectedScheme:
    center: tuple
    change: LinearChange
    source: Ideal  # ideal in the original coordinates
    image: Ideal  # J = K_0 in S, renamed to x0..x_{N-1}
    t: int
    e: int  # codimension before projection
    degree_before: int
    degree_after: int
    codim_after: int

    def to_dict(self) -> dict:
        F = self.source.field
        return {
            "center": [int(F.signed(c)) for c in self.center],
            "t": self.t,
            "e": self.e,
            "deg": self.degree_before,
            "deg_image": self.degree_after,
            "codim_image": self.codim_after,
            "image": [g.to_str() for g in self.image.groebner_basis()],
        }


def inner_project(ideal: Ideal, point, saturate: bool = False) -> ProjectedScheme:
    F = ideal.field
    q = normalize_point(point, F)
    if any(g.evaluate(q) for g in ideal.generators):
        raise NotOnScheme(f"{q} is not on V(I); use outer_project for outer centers")
    change, N = normalize_at(ideal, q)
    J = pei_from_normalized(N, 0)
    K1 = pei_from_normalized(N, 1)
    t = len(K1.linear_forms())
    n = ideal.ring.nvars
    T = Ring.standard(n - 1, F)
    image = J.to_ring(T)
    if saturate and not image.is_zero():
        image = image.saturate()
    h0 = ideal.hilbert_data()
    h1 = image.hilbert_data()
    return ProjectedScheme(q, change, ideal, image, t, h0.codim, h0.degree, h1.degree, h1.codim)


def outer_project(ideal: Ideal, point) -> ProjectedScheme:
    """Projection from a point off V(I); K_infinity is then the unit ideal."""
    F = ideal.field
    q = normalize_point(point, F)
    if not any(g.evaluate(q) for g in ideal.generators):
        raise ValueError("point lies on V(I); use inner_project")
    change, N = normalize_at(ideal, q)
    J = pei_from_normalized(N, 0)
    n = ideal.ring.nvars
    image = J.to_ring(Ring.standard(n - 1, F))
    h0, h1 = ideal.hilbert_data(), image.hilbert_data()
    return ProjectedScheme(q, change, ideal, image, 0, h0.codim, h0.degree, h1.degree, h1.codim)


@dataclass
class ProjectionSequence:
    start: Ideal
    seed: int
    steps: list = dc_field(default_factory=list)
    deltas: list = dc_field(default_factory=list)
    tables: list = dc_field(default_factory=list)
    error: str | None = None

    @property
    def ideals(self) -> list:
        return [self.start] + [s.image for s in self.steps]

    def trace_lines(self) -> list[str]:
        out = []
        for k, s in enumerate(self.steps):
            rec = {"step": k, **s.to_dict(), "delta": self.deltas[k + 1] if k + 1 < len(self.deltas) else None}
            if self.tables and k + 1 < len(self.tables):
                rec["betti"] = self.tables[k + 1].to_dict()
            out.append(json.dumps(rec, sort_keys=True))
        return out

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "deltas": self.deltas,
            "steps": [s.to_dict() for s in self.steps],
            "error": self.error,
        }


def iterate_inner(ideal: Ideal, seed: int, steps: int | None = None, betti: bool = False,
                  saturate: bool = False, budget: int = DEFAULT_BUDGET) -> ProjectionSequence:
    """Project from fresh general smooth points until the image is a hypersurface."""
    rng = random.Random(seed)
    seq = ProjectionSequence(ideal, seed)
    cur = ideal
    seq.deltas.append(_safe_delta(cur))
    if betti:
        seq.tables.append(betti_table(cur))
    while cur.hilbert_data().codim > 1 and (steps is None or len(seq.steps) < steps):
        h = cur.hilbert_data()
        found = None
        for _ in range(budget):
            try:
                q = sample_smooth_point(cur, rng, budget)
            except SamplingError as exc:
                seq.error = str(exc)
                return seq
            proj = inner_project(cur, q, saturate=saturate)
            # a general center drops degree and codimension by exactly one
            if proj.degree_after == h.degree - 1 and proj.codim_after == h.codim - 1:
                found = proj
                break
        if found is None:
            seq.error = "no center with the expected degree drop"
            return seq
        seq.steps.append(found)
        cur = found.image
        seq.deltas.append(_safe_delta(cur))
        if betti:
            seq.tables.append(betti_table(cur))
    return seq


def _safe_delta(ideal: Ideal):
    try:
        return delta_genus(ideal)
    except DegenerateIdeal:
        return None

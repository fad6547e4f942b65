"""Buchberger's algorithm, normal forms and ideal arithmetic.

Internally polynomials are plain dicts ``{exponent tuple: coefficient}``;
the public surface is :class:`Ideal`, which caches one reduced Gröbner basis
per monomial order.
"""

from __future__ import annotations

import heapq
import threading
from fractions import Fraction
from typing import Iterable, Sequence

from .field import FieldSpec
from .polynomial import (
    DEGLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatch,
    mono_div,
    mono_divides,
    mono_lcm,
)


class _Ops:
    """Dict-polynomial arithmetic specialised to one field and order."""

    def __init__(self, F: FieldSpec, order: MonomialOrder):
        self.F = F
        self.p = F.characteristic
        self.order = order
        self._keys: dict = {}

    def key(self, m):
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = self.order.key(m)
        return k

    def lm(self, f: dict):
        return max(f, key=self.key)

    def monic(self, f: dict) -> dict:
        lm = self.lm(f)
        c = f[lm]
        if c == 1:
            return f
        inv = self.F.inv(c)
        if self.p:
            return {m: v * inv % self.p for m, v in f.items()}
        return {m: v * inv for m, v in f.items()}

    def sub_mul(self, f: dict, g: dict, mono, c) -> None:
        """f -= c * mono * g, in place."""
        p = self.p
        for m, v in g.items():
            t = tuple(a + b for a, b in zip(m, mono))
            nv = f.get(t, 0) - c * v
            if p:
                nv %= p
            if nv:
                f[t] = nv
            else:
                f.pop(t, None)

    def reduce(self, f: dict, basis: list, lms: list, full: bool = True) -> dict:
        """Normal form of f modulo a list of monic polynomials."""
        f = dict(f)
        rem: dict = {}
        while f:
            m = self.lm(f)
            for g, lg in zip(basis, lms):
                if all(a >= b for a, b in zip(m, lg)):
                    self.sub_mul(f, g, tuple(a - b for a, b in zip(m, lg)), f[m])
                    break
            else:
                if not full:
                    rem.update(f)
                    return rem
                rem[m] = f.pop(m)
        return rem

    def spoly(self, f, lf, g, lg):
        l = mono_lcm(lf, lg)
        out = {}
        self.sub_mul(out, f, mono_div(l, lf), -1 if not self.p else self.p - 1)
        self.sub_mul(out, g, mono_div(l, lg), 1)
        return out


def buchberger(polys: Iterable[dict], F: FieldSpec, order: MonomialOrder) -> list[dict]:
    """Reduced Gröbner basis (monic dicts, sorted by increasing leading monomial)."""
    ops = _Ops(F, order)
    G: list = []
    L: list = []
    pairs: list = []
    counter = 0

    def deg(m):
        return sum(m)

    def add(h):
        nonlocal counter
        h = ops.monic(h)
        lh = ops.lm(h)
        k = len(G)
        G.append(h)
        L.append(lh)
        for i in range(k):
            if G[i] is None:
                continue
            l = mono_lcm(L[i], lh)
            heapq.heappush(pairs, (deg(l), ops.key(l), counter, i, k, l))
            counter += 1

    treated: set = set()
    for f in polys:
        f = {m: c for m, c in f.items() if c}
        if not f:
            continue
        active = [(g, lg) for g, lg in zip(G, L) if g is not None]
        r = ops.reduce(f, [a for a, _ in active], [b for _, b in active])
        if r:
            add(r)
    while pairs:
        _, _, _, i, j, l = heapq.heappop(pairs)
        treated.add((i, j))
        li, lj = L[i], L[j]
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(L[k], l):
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a in treated and b in treated:
                    skip = True
                    break
        if skip:
            continue
        s = ops.spoly(G[i], li, G[j], lj)
        if not s:
            continue
        r = ops.reduce(s, G, L)
        if r:
            add(r)
    return _reduce_basis(G, L, ops)


def _reduce_basis(G, L, ops: _Ops) -> list[dict]:
    # minimal: drop elements whose leading monomial is divisible by another
    items = sorted(zip(G, L), key=lambda t: ops.key(t[1]))
    minimal = []
    for g, lg in items:
        if not any(mono_divides(lh, lg) for _, lh in minimal):
            minimal.append((g, lg))
    out = []
    for idx, (g, lg) in enumerate(minimal):
        others = [h for k, (h, _) in enumerate(minimal) if k != idx]
        olms = [lh for k, (_, lh) in enumerate(minimal) if k != idx]
        tail = {m: c for m, c in g.items() if m != lg}
        red = ops.reduce(tail, others, olms)
        red[lg] = 1 if ops.p else Fraction(1)
        out.append(red)
    return out


class Ideal:
    """Homogeneous (or general) ideal given by generators, with cached reduced GBs."""

    def __init__(self, ring: Ring, generators: Iterable[Polynomial | str] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise RingMismatch(f"generator {g} not in ring {ring.names}")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._gb: dict = {}
        self._pieces: dict = {}
        self._lock = threading.RLock()
        self._hilbert = None

    @classmethod
    def from_strings(cls, ring: Ring, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def groebner_basis(self, order: MonomialOrder = DEGLEX) -> list[Polynomial]:
        with self._lock:
            gb = self._gb.get(order)
        if gb is None:
            raw = buchberger((dict(g.terms) for g in self.generators), self.field, order)
            gb = [Polynomial(self.ring, g, False) for g in raw]
            with self._lock:
                self._gb[order] = gb
        return gb

    def leading_monomials(self, order: MonomialOrder = DEGLEX) -> list:
        return [g.leading_monomial(order) for g in self.groebner_basis(order)]

    def normal_form(self, f: Polynomial, order: MonomialOrder = DEGLEX) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch("normal_form: ring mismatch")
        gb = self.groebner_basis(order)
        ops = _Ops(self.field, order)
        r = ops.reduce(dict(f.terms), [dict(g.terms) for g in gb], [g.leading_monomial(order) for g in gb])
        return Polynomial(self.ring, r, False)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.groebner_basis())

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        a = self.groebner_basis()
        b = other.groebner_basis()
        return {frozenset(g.terms.items()) for g in a} == {frozenset(g.terms.items()) for g in b}

    def __hash__(self):
        return hash((self.ring.names, frozenset(frozenset(g.terms.items()) for g in self.groebner_basis())))

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def linear_forms(self) -> list[Polynomial]:
        """Reduced GB elements of degree 1: a basis of the degree-one piece."""
        return [g for g in self.groebner_basis() if g.degree == 1]

    def is_nondegenerate(self) -> bool:
        return not self.linear_forms()

    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    # arithmetic

    def _same(self, other: "Ideal"):
        if self.ring != other.ring:
            raise RingMismatch("ideal ring mismatch")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._same(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._same(other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def intersect(self, other: "Ideal") -> "Ideal":
        """I ∩ J via elimination of an auxiliary variable from tI + (1-t)J."""
        self._same(other)
        T = self.ring.extend("_t", front=True)
        t = T.var(0)
        lift = lambda f: f.lift_from_subring(T)
        gens = [t * lift(f) for f in self.generators] + [(T.one() - t) * lift(g) for g in other.generators]
        order = MonomialOrder("deglex", elim=(0,))
        gb = Ideal(T, gens).groebner_basis(order)
        keep = [g for g in gb if all(m[0] == 0 for m in g.terms)]
        return Ideal(self.ring, [g.coefficient_in_first(0).to_ring(self.ring) for g in keep])

    def quotient(self, other: "Ideal | Polynomial") -> "Ideal":
        """Colon ideal I : J."""
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        self._same(other)
        result = None
        for g in other.generators:
            inter = self.intersect(Ideal(self.ring, [g]))
            q = Ideal(self.ring, [exact_divide(h, g) for h in inter.generators])
            result = q if result is None else result.intersect(q)
        if result is None:  # I : (0) = (1)
            return Ideal(self.ring, [self.ring.one()])
        return result

    def saturate(self, other: "Ideal | Polynomial | int | None" = None) -> "Ideal":
        """I : J^infinity; J defaults to the irrelevant ideal, an int means that variable."""
        if other is None:
            other = Ideal(self.ring, self.ring.gens())
        elif isinstance(other, int):
            other = Ideal(self.ring, [self.ring.var(other)])
        cur = self
        while True:
            nxt = cur.quotient(other)
            if nxt == cur:
                return cur
            cur = nxt

    def eliminate_first(self) -> "Ideal":
        """I ∩ S where S drops the first variable.  Valid for homogeneous I with
        deglex giving x0 top priority."""
        gb = self.groebner_basis(DEGLEX)
        S = self.ring.drop_first()
        return Ideal(S, [g.coefficient_in_first(0) for g in gb if all(m[0] == 0 for m in g.terms)])

    def transform(self, change) -> "Ideal":
        return Ideal(self.ring, [change.apply(g) for g in self.generators])

    def hilbert_data(self):
        from .hilbert import hilbert_data

        if self._hilbert is None:
            self._hilbert = hilbert_data(self)
        return self._hilbert

    def pieces(self, order: MonomialOrder = DEGLEX):
        from .pieces import GradedPieces

        with self._lock:
            gp = self._pieces.get(order)
            if gp is None:
                gp = self._pieces[order] = GradedPieces(self, order)
        return gp

    def to_ring(self, ring: Ring) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])


def exact_divide(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGLEX) -> Polynomial:
    """f / g, raising if g does not divide f."""
    ops = _Ops(f.ring.field, order)
    gm = ops.monic(dict(g.terms))
    lg = ops.lm(gm)
    c = g.terms[lg]
    rem = dict(f.terms)
    q: dict = {}
    while rem:
        m = ops.lm(rem)
        if not mono_divides(lg, m):
            raise ValueError(f"{g} does not divide {f}")
        t = mono_div(m, lg)
        coef = rem[m]
        q[t] = coef
        ops.sub_mul(rem, gm, t, coef)
    F = f.ring.field
    inv = F.inv(c)
    return Polynomial(f.ring, {m: F.mul(v, inv) for m, v in q.items()})


def ideal_ops(kind: str, I: Ideal, J: "Ideal | int | None" = None) -> Ideal:
    """Dispatch for the ideal-theoretic operations by name."""
    if kind == "sum":
        return I + J
    if kind == "product":
        return I * J
    if kind == "intersect":
        return I.intersect(J)
    if kind == "quotient":
        return I.quotient(J)
    if kind == "saturate-by-variable":
        return I.saturate(int(J))
    if kind == "saturate":
        return I.saturate(J)
    if kind == "eliminate-x0":
        return I.eliminate_first()
    raise ValueError(f"unknown ideal operation {kind!r}")


def s_polynomials_reduce_to_zero(gb: Sequence[Polynomial], order: MonomialOrder = DEGLEX) -> bool:
    """Buchberger's criterion on every pair, used to certify a basis."""
    if not gb:
        return True
    F = gb[0].ring.field
    ops = _Ops(F, order)
    G = [ops.monic(dict(g.terms)) for g in gb]
    L = [ops.lm(g) for g in G]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            s = ops.spoly(G[i], L[i], G[j], L[j])
            if ops.reduce(s, G, L):
                return False
    return True

"""Hypothesis strategies for small polynomial rings and ideals."""

from hypothesis import strategies as st

from syzygy import FieldSpec, Ideal, Polynomial, Ring
from syzygy.polynomial import monomials_of_degree

SMALL = FieldSpec(101)


def monomials(nvars: int, max_degree: int = 3):
    return st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars).map(tuple)


@st.composite
def scalars(draw, F=SMALL, nonzero=False):
    if F.characteristic == 0:
        from fractions import Fraction

        num = draw(st.integers(-50, 50).filter(lambda x: x != 0 or not nonzero))
        return Fraction(num, draw(st.integers(1, 20)))
    lo = 1 if nonzero else 0
    return draw(st.integers(lo, F.characteristic - 1))


@st.composite
def polynomials(draw, ring: Ring, max_degree: int = 3, max_terms: int = 5, homogeneous_degree=None):
    F = ring.field
    if homogeneous_degree is not None:
        pool = list(monomials_of_degree(ring.nvars, homogeneous_degree))
        monos = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_terms))
    else:
        monos = draw(st.lists(monomials(ring.nvars, max_degree), min_size=0, max_size=max_terms))
    terms = {}
    for m in monos:
        terms[m] = F.add(terms.get(m, F.zero), draw(scalars(F, nonzero=True)))
    return Polynomial(ring, terms)


@st.composite
def homogeneous_ideals(draw, nvars=None, max_gens=3, max_degree=3, F=SMALL, max_terms=3):
    n = nvars if nvars is not None else draw(st.integers(2, 4))
    ring = Ring.standard(n, F)
    k = draw(st.integers(1, max_gens))
    gens = []
    for _ in range(k):
        d = draw(st.integers(1, max_degree))
        g = draw(polynomials(ring, homogeneous_degree=d, max_terms=max_terms))
        if g.terms:
            gens.append(g)
    return Ideal(ring, gens)


@st.composite
def monomial_binomial_ideals(draw, max_vars=5, max_gens=4, max_degree=3, F=SMALL):
    """Homogeneous monomial or binomial ideals; binomials are m1 - c*m2 with deg m1 = deg m2."""
    n = draw(st.integers(2, max_vars))
    ring = Ring.standard(n, F)
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        d = draw(st.integers(2, max_degree))
        pool = list(monomials_of_degree(n, d))
        m1 = draw(st.sampled_from(pool))
        if draw(st.booleans()):
            m2 = draw(st.sampled_from(pool))
            c = draw(scalars(F, nonzero=True))
            g = Polynomial(ring, {m1: F.one}) - Polynomial(ring, {m2: c})
        else:
            g = Polynomial(ring, {m1: F.one})
        if g.terms:
            gens.append(g)
    return Ideal(ring, gens)

import pytest
from hypothesis import given, strategies as st

from syzygy import DEGLEX, FieldSpec, Ideal, LinearChange, MonomialOrder, Ring
from syzygy import linalg
from syzygy.groebner import buchberger, s_polynomials_reduce_to_zero
from syzygy.polynomial import monomials_of_degree

from strategies import SMALL, homogeneous_ideals, polynomials


@given(I=homogeneous_ideals())
def test_s_pairs_reduce_to_zero(I):
    gb = I.groebner_basis()
    assert s_polynomials_reduce_to_zero(gb)
    again = Ideal(I.ring, gb).groebner_basis()
    assert again == gb


@given(I=homogeneous_ideals(max_gens=2))
def test_gb_in_other_orders(I):
    for order in (MonomialOrder("degrevlex"), MonomialOrder("lex")):
        gb = I.groebner_basis(order)
        assert s_polynomials_reduce_to_zero(gb, order)
        assert all(I.contains(g) for g in gb)


def _membership_by_linear_algebra(I: Ideal, f) -> bool:
    """f in I_m iff f lies in the span of monomial multiples of the generators."""
    m = f.degree
    monos = sorted(monomials_of_degree(I.ring.nvars, m))
    col = {x: k for k, x in enumerate(monos)}
    rows = []
    for g in I.generators:
        d = m - g.degree
        if d < 0:
            continue
        for u in monomials_of_degree(I.ring.nvars, d):
            h = g.mul_term(u, I.field.one)
            rows.append({col[x]: c for x, c in h.terms.items()})
    F = I.field
    A = linalg.zeros((len(rows), len(monos)), F)
    for k, r in enumerate(rows):
        for j, c in r.items():
            A[k, j] = c
    v = linalg.zeros((1, len(monos)), F)
    for x, c in f.terms.items():
        v[0, col[x]] = c
    import numpy as np

    return linalg.rank(np.vstack([A, v]), F) == linalg.rank(A, F)


@given(data=st.data())
def test_normal_form_matches_linear_algebra(data):
    I = data.draw(homogeneous_ideals(nvars=3, max_gens=3, max_degree=2))
    m = data.draw(st.integers(1, 3))
    # a combination of generator multiples (in I) plus optional noise
    f = I.ring.zero()
    for g in I.generators:
        if g.degree <= m:
            f = f + g * data.draw(polynomials(I.ring, homogeneous_degree=m - g.degree)) if m > g.degree else f + g
    if data.draw(st.booleans()):
        f = f + data.draw(polynomials(I.ring, homogeneous_degree=m))
    f = f if f.terms and f.is_homogeneous() else I.ring.zero()
    if not f.terms:
        return
    assert I.contains(f) == _membership_by_linear_algebra(I, f)
    assert (I.normal_form(f) == I.ring.zero()) == I.contains(f)


@given(I=homogeneous_ideals(nvars=3, max_gens=2, max_degree=2))
def test_eliminate_first(I):
    E = I.eliminate_first()
    assert E.ring.names == I.ring.names[1:]
    lifted = [I.ring.parse(g.to_str()) for g in E.generators]
    assert all(I.contains(g) for g in lifted)
    # same ideal as the x0-free part of a genuine elimination order
    elim = MonomialOrder("deglex", elim=(0,))
    other = [g for g in I.groebner_basis(elim) if all(m[0] == 0 for m in g.terms)]
    other = Ideal(E.ring, [E.ring.parse(g.to_str()) for g in other])
    assert other == E


def test_eliminate_first_twisted_cubic():
    R = Ring.standard(4)
    I = Ideal.from_strings(R, ["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"])
    # (1:0:0:0) lies on the curve: the image is a conic
    E = I.eliminate_first()
    assert [g.to_str() for g in E.groebner_basis()] == ["x1*x3-x2^2"]
    # from an outside point the image is a plane cubic
    L = LinearChange([[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], I.field)
    E2 = I.transform(L).eliminate_first()
    assert len(E2.groebner_basis()) == 1 and E2.groebner_basis()[0].degree == 3


@given(I=homogeneous_ideals(nvars=3, max_gens=2, max_degree=2),
       entries=st.lists(st.integers(0, 100), min_size=9, max_size=9))
def test_hilbert_degree_invariant_under_change(I, entries):
    try:
        L = LinearChange([entries[0:3], entries[3:6], entries[6:9]], SMALL)
    except ValueError:
        return
    h0, h1 = I.hilbert_data(), I.transform(L).hilbert_data()
    assert (h0.degree, h0.dim) == (h1.degree, h1.dim)
    assert [h0.hilbert_function(m) for m in range(6)] == [h1.hilbert_function(m) for m in range(6)]


@given(I=homogeneous_ideals(nvars=3, max_gens=2, max_degree=2),
       J=homogeneous_ideals(nvars=3, max_gens=2, max_degree=2))
def test_intersection_and_product(I, J):
    K = I.intersect(J)
    P = I * J
    assert K.contains_ideal(P)
    assert I.contains_ideal(K) and J.contains_ideal(K)
    assert (I + J).contains_ideal(I)


def test_saturation_and_quotient():
    R = Ring.standard(3)
    m = Ideal(R, list(R.gens()))
    I = Ideal.from_strings(R, ["x0*x1", "x0*x2"]) * m
    assert I.saturate() == Ideal.from_strings(R, ["x0*x1", "x0*x2"])
    assert Ideal.from_strings(R, ["x0^2*x1"]).quotient(R.parse("x0")) == Ideal.from_strings(R, ["x0*x1"])


def test_unit_and_zero():
    R = Ring.standard(2)
    assert Ideal.from_strings(R, ["x0", "x1", "x0^2+1"]).is_unit()
    assert Ideal(R, []).is_zero()


def test_twisted_cubic_hilbert():
    R = Ring.standard(4)
    I = Ideal.from_strings(R, ["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"])
    h = I.hilbert_data()
    assert (h.degree, h.dim, h.codim) == (3, 2, 2)
    assert [h.hilbert_function(m) for m in range(5)] == [1, 4, 7, 10, 13]

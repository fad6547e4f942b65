import json
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from syzygy import (BettiTable, FieldSpec, Ideal, LinearChange, Ring, TruncatedTable, betti_table, build,
                    resolution_betti, satisfies_N, strand_invariants)
from syzygy.catalog import STANDARD
from syzygy.hilbert import monomial_betti, quotient_regularity_bound

from strategies import SMALL, homogeneous_ideals, monomial_binomial_ideals


def _as_dict(T: BettiTable) -> dict:
    return dict(T.nonzero())


def _complete(I):
    T = betti_table(I)
    assert T.complete
    return T


@settings(max_examples=25)
@given(I=homogeneous_ideals(max_gens=3, max_degree=2))
def test_alternating_sum_recovers_hilbert_function(I):
    T = betti_table(I)
    if not T.complete:
        return
    n = I.ring.nvars
    h = I.hilbert_data()
    for d in range(T.pmax + T.qmax + 2):
        s = sum((-1) ** p * v * comb(d - p - q + n - 1, n - 1)
                for (p, q), v in T.nonzero().items() if d - p - q >= 0)
        assert s == h.hilbert_function(d)


@settings(max_examples=15)
@given(I=monomial_binomial_ideals(max_vars=4, max_gens=3, max_degree=3))
def test_koszul_matches_resolution_oracle(I):
    T = betti_table(I)
    if not T.complete:
        return
    assert _as_dict(T) == resolution_betti(I)


@settings(max_examples=25)
@given(data=st.data())
def test_monomial_ideals_match_lcm_lattice(data):
    I = data.draw(monomial_binomial_ideals(max_vars=4, max_gens=4, max_degree=3).filter(
        lambda J: all(len(g.terms) == 1 for g in J.generators)))
    T = _complete(I)
    lattice = monomial_betti([next(iter(g.terms)) for g in I.generators], I.ring.nvars)
    expected = {(i + 1, deg - i - 1): v for (i, deg), v in lattice.items() if v}
    expected[(0, 0)] = 1
    assert _as_dict(T) == expected


@pytest.mark.parametrize("name", STANDARD)
def test_catalog_tables_match_metadata_and_oracle(name):
    E = build(name)
    T = _complete(E.ideal)
    assert _as_dict(T) == dict(E.expected)
    if E.ideal.ring.nvars <= 6 and name != "elliptic_nc5":
        assert _as_dict(T) == resolution_betti(E.ideal)


@pytest.mark.parametrize("name", ["rnc(3)", "skew_lines", "ci_quadrics(1)", "conics_meet_pt"])
def test_table_invariant_under_change_of_coordinates(name):
    import random

    E = build(name)
    n = E.ideal.ring.nvars
    rng = random.Random(name)
    while True:
        M = [[rng.randrange(32003) for _ in range(n)] for _ in range(n)]
        try:
            L = LinearChange(M, E.ideal.field)
            break
        except ValueError:
            continue
    assert _as_dict(_complete(E.ideal)) == _as_dict(_complete(E.ideal.transform(L)))


def test_twisted_cubic_over_rationals():
    R = Ring.standard(4, FieldSpec(0))
    I = Ideal.from_strings(R, ["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"])
    assert _as_dict(_complete(I)) == {(0, 0): 1, (1, 1): 3, (2, 1): 2}


def test_characteristic_dependence_is_visible():
    # the ideal of squares has the same table everywhere, but (x^p) in char p behaves as expected
    R = Ring.standard(3, FieldSpec(3))
    I = Ideal.from_strings(R, ["x0^3+x1^3+x2^3"])
    assert _as_dict(_complete(I)) == {(0, 0): 1, (1, 2): 1}


def test_strand_invariants_twisted_cubic():
    T = _complete(build("rnc(3)").ideal)
    inv = strand_invariants(T)
    assert (inv.a, inv.b, inv.reg, inv.pd, inv.depth) == (2, 3, 2, 2, 2)


def test_strand_invariants_elliptic_normal_curve():
    T = _complete(build("elliptic_nc5").ideal)
    assert T.strand(1, 1, 3) == [5, 5, 0]
    inv = strand_invariants(T)
    assert (inv.a, inv.b, inv.reg) == (2, 3, 3)


def test_skew_lines_have_pd_three():
    inv = strand_invariants(_complete(build("skew_lines").ideal))
    assert (inv.pd, inv.depth) == (3, 1)


def test_truncated_tables_refuse_questions_they_cannot_answer():
    I = build("elliptic_nc5").ideal
    T = betti_table(I, qmax=1)
    assert not T.complete
    with pytest.raises(TruncatedTable):
        T[3, 2]
    with pytest.raises(TruncatedTable):
        strand_invariants(T)
    with pytest.raises(TruncatedTable):
        satisfies_N(T, 2, 3)
    assert T[1, 1] == 5


def test_truncation_is_not_masked_when_violation_found():
    T = betti_table(build("elliptic_nc5").ideal)
    assert satisfies_N(T, 2, 2) and not satisfies_N(T, 2, 3)


def test_regularity_bound_is_respected():
    for name in ("rnc(4)", "elliptic_nc5", "rational_quartic_p3"):
        I = build(name).ideal
        bound = quotient_regularity_bound(I)
        T = betti_table(I, qmax=bound + 2)
        assert max(q for (p, q) in T.nonzero()) <= bound


def test_renderings():
    T = _complete(build("rnc(3)").ideal)
    text = T.to_text()
    assert "1: - 3 2" in text and "total: 1 3 2" in text
    assert T.to_csv().splitlines()[0].startswith("q")
    assert "| 1 | - | 3 | 2 |" in T.to_markdown()
    d = json.loads(T.to_json())
    assert d["schema"] == 1 and [1, 1, 3] in d["entries"]
    assert BettiTable.from_dict(d) == T

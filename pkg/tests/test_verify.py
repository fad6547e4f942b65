import json
import random

import pytest

from syzygy import Ideal, Ring, build
from syzygy.catalog import CatalogEntry
from syzygy import verify as V


def test_strand_checks_on_twisted_cubic():
    rep = V.check_strand("rnc(3)", seed=1)
    assert not rep.failed and rep.refused is None
    names = [a.name for a in rep.assertions]
    assert any("equality at p=a+1" in n for n in names)


def test_strand_refuses_points_off_the_variety():
    rep = V.check_strand("rnc(3)", point=(1, 1, 0, 0))
    assert rep.refused and not rep.assertions


def test_strand_skips_equalities_when_t_is_small():
    E = build("rational_quartic_p3")
    rep = V.check_strand(E, seed=3)
    assert not rep.failed
    assert any(a.verdict == V.SKIPPED for a in rep.assertions)


def test_skew_lines_are_out_of_category_not_a_violation():
    rep = V.check_extremal("skew_lines")
    assert not rep.failed
    assert rep.info["classification"].startswith("out-of-category")
    exceed = [a for a in rep.assertions if a.name.startswith("beta_2,1")]
    assert exceed[0].lhs == 4 and exceed[0].rhs == 2


def test_skew_lines_would_fail_if_declared_a_variety():
    E = build("skew_lines")
    forged = CatalogEntry("forged", (), E.ideal, True, "Var", -1)
    assert V.check_extremal(forged).failed


@pytest.mark.parametrize("name", ["rnc(3)", "rnc(4)", "rnc(5)", "scroll(1,2)", "veronese5"])
def test_minimal_degree_flags_all_true(name):
    rep = V.check_extremal(name)
    assert not rep.failed and all(rep.info["flags"].values())


@pytest.mark.parametrize("name", ["ci_quadrics(1)", "ci_quadrics(2)", "elliptic_nc5"])
def test_del_pezzo_flags_all_true(name):
    rep = V.check_next_extremal(name)
    assert not rep.failed and all(rep.info["flags"].values())


def test_non_acm_delta_one_has_all_flags_false():
    rep = V.check_next_extremal("rational_quartic_p3")
    assert not rep.failed and not any(rep.info["flags"].values())


def test_next_extremal_refuses_minimal_degree():
    assert V.check_next_extremal("rnc(3)").refused


def test_kp1_skips_reducible_inputs():
    rep = V.check_kp1("line_cup_tcubic")
    assert [a.verdict for a in rep.assertions] == [V.SKIPPED]


@pytest.mark.parametrize("name", ["rnc(3)", "rnc(4)", "elliptic_nc5", "ci_quadrics(1)"])
def test_reg_depth(name):
    rep = V.check_reg_depth(name, seed=2)
    assert not rep.failed and rep.count(V.PASS) == 2


def test_np_transfer_reports_vacuous_implications():
    rep = V.check_np_transfer("elliptic_nc5", d=2, p0=3, seed=0)
    assert not rep.failed
    assert rep.info["N_dp(I)"] is False
    assert any(a.verdict == V.VACUOUS for a in rep.assertions)


def test_open_question_is_recorded_not_asserted():
    rep = V.explore_ab("rnc(5)", seed=4, trials=2)
    verdicts = {a.verdict for a in rep.assertions}
    assert V.OPEN in verdicts and not rep.failed
    assert sum(rep.info["b_tally"].values()) == 2


def test_pei_check():
    rep = V.check_pei("rnc(4)", seed=1, points=2)
    assert not rep.failed and rep.count(V.PASS) > 10


def test_diagonal_cancellation_pairs():
    rep = V.check_diagonal_cancellation()
    assert not rep.failed
    assert rep.info["pairs"] == [[1, 2, 1], [2, 2, 2]]


def test_failed_reports_carry_a_reproduction():
    E = build("skew_lines")
    rep = V.check_extremal(CatalogEntry("forged", (), E.ideal, True, "Var", -1), seed=5)
    d = rep.to_dict()
    assert "field GF 32003" in d["reproduce"]["ideal_file"] and d["reproduce"]["seed"] == 5


def test_shuffled_order_gives_same_reports():
    tasks = V._suite_tasks("extremal", seed=7, points=1) + V._suite_tasks("strand", seed=7, points=1)
    first = {cid: json.dumps(fn().to_dict(), sort_keys=True) for cid, fn in tasks}
    random.Random(0).shuffle(tasks)
    second = {cid: json.dumps(fn().to_dict(), sort_keys=True) for cid, fn in tasks}
    assert first == second


def test_report_json_has_no_timings():
    res = V.run_suite("bounds", seed=1)
    d = json.loads(res.to_json())
    assert d["schema"] == 1 and "seconds" not in json.dumps(d)
    assert "seconds" in json.dumps(res.to_dict(with_timing=True))


def test_threads_do_not_change_reports():
    a = V.run_suite("kp1", seed=3).to_json()
    b = V.run_suite("kp1", seed=3, workers=4).to_json()
    assert a == b


def test_unknown_suite():
    with pytest.raises(ValueError):
        V.run_suite("nope")

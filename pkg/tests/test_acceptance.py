"""One test per acceptance criterion; each prints a single [PASS]/[FAIL] line."""

import random
import subprocess
import sys
import time
from math import comb

import pytest

from syzygy import Ideal, Polynomial, Ring, betti_table, bounds, build, resolution_betti
from syzygy import verify as V
from syzygy.hilbert import quotient_regularity_bound
from syzygy.polynomial import monomials_of_degree


def _table(name):
    T = betti_table(build(name).ideal)
    assert T.complete
    return dict(T.nonzero())


def test_line_union_twisted_cubic_table(verdict):
    t0 = time.perf_counter()
    got = _table("line_cup_tcubic")
    dt = time.perf_counter() - t0
    ok = got == {(0, 0): 1, (1, 1): 6, (2, 1): 8, (3, 1): 3} and dt < 10
    verdict("1 line + twisted cubic table (1; 6,8,3)", ok, f"{got} in {dt:.2f}s")
    assert ok


def test_skew_lines_exceed_and_are_classified(verdict):
    t0 = time.perf_counter()
    got = _table("skew_lines")
    rep = V.check_extremal("skew_lines")
    dt = time.perf_counter() - t0
    strand = [got.get((p, 1), 0) for p in (1, 2, 3)]
    vmd = [bounds.vmd_betti(2, p) for p in (1, 2)]
    ok = (strand == [4, 4, 1] and vmd == [3, 2] and strand[0] > vmd[0] and strand[1] > vmd[1]
          and not rep.failed and rep.info["classification"].startswith("out-of-category") and dt < 5)
    verdict("2 skew lines strand (4,4,1) exceeds (3,2), out of category", ok,
            f"strand {strand}, {rep.info.get('classification')} in {dt:.2f}s")
    assert ok


def test_double_point_configurations_and_diagonal_cancellation(verdict):
    t0 = time.perf_counter()
    x1, x2 = _table("conic_cup_tcubic_dbl"), _table("planecubic_cup_conic")
    rep = V.check_diagonal_cancellation()
    dt = time.perf_counter() - t0
    ok1 = x1 == {(0, 0): 1, (1, 1): 5, (2, 1): 5, (3, 2): 1}
    ok2 = x2 == {(0, 0): 1, (1, 1): 5, (2, 1): 6, (3, 1): 2, (1, 2): 1, (2, 2): 2, (3, 2): 1}
    ok = ok1 and ok2 and not rep.failed and dt < 30
    verdict("3 X1 (5,5,-)/(-,-,1), X2 (5,6,2)/(1,2,1), diagonal cancellation", ok,
            f"pairs {rep.info['pairs']} in {dt:.2f}s")
    assert ok


def test_minimal_degree_formula(verdict):
    t0 = time.perf_counter()
    bad = []
    for name in ("rnc(3)", "rnc(4)", "rnc(5)", "scroll(1,2)"):
        T = _table(name)
        e = build(name).ideal.hilbert_data().codim
        if any(T.get((p, 1), 0) != p * comb(e + 1, p + 1) for p in range(1, e + 1)):
            bad.append(name)
        flags = V.check_extremal(name).info["flags"]
        if not (len(flags) == 6 and all(flags.values())):
            bad.append(f"{name} flags")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    verdict("4 beta_p1 = p C(e+1,p+1) and six true characterizations", ok, f"bad={bad} in {dt:.2f}s")
    assert ok


def test_projection_strand_inequalities(verdict):
    failures, equalities, points = [], 0, 0
    for name in ("rnc(3)", "rnc(4)", "elliptic_nc5"):
        for k in range(5):
            rep = V.check_strand(name, seed=2024, check_id=f"strand/{name}/{k}")
            assert rep.refused is None
            points += 1
            failures += [(name, a.name) for a in rep.assertions if a.verdict == V.FAIL]
            equalities += sum(1 for a in rep.assertions if a.name.startswith("equality") and a.verdict == V.PASS)
            assert any(a.name.startswith("quadrics") and a.verdict == V.PASS for a in rep.assertions)
    ok = not failures and points == 15
    verdict("5 strand bounds at 5 smooth points each on rnc(3), rnc(4), elliptic_nc5", ok,
            f"{points} points, {equalities} equalities checked, failures {failures}")
    assert ok


def test_partial_elimination_certification(verdict):
    from syzygy.catalog import STANDARD

    failures = []
    for name in STANDARD:
        rep = V.check_pei(name, seed=7, points=3, cap=6)
        if rep.refused or rep.failed:
            failures.append((name, rep.refused, [a.name for a in rep.assertions if a.verdict == V.FAIL]))
    ok = not failures
    verdict("6 extracted K_i match the definition, exact sequences, tangent spaces", ok,
            f"{len(STANDARD)} entries x 3 points, failures {failures}")
    assert ok


def test_regularity_and_depth_transfer(verdict):
    failures = []
    for name in ("rnc(3)", "rnc(4)", "elliptic_nc5", "ci_quadrics(1)"):
        rep = V.check_reg_depth(name, seed=7)
        if rep.refused or rep.failed or rep.count(V.PASS) != 2:
            failures.append(name)
    ok = not failures
    verdict("7 reg(I) = max(reg K~_{s-1}, s+1) and depth equality", ok, f"failures {failures}")
    assert ok


def test_combinatorial_suite(verdict):
    t0 = time.perf_counter()
    rep = V.check_combinatorics(emax=20, rmax=12)
    dt = time.perf_counter() - t0
    ok = not rep.failed and dt < 5
    verdict("8 binomial identities, inheritance totals, del Pezzo difference", ok, f"{dt:.2f}s")
    assert ok


def _random_ideal(rng: random.Random) -> Ideal:
    n = rng.randint(2, 5)
    R = Ring.standard(n)
    gens = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(2, 3)
        pool = sorted(monomials_of_degree(n, d))
        m1 = rng.choice(pool)
        terms = {m1: 1}
        if rng.random() < 0.5:
            m2 = rng.choice(pool)
            if m2 != m1:
                terms[m2] = R.field(-rng.randint(1, 5))
        gens.append(Polynomial(R, terms))
    return Ideal(R, gens)


def test_koszul_equals_resolution_on_random_ideals(verdict):
    rng = random.Random(20240501)
    t0 = time.perf_counter()
    ideals = []
    while len(ideals) < 10:
        I = _random_ideal(rng)
        bound = quotient_regularity_bound(I)
        if bound is not None and bound <= 4:
            ideals.append(I)
    mismatches = [str(I) for I in ideals if dict(betti_table(I).nonzero()) != resolution_betti(I)]
    dt = time.perf_counter() - t0
    ok = not mismatches and dt < 120
    verdict("9 Koszul tables equal resolution tables on 10 random ideals", ok,
            f"mismatches {mismatches} in {dt:.2f}s")
    assert ok


def test_verify_reports_are_byte_identical(verdict, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        res = subprocess.run([sys.executable, "-m", "syzygy", "verify", "--suite", "all", "--seed", "7",
                              "--report", str(path)], capture_output=True, text=True)
        outs.append((res.returncode, path.read_bytes()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    verdict("10 two verify runs give identical JSON and exit 0", ok,
            f"exit codes {[o[0] for o in outs]}, {len(outs[0][1])} bytes")
    assert ok

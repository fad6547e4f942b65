"""Checkers that compute both sides of the linear-strand inequalities on concrete ideals.

Each checker returns a :class:`CheckReport` listing every comparison with
its two sides and a verdict.  Verdicts:

PASS / FAIL          a theorem's assertion evaluated on this instance
SKIPPED              preconditions not met (reason recorded)
VACUOUS              an implication whose hypothesis is false here
OPEN-RECORDED        data on an open question; never a failure
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Any

from . import bounds
from .betti import (BettiTable, TruncatedTable, betti_table, module_betti_S, satisfies_N,
                    strand_invariants)
from .catalog import CatalogEntry, build
from .groebner import Ideal
from .pei import (CERTIFY_DEGREE, SingularPoint, ktilde_module, pei_filtration,
                  tangent_space_ideal)
from .polynomial import Ring
from .projection import (SamplingError, delta_genus, inner_project, is_smooth_point,
                         sample_smooth_point)

PASS, FAIL, SKIPPED, VACUOUS, OPEN = "PASS", "FAIL", "SKIPPED", "VACUOUS", "OPEN-RECORDED"
SCHEMA_VERSION = 1

_RELATIONS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
}


@dataclass
class Assertion:
    name: str
    lhs: Any
    relation: str
    rhs: Any
    verdict: str
    note: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "lhs": self.lhs, "relation": self.relation, "rhs": self.rhs,
             "verdict": self.verdict}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CheckReport:
    check_id: str
    instance: str
    seed: int | None = None
    assertions: list = dc_field(default_factory=list)
    info: dict = dc_field(default_factory=dict)
    timing: float = 0.0
    reproduce: dict | None = None
    refused: str | None = None

    def expect(self, name: str, lhs, relation: str, rhs, note: str = "") -> bool:
        ok = _RELATIONS[relation](lhs, rhs)
        self.assertions.append(Assertion(name, lhs, relation, rhs, PASS if ok else FAIL, note))
        return ok

    def record(self, name: str, lhs, relation: str, rhs, verdict: str, note: str = "") -> None:
        self.assertions.append(Assertion(name, lhs, relation, rhs, verdict, note))

    def skip(self, name: str, reason: str) -> None:
        self.assertions.append(Assertion(name, None, "", None, SKIPPED, reason))

    @property
    def failed(self) -> bool:
        return any(a.verdict == FAIL for a in self.assertions)

    def count(self, verdict: str) -> int:
        return sum(a.verdict == verdict for a in self.assertions)

    @property
    def status(self) -> str:
        if self.refused:
            return "REFUSED"
        return FAIL if self.failed else PASS

    def to_dict(self, with_timing: bool = False) -> dict:
        d = {
            "check": self.check_id,
            "instance": self.instance,
            "seed": self.seed,
            "status": self.status,
            "assertions": [a.to_dict() for a in self.assertions],
            "info": self.info,
        }
        if self.refused:
            d["refused"] = self.refused
        if self.reproduce and self.failed:
            d["reproduce"] = self.reproduce
        if with_timing:
            d["seconds"] = round(self.timing, 3)
        return d


def _entry(target, name: str | None = None, irreducible: bool = True, category: str = "Var") -> CatalogEntry:
    if isinstance(target, CatalogEntry):
        return target
    if isinstance(target, str):
        return build(target)
    return CatalogEntry(name or "ideal", (), target, irreducible, category, None)


def _reproduce(entry: CatalogEntry, seed) -> dict:
    from .io import format_ideal_file

    return {"ideal_file": format_ideal_file(entry.ideal, comment=entry.name), "seed": seed}


def _rng(seed, check_id: str) -> random.Random:
    return random.Random(f"{seed}:{check_id}")


def _complete_table(ideal: Ideal) -> BettiTable:
    T = betti_table(ideal)
    if not T.complete:
        raise TruncatedTable(f"no regularity certificate for {ideal}")
    return T


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.timing = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _point_list(point):
    return [int(x) for x in point]


# first linear strand under inner projection


@_timed
def check_strand(target, point=None, seed: int = 0, check_id: str | None = None) -> CheckReport:
    """Compare the linear strand of X with that of X_q at a smooth point q."""
    E = _entry(target)
    I = E.ideal
    check_id = check_id or f"strand/{E.name}"
    rep = CheckReport(check_id, E.name, seed, reproduce=_reproduce(E, seed))
    h = I.hilbert_data()
    e = h.codim
    if point is None:
        try:
            point = sample_smooth_point(I, _rng(seed, check_id))
        except SamplingError as exc:
            rep.refused = str(exc)
            return rep
    if not is_smooth_point(I, point, e):
        rep.refused = f"point {list(point)} is not a smooth point"
        return rep
    rep.info["point"] = _point_list(point)
    try:
        TX = _complete_table(I)
        proj = inner_project(I, point)
        TQ = _complete_table(proj.image)
        filt = pei_filtration(I, point, e)
    except TruncatedTable as exc:
        rep.refused = str(exc)
        return rep
    t = proj.t
    K1 = filt.K(1)
    K1_table = betti_table(K1) if not K1.is_unit() else None
    inv = strand_invariants(TX)
    a = inv.a
    rep.info.update({"e": e, "t": t, "a": a, "s": filt.s, "strand_X": TX.strand(1, 1, e + 1),
                     "strand_Xq": TQ.strand(1, 1, e + 1)})

    def bx(p, q):
        return TX[p, q] if p >= 0 else 0

    def bq(p, q):
        return TQ[p, q] if p >= 0 else 0

    def bK1(p, q):
        # Betti numbers of the ideal K_1 read from the table of S/K_1
        if K1_table is None or p + 1 < 1:
            return 0
        return K1_table[p + 1, q - 1]

    rep.expect("t <= e", t, "<=", e)
    for p in range(1, e + 2):
        base = bq(p, 1) + bq(p - 1, 1)
        rep.expect(f"upper bound with C(t,p), p={p}", bx(p, 1), "<=", base + comb(t, p))
        rep.expect(f"upper bound with C(e,p), p={p}", bx(p, 1), "<=", base + comb(e, p))
        lower = base + comb(t, p) - bq(p - 1, 2) - bK1(p - 1, 2)
        rep.expect(f"lower bound, p={p}", bx(p, 1), ">=", lower)
    rep.expect("quadrics: beta_11(X) = beta_11(X_q) + t", bx(1, 1), "==", bq(1, 1) + t)
    if a < 1:
        rep.skip("equalities through a(X)", "a(X) = 0")
    elif t != e:
        rep.skip("equalities through a(X)", f"t = {t} < e = {e} at this point")
    else:
        for p in range(1, a + 1):
            rep.expect(f"equality for p={p} <= a", bx(p, 1), "==", bq(p, 1) + bq(p - 1, 1) + comb(e, p))
        rep.expect(f"equality at p=a+1={a + 1}", bx(a + 1, 1), "==",
                   bq(a + 1, 1) + bq(a, 1) - bq(a, 2) + comb(e, a + 1))
    return rep


@_timed
def check_kp1(target, seed: int = 0) -> CheckReport:
    """Vanishing of beta_{p,1} beyond the codimension, and at p = e off minimal degree."""
    E = _entry(target)
    rep = CheckReport(f"kp1/{E.name}", E.name, seed, reproduce=_reproduce(E, seed))
    if not E.irreducible:
        rep.skip("beta_p1 = 0 for p > e", "not irreducible: outside the category where the vanishing is a theorem")
        return rep
    T = _complete_table(E.ideal)
    h = E.ideal.hilbert_data()
    e = h.codim
    for p in range(e + 1, E.ideal.ring.nvars + 1):
        rep.expect(f"beta_{p},1 = 0 (p > e)", T[p, 1], "==", 0)
    delta = h.degree - e - 1
    rep.info.update({"e": e, "delta": delta})
    if delta > 0:
        rep.expect(f"beta_{e},1 = 0 off minimal degree", T[e, 1], "==", 0)
    else:
        rep.skip("beta_e1 = 0", "minimal degree")
    return rep


def _acm(T: BettiTable, ideal: Ideal) -> bool:
    inv = strand_invariants(T)
    return inv.depth == ideal.hilbert_data().dim


@_timed
def check_extremal(target, seed: int = 0) -> CheckReport:
    """Bound beta_{p,1} <= p C(e+1,p+1) and the six equivalent characterizations."""
    E = _entry(target)
    I = E.ideal
    rep = CheckReport(f"extremal/{E.name}", E.name, seed, reproduce=_reproduce(E, seed))
    if I.linear_forms():
        rep.refused = "degenerate: the ideal contains linear forms"
        return rep
    T = _complete_table(I)
    h = I.hilbert_data()
    e = h.codim
    inv = strand_invariants(T)
    in_category = E.category in ("Var", "CC1")
    exceeds = []
    for p in range(1, e + 2):
        bound = bounds.vmd_betti(e, p)
        if in_category:
            rep.expect(f"beta_{p},1 <= p C(e+1,p+1)", T[p, 1], "<=", bound)
        else:
            ok = T[p, 1] <= bound
            if not ok:
                exceeds.append(p)
            rep.record(f"beta_{p},1 <= p C(e+1,p+1)", T[p, 1], "<=", bound, SKIPPED,
                       "holds" if ok else "exceeds the bound; instance is outside Var/CC1")
    flags = {
        "minimal degree": h.degree == e + 1,
        "2-regular": all(q <= 1 for (p, q) in T.nonzero() if p >= 1),
        "a >= e": inv.a >= e,
        "beta_11 maximal": T[1, 1] == comb(e + 1, 2),
        "some beta_p1 maximal": any(T[p, 1] == bounds.vmd_betti(e, p) for p in range(1, e + 1)),
        "all beta_p1 maximal": all(T[p, 1] == bounds.vmd_betti(e, p) for p in range(1, e + 1)),
    }
    rep.info.update({"e": e, "degree": h.degree, "a": inv.a, "b": inv.b, "flags": flags,
                     "category": E.category})
    if in_category:
        rep.expect("characterizations agree", len(set(flags.values())), "==", 1)
    else:
        rep.info["classification"] = "out-of-category" + (f"; exceeds at p={exceeds}" if exceeds else "")
        rep.record("characterizations agree", len(set(flags.values())), "==", 1, SKIPPED,
                   "not asserted outside Var/CC1")
    return rep


@_timed
def check_next_extremal(target, seed: int = 0) -> CheckReport:
    """Bound beta_{p,1} <= p C(e+1,p+1) - C(e,p-1) off minimal degree, and the del Pezzo characterizations."""
    E = _entry(target)
    I = E.ideal
    rep = CheckReport(f"next_extremal/{E.name}", E.name, seed, reproduce=_reproduce(E, seed))
    h = I.hilbert_data()
    e = h.codim
    if I.linear_forms():
        rep.refused = "degenerate: the ideal contains linear forms"
        return rep
    delta = h.degree - e - 1
    if delta < 1 or e < 2:
        rep.refused = f"needs Delta >= 1 and e >= 2 (Delta = {delta}, e = {e})"
        return rep
    T = _complete_table(I)
    inv = strand_invariants(T)
    in_category = E.category == "Var"
    for p in range(1, e + 2):
        bound = bounds.delpezzo_betti(e, p)
        if in_category:
            rep.expect(f"beta_{p},1 <= del Pezzo bound", T[p, 1], "<=", bound)
        else:
            ok = T[p, 1] <= bound
            rep.record(f"beta_{p},1 <= del Pezzo bound", T[p, 1], "<=", bound, SKIPPED,
                       "holds" if ok else "exceeds; not a theorem outside Var")
    acm = inv.depth == h.dim
    flags = {
        "ACM and Delta = 1": acm and delta == 1,
        "a = e-1": inv.a == e - 1,
        "beta_11 = C(e+1,2) - 1": T[1, 1] == comb(e + 1, 2) - 1,
        "some beta_p1 attains": any(T[p, 1] == bounds.delpezzo_betti(e, p) for p in range(1, e)),
        "all beta_p1 attain": all(T[p, 1] == bounds.delpezzo_betti(e, p) for p in range(1, e + 1)),
    }
    rep.info.update({"e": e, "delta": delta, "acm": acm, "a": inv.a, "flags": flags, "category": E.category})
    if in_category:
        rep.expect("characterizations agree", len(set(flags.values())), "==", 1)
    else:
        rep.record("characterizations agree", len(set(flags.values())), "==", 1, SKIPPED,
                   "not asserted outside Var")
    return rep


# regularity, depth and N_{d,p} through the elimination filtration


def _module_reg(table: BettiTable):
    qs = [q for (p, q), v in table.nonzero().items()]
    return max(qs) if qs else None


@_timed
def check_reg_depth(target, point=None, seed: int = 0) -> CheckReport:
    """reg(I) = max(reg K~_{s-1}, s+1); depth is preserved by the projection when s = 1."""
    E = _entry(target)
    I = E.ideal
    check_id = f"reg_depth/{E.name}"
    rep = CheckReport(check_id, E.name, seed, reproduce=_reproduce(E, seed))
    e = I.hilbert_data().codim
    if point is None:
        try:
            point = sample_smooth_point(I, _rng(seed, check_id))
        except SamplingError as exc:
            rep.refused = str(exc)
            return rep
    if not is_smooth_point(I, point, e):
        rep.refused = "point is not smooth"
        return rep
    rep.info["point"] = _point_list(point)
    filt = pei_filtration(I, point, e)
    s = filt.s
    T = _complete_table(I)
    reg_I = strand_invariants(T).reg
    mod = ktilde_module(filt, s - 1)
    KT = module_betti_S(mod)
    if not KT.complete:
        rep.refused = "no regularity certificate for K~_{s-1}"
        return rep
    reg_K = _module_reg(KT)
    rhs = max(reg_K if reg_K is not None else -1, s + 1)
    rep.info.update({"s": s, "reg_I": reg_I, "reg_Ktilde": reg_K})
    rep.expect("reg(I) = max(reg K~_{s-1}, s+1)", reg_I, "==", rhs)
    if s == 1:
        proj = inner_project(I, point)
        TQ = _complete_table(proj.image)
        dX = strand_invariants(T).depth
        dQ = strand_invariants(TQ).depth
        rep.info.update({"depth_X": dX, "depth_Xq": dQ})
        rep.expect("depth(X) = depth(X_q)", dX, "==", dQ)
    else:
        rep.skip("depth(X) = depth(X_q)", f"s = {s} != 1")
    return rep


@_timed
def check_np_transfer(target, point=None, d: int = 2, p0: int = 1, seed: int = 0) -> CheckReport:
    """Both directions of the N_{d,p} transfer between I and K~_{s-1}, as material conditionals."""
    E = _entry(target)
    I = E.ideal
    check_id = f"np/{E.name}/d{d}p{p0}"
    rep = CheckReport(check_id, E.name, seed, reproduce=_reproduce(E, seed))
    e = I.hilbert_data().codim
    if point is None:
        try:
            point = sample_smooth_point(I, _rng(seed, check_id))
        except SamplingError as exc:
            rep.refused = str(exc)
            return rep
    rep.info["point"] = _point_list(point)
    filt = pei_filtration(I, point, e)
    s = filt.s
    T = _complete_table(I)
    KT = module_betti_S(ktilde_module(filt, s - 1))
    if not KT.complete:
        rep.refused = "no regularity certificate for K~_{s-1}"
        return rep
    nz = KT.nonzero()
    n_I = satisfies_N(T, d, p0)

    def k_vanish(pbound):
        return all(not (0 <= p < pbound and q > d) for (p, q) in nz)

    rep.info.update({"s": s, "d": d, "p0": p0, "N_dp(I)": n_I})
    if d >= s:
        concl = k_vanish(p0 - 1)
        if n_I:
            rep.expect("N_{d,p0}(I) => K~_{s-1} vanishing below p0-1", concl, "==", True)
        else:
            rep.record("N_{d,p0}(I) => K~_{s-1} vanishing below p0-1", n_I, "=>", concl, VACUOUS)
    else:
        rep.skip("forward transfer", f"d = {d} < s = {s}")
    if d >= s + 1:
        hyp = k_vanish(p0)
        if hyp:
            rep.expect("K~_{s-1} vanishing below p0 => N_{d,p0}(I)", n_I, "==", True)
        else:
            rep.record("K~_{s-1} vanishing below p0 => N_{d,p0}(I)", hyp, "=>", n_I, VACUOUS)
    else:
        rep.skip("backward transfer", f"d = {d} < s + 1 = {s + 1}")
    return rep


@_timed
def explore_ab(target, seed: int = 0, trials: int = 3) -> CheckReport:
    """a(X_q) >= a(X) - 1 (asserted) and b(X_q) <= b(X) - 1 (open; recorded only)."""
    E = _entry(target)
    I = E.ideal
    check_id = f"explore_ab/{E.name}"
    rep = CheckReport(check_id, E.name, seed, reproduce=_reproduce(E, seed))
    e = I.hilbert_data().codim
    if e < 2:
        rep.refused = "hypersurface: nothing to project"
        return rep
    rng = _rng(seed, check_id)
    T = _complete_table(I)
    inv = strand_invariants(T)
    tally = {"b dropped": 0, "b did not drop": 0}
    points = []
    for k in range(trials):
        try:
            q = sample_smooth_point(I, rng)
        except SamplingError as exc:
            rep.refused = str(exc)
            return rep
        points.append(_point_list(q))
        TQ = _complete_table(inner_project(I, q).image)
        iq = strand_invariants(TQ)
        rep.expect(f"a(X_q) >= a(X) - 1 [trial {k}]", iq.a, ">=", inv.a - 1)
        dropped = iq.b <= inv.b - 1
        tally["b dropped" if dropped else "b did not drop"] += 1
        rep.record(f"b(X_q) <= b(X) - 1 [trial {k}]", iq.b, "<=", inv.b - 1, OPEN)
    rep.info.update({"a": inv.a, "b": inv.b, "points": points, "b_tally": tally})
    return rep


# partial elimination ideals


@_timed
def check_pei(target, seed: int = 0, points: int = 3, cap: int = CERTIFY_DEGREE) -> CheckReport:
    """Certify extracted K_i against the definition, the exact sequences, and the tangent space."""
    E = _entry(target)
    I = E.ideal
    check_id = f"pei/{E.name}"
    rep = CheckReport(check_id, E.name, seed, reproduce=_reproduce(E, seed))
    rng = _rng(seed, check_id)
    h = I.hilbert_data()
    e = h.codim
    dmax = I.max_generator_degree()
    quadratic = E.quadratic
    sampled = []
    for k in range(points):
        try:
            q = sample_smooth_point(I, rng)
        except SamplingError as exc:
            rep.refused = str(exc)
            return rep
        sampled.append(_point_list(q))
        filt = pei_filtration(I, q, e)
        filt.certify(cap)
        bad = {lvl: degs for lvl, degs in filt.certified.items() if degs}
        rep.expect(f"[{k}] extracted K_i match the definition (m <= {cap})", len(bad), "==", 0,
                   "" if not bad else f"mismatched levels {sorted(bad)}")
        fails = filt.exact_sequence_failures(cap)
        rep.expect(f"[{k}] exact sequence dimensions", len(fails), "==", 0,
                   "" if not fails else f"first failure {fails[0]}")
        rep.expect(f"[{k}] t <= e", filt.t, "<=", e)
        rep.expect(f"[{k}] s <= max generator degree - 1", filt.s, "<=", dmax - 1)
        rep.expect(f"[{k}] K_infinity proper", filt.outer, "==", False)
        rep.expect(f"[{k}] t = e iff s = 1", filt.t == e, "==", filt.s == 1)
        if quadratic:
            rep.expect(f"[{k}] s = 1 (quadratic)", filt.s, "==", 1)
            try:
                Tq = tangent_space_ideal(I, q, e)
                rep.expect(f"[{k}] K_infinity = tangent space ideal", filt.K_infinity == Tq, "==", True)
            except SingularPoint as exc:
                rep.skip(f"[{k}] K_infinity = tangent space ideal", str(exc))
    # one outer center: the stabilized ideal must be the unit ideal
    F = I.field
    for _ in range(64):
        q = tuple(rng.randrange(F.characteristic) for _ in range(I.ring.nvars))
        if any(q) and any(g.evaluate(q) for g in I.generators):
            break
    filt = pei_filtration(I, q, e)
    rep.expect("outer center: K_infinity = (1)", filt.outer, "==", True)
    rep.expect("outer center: s <= max generator degree", filt.s, "<=", dmax)
    rep.info.update({"e": e, "points": sampled, "quadratic": quadratic})
    return rep


# catalog tables


@_timed
def check_catalog_table(target, seed: int = 0) -> CheckReport:
    E = _entry(target)
    rep = CheckReport(f"table/{E.name}", E.name, seed, reproduce=_reproduce(E, seed))
    T = _complete_table(E.ideal)
    got = {f"{p},{q}": v for (p, q), v in T.nonzero().items()}
    want = {f"{p},{q}": v for (p, q), v in sorted(E.expected.items())}
    rep.info.update({"table": T.to_dict()["entries"], "source": E.source})
    rep.expect("Betti table matches the expected one", got, "==", want)
    return rep


@_timed
def check_diagonal_cancellation(first="conic_cup_tcubic_dbl", second="planecubic_cup_conic",
                                seed: int = 0) -> CheckReport:
    """The two tables differ by pairs of equal entries at (p, q) and (p+1, q-1)."""
    A, B = _entry(first), _entry(second)
    rep = CheckReport("diagonal_cancellation", f"{A.name} vs {B.name}", seed)
    TA, TB = _complete_table(A.ideal), _complete_table(B.ideal)
    keys = set(TA.nonzero()) | set(TB.nonzero())
    D = {k: TB[k] - TA[k] for k in keys}
    D = {k: v for k, v in D.items() if v}
    rep.expect("difference is nonnegative", min(D.values(), default=0), ">=", 0)
    # peel off cancelling pairs (p, q) & (p+1, q-1), starting from the top row
    rest = dict(D)
    pairs = []
    for (p, q) in sorted(D, key=lambda k: (-k[1], k[0])):
        v = rest.get((p, q), 0)
        if v <= 0:
            continue
        partner = (p + 1, q - 1)
        take = min(v, rest.get(partner, 0))
        if take:
            pairs.append([p, q, take])
            rest[(p, q)] -= take
            rest[partner] -= take
    leftover = {f"{k[0]},{k[1]}": v for k, v in rest.items() if v}
    rep.info.update({"difference": {f"{k[0]},{k[1]}": v for k, v in sorted(D.items())}, "pairs": pairs})
    rep.expect("difference cancels along diagonals", leftover, "==", {})
    return rep


@_timed
def check_combinatorics(emax: int = 20, rmax: int = 12) -> CheckReport:
    rep = CheckReport("combinatorics", f"e <= {emax}, r,s,t <= {rmax}")
    ident = bounds.binomial_identities_check(rmax, rmax, rmax)
    rep.expect("binomial identities", len(ident.failures), "==", 0, f"{ident.checked} cases")
    bad_game, bad_dp = [], []
    for e in range(1, emax + 1):
        for p in range(1, e + 1):
            g = bounds.inheritance_game(e, p)
            if g.total != bounds.vmd_betti(e, p):
                bad_game.append((e, p))
            if bounds.delpezzo_betti(e, p) != bounds.vmd_betti(e, p) - comb(e, p - 1):
                bad_dp.append((e, p))
            if g.next_to_extremal != bounds.delpezzo_betti(e, p):
                bad_dp.append((e, p, "game"))
    rep.expect("inheritance totals = p C(e+1,p+1)", len(bad_game), "==", 0)
    rep.expect("del Pezzo bound = VMD bound - C(e,p-1)", len(bad_dp), "==", 0)
    return rep


# suites


STRAND_ENTRIES = ("rnc(3)", "rnc(4)", "elliptic_nc5")
REG_ENTRIES = ("rnc(3)", "rnc(4)", "elliptic_nc5", "ci_quadrics(1)")
VMD_ENTRIES = ("rnc(3)", "rnc(4)", "rnc(5)", "scroll(1,2)", "veronese5", "cone(rnc(3))", "hyperquadric",
               "line_cup_tcubic", "conics_meet_pt", "skew_lines", "conic_cup_tcubic_dbl",
               "planecubic_cup_conic", "elliptic_nc5", "ci_quadrics(1)")
DELPEZZO_ENTRIES = ("ci_quadrics(1)", "ci_quadrics(2)", "elliptic_nc5", "rational_quartic_p3",
                    "conic_cup_tcubic_dbl", "planecubic_cup_conic")
IRREDUCIBLE_ENTRIES = ("rnc(3)", "rnc(4)", "rnc(5)", "scroll(1,2)", "veronese5", "cone(rnc(3))",
                       "ci_quadrics(1)", "elliptic_nc5", "rational_quartic_p3", "skew_lines")


def _suite_tasks(name: str, seed: int, points: int):
    from .catalog import STANDARD

    tasks = []
    if name in ("tables", "all"):
        tasks += [(f"table/{n}", lambda n=n: check_catalog_table(n, seed)) for n in STANDARD]
        tasks.append(("diagonal_cancellation", lambda: check_diagonal_cancellation(seed=seed)))
    if name in ("bounds", "all"):
        tasks.append(("combinatorics", check_combinatorics))
    if name in ("extremal", "all"):
        tasks += [(f"extremal/{n}", lambda n=n: check_extremal(n, seed)) for n in VMD_ENTRIES]
    if name in ("next_extremal", "all"):
        tasks += [(f"next_extremal/{n}", lambda n=n: check_next_extremal(n, seed)) for n in DELPEZZO_ENTRIES]
    if name in ("kp1", "all"):
        tasks += [(f"kp1/{n}", lambda n=n: check_kp1(n, seed)) for n in IRREDUCIBLE_ENTRIES]
    if name in ("strand", "all"):
        for n in STRAND_ENTRIES + ("rnc(5)", "scroll(1,2)", "veronese5", "ci_quadrics(1)"):
            for k in range(points):
                cid = f"strand/{n}/{k}"
                tasks.append((cid, lambda n=n, cid=cid: check_strand(n, seed=seed, check_id=cid)))
    if name in ("pei", "all"):
        tasks += [(f"pei/{n}", lambda n=n: check_pei(n, seed)) for n in STANDARD]
    if name in ("reg_depth", "all"):
        tasks += [(f"reg_depth/{n}", lambda n=n: check_reg_depth(n, seed=seed)) for n in REG_ENTRIES]
    if name in ("np", "all"):
        for n in ("rnc(3)", "rnc(4)", "ci_quadrics(1)", "elliptic_nc5"):
            for d, p0 in ((2, 1), (2, 2), (3, 1)):
                tasks.append((f"np/{n}/d{d}p{p0}", lambda n=n, d=d, p0=p0: check_np_transfer(n, d=d, p0=p0, seed=seed)))
    if name in ("explore", "all"):
        tasks += [(f"explore_ab/{n}", lambda n=n: explore_ab(n, seed)) for n in ("rnc(4)", "rnc(5)", "elliptic_nc5", "veronese5")]
    if not tasks:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return tasks


SUITES = ("all", "tables", "bounds", "extremal", "next_extremal", "kp1", "strand", "pei", "reg_depth", "np", "explore")


@dataclass
class SuiteResult:
    suite: str
    seed: int
    reports: list

    @property
    def failed(self) -> bool:
        return any(r.failed for r in self.reports)

    def summary(self) -> dict:
        out = {v: 0 for v in (PASS, FAIL, SKIPPED, VACUOUS, OPEN)}
        for r in self.reports:
            for a in r.assertions:
                out[a.verdict] += 1
        out["refused"] = sum(1 for r in self.reports if r.refused)
        return out

    def to_dict(self, with_timing: bool = False) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "seed": self.seed,
            "conventions": {
                "regularity": "reg(I) = max{q+1 : beta_{p,q}(R/I) != 0, p >= 1}",
                "projection image": "K_0(I) without saturation",
            },
            "summary": self.summary(),
            "checks": [r.to_dict(with_timing) for r in self.reports],
        }

    def to_json(self, with_timing: bool = False) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        lines = [f"# verify suite `{self.suite}` (seed {self.seed})", "",
                 "| check | status | pass | fail | skipped | vacuous | open |", "|---|---|---|---|---|---|---|"]
        for r in self.reports:
            lines.append(f"| {r.check_id} | {r.status} | {r.count(PASS)} | {r.count(FAIL)} | {r.count(SKIPPED)} "
                         f"| {r.count(VACUOUS)} | {r.count(OPEN)} |")
        for r in self.reports:
            if r.failed:
                lines += ["", f"## {r.check_id}", ""]
                for a in r.assertions:
                    if a.verdict == FAIL:
                        lines.append(f"- {a.name}: {a.lhs} {a.relation} {a.rhs} is false")
        return "\n".join(lines) + "\n"


def run_suite(name: str = "all", seed: int = 0, points: int = 5, workers: int = 1) -> SuiteResult:
    """Run a named suite; report order is fixed by check id regardless of ``workers``."""
    tasks = _suite_tasks(name, seed, points)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(workers) as pool:
            reports = list(pool.map(lambda t: t[1](), tasks))
    else:
        reports = [fn() for _, fn in tasks]
    reports.sort(key=lambda r: r.check_id)
    return SuiteResult(name, seed, reports)

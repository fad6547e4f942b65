"""Closed-form bounds on linear-strand Betti numbers and the identities behind them.

Everything is exact integer arithmetic with ``math.comb``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def vmd_betti(e: int, p: int) -> int:
    """p * C(e+1, p+1): the linear strand of a variety of minimal degree of codim e."""
    if e < 1 or p < 0:
        raise ValueError("need e >= 1 and p >= 0")
    if p == 0 or p > e:
        return 0
    return p * comb(e + 1, p + 1)


def delpezzo_betti(e: int, p: int) -> int:
    """p * C(e+1, p+1) - C(e, p-1): the linear strand of a del Pezzo variety."""
    if e < 1 or p < 1:
        raise ValueError("need e >= 1 and p >= 1")
    if p > e:
        return 0
    return p * comb(e + 1, p + 1) - comb(e, p - 1)


def fano_lower(e: int, a: int) -> int:
    """Lower bound C(e+1,2) - C(e+1-a,2) for beta_{1,1} given a = a(X)."""
    if not 0 <= a <= e:
        raise ValueError("need 0 <= a <= e")
    return comb(e + 1, 2) - comb(e + 1 - a, 2)


def improved_bound(e: int, p: int, b: int) -> int:
    """Conjectural refinement in terms of b = b(X); only valid if projection lowers b."""
    if not 1 <= b <= e + 1:
        raise ValueError("need 1 <= b <= e+1")
    return p * comb(e + 1, p + 1) + (comb(e + 1, p + 1) - comb(b, p + 1)) - (e - b + 1) * comb(e + 1, p)


# binomial identities used to sum the projection recursion


def hockey_stick(r: int, s: int) -> tuple[int, int]:
    return sum(comb(r + i, i) for i in range(s + 1)), comb(r + s + 1, r + 1)


def vandermonde_variant(r: int, s: int, t: int) -> tuple[int, int]:
    return sum(comb(r + i, r) * comb(s - i, t) for i in range(s + 1)), comb(r + s + 1, r + t + 1)


@dataclass
class IdentityReport:
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def binomial_identities_check(rmax: int = 12, smax: int = 12, tmax: int = 12) -> IdentityReport:
    failures = []
    checked = 0
    for r in range(rmax + 1):
        for s in range(smax + 1):
            lhs, rhs = hockey_stick(r, s)
            checked += 1
            if lhs != rhs:
                failures.append(("sum C(r+i,i)", r, s, None, lhs, rhs))
            for t in range(tmax + 1):
                lhs, rhs = vandermonde_variant(r, s, t)
                checked += 1
                if lhs != rhs:
                    failures.append(("sum C(r+i,r)C(s-i,t)", r, s, t, lhs, rhs))
    return IdentityReport(checked, failures)


def _comb(n: int, k: int) -> int:
    # C(-1, 0) = 1 keeps the diagonal coefficient right when e0 = p0
    if k == 0:
        return 1
    if n < 0 or k < 0:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class GameTotals:
    e0: int
    p0: int
    coefficients: tuple  # c_i = C(e0-p0-1+i, i): weight of the diagonal term beta_{p0-i,1}(X^(p0-i))
    Aprime: int  # bound for the diagonal part after one more round
    B: int  # all binomial contributions collected before the diagonal
    total: int

    @property
    def next_to_extremal(self) -> int:
        """The bound left when every diagonal term vanishes: total - A'."""
        return self.total - self.Aprime

    def to_dict(self) -> dict:
        return {"e0": self.e0, "p0": self.p0, "c": list(self.coefficients), "Aprime": self.Aprime,
                "B": self.B, "total": self.total, "next_to_extremal": self.next_to_extremal}


def inheritance_game(e0: int, p0: int) -> GameTotals:
    """Unroll beta_{p,1}(X) <= beta_{p,1}(X_q) + beta_{p-1,1}(X_q) + C(e,p) down to the diagonal e = p.

    Each step splits a term into two terms of codimension one lower plus a
    binomial contribution; stopping on the diagonal leaves the weighted
    diagonal terms (bounded by A') and the collected contributions B.
    """
    if not 1 <= p0 <= e0:
        raise ValueError("need 1 <= p0 <= e0")
    k = e0 - p0
    coefficients = tuple(_comb(k - 1 + i, i) for i in range(p0))
    Aprime = sum(comb(k + i, i) for i in range(p0))
    if Aprime != comb(e0, k + 1):
        raise ArithmeticError(f"diagonal sum disagrees at e={e0}, p={p0}")
    B = sum(comb(i + j, i) * comb(e0 - i - j, p0 - i) for i in range(p0) for j in range(k))
    total = Aprime + B
    if total != p0 * comb(e0 + 1, p0 + 1):
        raise ArithmeticError(f"inheritance totals disagree at e={e0}, p={p0}")
    return GameTotals(e0, p0, coefficients, Aprime, B, total)


@dataclass(frozen=True)
class BoundProfile:
    e: int
    vmd: tuple
    delpezzo: tuple
    improved: tuple | None = None  # conjectural
    b: int | None = None

    def rows(self) -> list[tuple[str, tuple]]:
        out = [("minimal degree", self.vmd), ("del Pezzo", self.delpezzo)]
        if self.improved is not None:
            out.append((f"improved, b={self.b} (CONJECTURAL)", self.improved))
        return out

    def to_dict(self) -> dict:
        d = {"e": self.e, "vmd": list(self.vmd), "delpezzo": list(self.delpezzo)}
        if self.improved is not None:
            d["improved"] = {"b": self.b, "values": list(self.improved), "status": "CONJECTURAL"}
        return d

    def to_text(self) -> str:
        ps = list(range(1, self.e + 1))
        label_w = max(len(name) for name, _ in self.rows()) + 1
        w = max(len(str(v)) for _, vals in self.rows() for v in vals + tuple(ps))
        lines = ["p".ljust(label_w) + " " + " ".join(str(p).rjust(w) for p in ps)]
        for name, vals in self.rows():
            lines.append(name.ljust(label_w) + " " + " ".join(str(v).rjust(w) for v in vals))
        return "\n".join(lines)


def bound_profile(e: int, b: int | None = None) -> BoundProfile:
    ps = range(1, e + 1)
    vmd = tuple(vmd_betti(e, p) for p in ps)
    dp = tuple(delpezzo_betti(e, p) for p in ps)
    imp = tuple(improved_bound(e, p, b) for p in ps) if b is not None else None
    return BoundProfile(e, vmd, dp, imp, b)

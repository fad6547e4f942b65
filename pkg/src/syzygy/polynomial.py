"""Sparse multivariate polynomials, monomial orders and linear coordinate changes.

Monomials are exponent tuples.  A :class:`Polynomial` is an immutable map
monomial -> nonzero coefficient attached to a :class:`Ring`; sorted views
are produced on demand under a :class:`MonomialOrder`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .field import CharacteristicError, FieldSpec

Monomial = tuple  # exponent vector


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given total degree (unsorted)."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


@dataclass(frozen=True)
class MonomialOrder:
    """deglex, degrevlex or lex with a variable priority (highest first).

    ``elim`` lists variables whose total degree is compared before anything
    else; with a nonempty ``elim`` the order eliminates those variables.
    """

    kind: str = "deglex"
    priority: tuple | None = None
    elim: tuple = ()

    def __post_init__(self):
        if self.kind not in ("deglex", "degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, e: Monomial):
        pr = self.priority if self.priority is not None else range(len(e))
        if self.kind == "lex":
            k = tuple(e[i] for i in pr)
        elif self.kind == "deglex":
            k = (sum(e),) + tuple(e[i] for i in pr)
        else:
            k = (sum(e),) + tuple(-e[i] for i in reversed(tuple(pr)))
        if self.elim:
            return (sum(e[i] for i in self.elim),) + k
        return k

    def __str__(self):
        s = self.kind
        if self.priority is not None:
            s += f"[{','.join(map(str, self.priority))}]"
        if self.elim:
            s += f"/elim{list(self.elim)}"
        return s


DEGLEX = MonomialOrder("deglex")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring context: variable names and coefficient field."""

    names: tuple
    field: FieldSpec = dc_field(default_factory=FieldSpec)

    @classmethod
    def standard(cls, nvars: int, field: FieldSpec | None = None, prefix: str = "x", start: int = 0) -> "Ring":
        return cls(tuple(f"{prefix}{i}" for i in range(start, start + nvars)), field or FieldSpec())

    @property
    def nvars(self) -> int:
        return len(self.names)

    @cached_property
    def index(self) -> dict:
        return {n: i for i, n in enumerate(self.names)}

    def drop_first(self) -> "Ring":
        """The subring S with the first variable removed."""
        return Ring(self.names[1:], self.field)

    def extend(self, name: str, front: bool = True) -> "Ring":
        names = (name,) + self.names if front else self.names + (name,)
        return Ring(names, self.field)

    def var(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.index[i]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def linear_form(self, coeffs: Sequence) -> "Polynomial":
        terms = {}
        for i, c in enumerate(coeffs):
            c = self.field(c)
            if c:
                e = [0] * self.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)


class RingMismatch(ValueError):
    pass


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to nonzero scalars."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict, _clean: bool = True):
        self.ring = ring
        if _clean:
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms
        self._hash = None

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self, order: MonomialOrder = DEGLEX) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEGLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEGLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGLEX) -> "Polynomial":
        if not self.terms:
            return self
        F = self.ring.field
        inv = F.inv(self.leading_coefficient(order))
        return Polynomial(self.ring, {m: F.mul(c, inv) for m, c in self.terms.items()}, False)

    def variables(self) -> set:
        return {i for m in self.terms for i, x in enumerate(m) if x}

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.names} vs {other.ring.names}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(out.get(m, F.zero), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, False)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()}, False)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()}, False)

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring, {mono_mul(m, mono): F.mul(v, c) for m, v in self.terms.items()}, False)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.ring.field
        p = F.characteristic
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items()}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # calculus and evaluation

    def derivative(self, i: int) -> "Polynomial":
        F = self.ring.field
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = F.mul(c, F(m[i]))
        return Polynomial(self.ring, out)

    def evaluate(self, point: Sequence):
        F = self.ring.field
        total = F.zero
        for m, c in self.terms.items():
            v = c
            for x, k in zip(point, m):
                if k:
                    v = F.mul(v, x if k == 1 else (x ** k if F.characteristic == 0 else pow(x, k, F.characteristic)))
            total = F.add(total, v)
        return total

    def coefficient_in_first(self, power: int) -> "Polynomial":
        """Coefficient of x0**power, as a polynomial in the remaining variables."""
        S = self.ring.drop_first()
        return Polynomial(S, {m[1:]: c for m, c in self.terms.items() if m[0] == power}, False)

    def lift_from_subring(self, ring: Ring) -> "Polynomial":
        """Embed a polynomial of S = ring minus its first variable into ``ring``."""
        return Polynomial(ring, {(0,) + m: c for m, c in self.terms.items()}, False)

    def to_ring(self, ring: Ring) -> "Polynomial":
        """Reinterpret in a ring with the same number of variables (renaming)."""
        if ring.nvars != self.ring.nvars:
            raise RingMismatch("variable count differs")
        F = ring.field
        return Polynomial(ring, {m: F(c) for m, c in self.terms.items()})

    # printing

    def to_str(self, order: MonomialOrder = DEGLEX) -> str:
        if not self.terms:
            return "0"
        F = self.ring.field
        parts = []
        for m, c in self.sorted_terms(order):
            c = F.signed(c)
            neg = c < 0
            a = -c if neg else c
            factors = []
            for name, k in zip(self.ring.names, m):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = f"{a}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


# parsing

class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}, column {column}: "
        elif column is not None:
            loc = f"column {column}: "
        super().__init__(loc + msg)
        self.message = msg
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", column=pos + 1)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return toks


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse ``term (('+'|'-') term)*`` where a term is a ``*``-product of
    coefficients and ``var^k`` factors."""
    F = ring.field
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial", column=1)
    i = 0
    terms: dict = {}

    def expect_factor():
        nonlocal i
        if i >= len(toks):
            raise ParseError("unexpected end of input", column=len(text) + 1)
        kind, val, col = toks[i]
        if kind == "num":
            i += 1
            try:
                return "c", F(Fraction(val))
            except (CharacteristicError, ZeroDivisionError) as exc:
                raise ParseError(f"malformed coefficient {val!r}: {exc}", column=col) from None
        if kind == "name":
            if val not in ring.index:
                raise ParseError(f"unknown variable {val!r}", column=col)
            i += 1
            k = 1
            if i < len(toks) and toks[i][1] == "^":
                i += 1
                if i >= len(toks) or toks[i][0] != "num" or "/" in toks[i][1]:
                    raise ParseError("expected integer exponent after '^'", column=toks[i - 1][2])
                k = int(toks[i][1])
                i += 1
            return "v", (ring.index[val], k)
        raise ParseError(f"unexpected {val!r}", column=col)

    first = True
    while i < len(toks):
        sign = 1
        if toks[i][1] in "+-" and toks[i][0] == "op":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {toks[i][1]!r}", column=toks[i][2])
        first = False
        coeff = F(sign)
        e = [0] * ring.nvars
        while True:
            kind, val = expect_factor()
            if kind == "c":
                coeff = F.mul(coeff, val)
            else:
                e[val[0]] += val[1]
            if i < len(toks) and toks[i][1] == "*":
                i += 1
                continue
            break
        m = tuple(e)
        terms[m] = F.add(terms.get(m, F.zero), coeff)
    return Polynomial(ring, terms)


# linear coordinate changes

def _mat_inverse(A: list, F: FieldSpec) -> list:
    n = len(A)
    M = [[F(x) for x in row] + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = F.inv(M[col][col])
        M[col] = [F.mul(x, inv) for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


class LinearChange:
    """Invertible substitution x_i -> sum_j A[i][j] x_j.

    Applied to a point: the new-coordinate point y corresponds to x = A y.
    """

    def __init__(self, matrix: Sequence[Sequence], field: FieldSpec):
        self.field = field
        self.matrix = tuple(tuple(field(x) for x in row) for row in matrix)
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix):
            raise ValueError("matrix must be square")
        self._inverse = _mat_inverse(self.matrix, field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "LinearChange":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def moving_to_origin(cls, point: Sequence, field: FieldSpec) -> "LinearChange":
        """A change under which ``point`` becomes (1:0:...:0)."""
        n = len(point)
        k = next(i for i, x in enumerate(point) if x)
        cols = []
        for j in range(n):
            if j == 0:
                cols.append(list(point))
            elif j == k:
                cols.append([1 if i == 0 else 0 for i in range(n)])
            else:
                cols.append([1 if i == j else 0 for i in range(n)])
        A = [[cols[j][i] for j in range(n)] for i in range(n)]
        return cls(A, field)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def inverse(self) -> "LinearChange":
        return LinearChange(self._inverse, self.field)

    def is_identity(self) -> bool:
        return all((x == 1) == (i == j) and (x in (0, 1)) for i, row in enumerate(self.matrix) for j, x in enumerate(row))

    def apply(self, f: Polynomial) -> Polynomial:
        ring = f.ring
        if ring.nvars != self.n:
            raise RingMismatch("dimension mismatch")
        images = [ring.linear_form(row) for row in self.matrix]
        powers: dict = {}

        def pw(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = images[i] ** k
            return powers[(i, k)]

        out = ring.zero()
        for m, c in f.terms.items():
            t = ring.const(c)
            for i, k in enumerate(m):
                if k:
                    t = t * pw(i, k)
            out = out + t
        return out

    def map_point(self, y: Sequence) -> tuple:
        """Old coordinates x = A y of a point given in new coordinates."""
        F = self.field
        return tuple(_dot(row, y, F) for row in self.matrix)

    def pullback_point(self, x: Sequence) -> tuple:
        """New coordinates y = A^{-1} x."""
        F = self.field
        return tuple(_dot(row, x, F) for row in self._inverse)


def _dot(row, v, F):
    s = F.zero
    for a, b in zip(row, v):
        s = F.add(s, F.mul(a, F(b)))
    return s


def d0_of(f: Polynomial) -> int:
    """Exponent of x0 in the deglex (x0 highest) leading term of f."""
    if f.is_zero():
        raise ValueError("d0 of the zero polynomial")
    return f.leading_monomial(DEGLEX)[0]


def normalize_point(point: Iterable, F: FieldSpec) -> tuple:
    """Projective normalization: first nonzero coordinate scaled to 1."""
    pt = [F(x) for x in point]
    k = next((i for i, x in enumerate(pt) if x), None)
    if k is None:
        raise ValueError("the zero vector is not a projective point")
    inv = F.inv(pt[k])
    return tuple(F.mul(x, inv) for x in pt)

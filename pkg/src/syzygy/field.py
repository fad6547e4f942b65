"""Exact coefficient fields: prime fields GF(p) and the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class CharacteristicError(ValueError):
    """A scalar cannot be represented in the working field."""


@dataclass(frozen=True)
class FieldSpec:
    """Either GF(p) for an odd prime p, or QQ (characteristic 0).

    GF(p) elements are ints in ``range(p)``; QQ elements are ``Fraction``.
    """

    characteristic: int = DEFAULT_PRIME

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not (_is_prime(c) and c > 2):
            raise ValueError(f"characteristic must be 0 or an odd prime, got {c}")

    @classmethod
    def gf(cls, p: int = DEFAULT_PRIME) -> "FieldSpec":
        return cls(p)

    @classmethod
    def qq(cls) -> "FieldSpec":
        return cls(0)

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    # scalar arithmetic

    def __call__(self, value) -> int | Fraction:
        """Coerce an int or Fraction into the field."""
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise CharacteristicError(f"{value} has denominator divisible by {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else a * b % self.characteristic

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / Fraction(a)
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def signed(self, a) -> int | Fraction:
        """Symmetric representative, used for printing."""
        p = self.characteristic
        if p == 0:
            return a
        return a - p if a > p // 2 else a

    def random_element(self, rng, nonzero: bool = False):
        """Uniform element of GF(p) drawn from a ``random.Random``; small ints over QQ."""
        if self.characteristic == 0:
            lo = 1 if nonzero else 0
            v = rng.randint(lo, 9)
            return Fraction(v if rng.random() < 0.5 else -v)
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.characteristic)

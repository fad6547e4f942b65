"""Run configuration shared by the CLI and the experiment scripts."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass

from .field import DEFAULT_PRIME, FieldSpec
from .pei import CERTIFY_DEGREE
from .projection import DEFAULT_BUDGET

SEED_ENV = "SYZYGY_SEED"
FORMATS = ("text", "csv", "markdown", "json")


def parse_field(text: str) -> FieldSpec:
    """'QQ', 'GF 101', 'GF(101)', 'gf101' or a bare prime."""
    t = text.strip().replace(" ", "")
    if t.upper() in ("QQ", "Q", "0"):
        return FieldSpec(0)
    if t.upper().startswith("GF"):
        t = t[2:].strip("()")
    return FieldSpec(int(t))


def env_seed(default: int = 0) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class Config:
    """Everything besides the input ideal that determines a run's output.

    ``pmax`` and ``qmax`` of None mean "as far as the regularity certificate
    requires"; ``degree_cap`` bounds PEI certification and generator listings.
    """

    characteristic: int = DEFAULT_PRIME
    pmax: int | None = None
    qmax: int | None = None
    degree_cap: int = CERTIFY_DEGREE
    seed: int = 0
    format: str = "text"
    budget: int = DEFAULT_BUDGET
    saturate: bool = False

    def __post_init__(self):
        FieldSpec(self.characteristic)
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.seed < 0 or self.seed >= 1 << 64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")

    @property
    def field(self) -> FieldSpec:
        return FieldSpec(self.characteristic)

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        if overrides.get("seed") is None:
            overrides["seed"] = env_seed()
        return cls(**{k: v for k, v in overrides.items() if v is not None or k in ("pmax", "qmax")})

    def to_dict(self) -> dict:
        return asdict(self)

"""Shared vocabulary: surface parameters, fields, conditions, verdicts, profiles."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Optional


class ParameterError(ValueError):
    """A surface parameter violates the positivity requirement."""


class Field(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


class Condition(enum.Enum):
    WHITNEY_A = "a"
    WHITNEY_B = "b"
    KUO_VERDIER_W = "w"
    MOSTOWSKI_L = "L"


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDECIDED = "undecided"


CONDITIONS = (Condition.WHITNEY_A, Condition.WHITNEY_B,
              Condition.KUO_VERDIER_W, Condition.MOSTOWSKI_L)
FIELDS = (Field.REAL, Field.COMPLEX)


@dataclass(frozen=True, order=True)
class SurfaceParams:
    """Exponents of the surface y**a = z**b * x**c + x**d."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ParameterError(f"{name} must be >= 1, got {v!r}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    @staticmethod
    def from_json(obj: Mapping) -> "SurfaceParams":
        return make_params(obj["a"], obj["b"], obj["c"], obj["d"])

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c},{self.d})"


def make_params(a: int, b: int, c: int, d: int) -> SurfaceParams:
    return SurfaceParams(a, b, c, d)


@dataclass(frozen=True)
class AnnotatedVerdict:
    """Verdict with provenance (diagram leaf path or verifier budget note)."""

    verdict: Verdict
    provenance: Optional[str] = None


@dataclass(frozen=True)
class RegularityProfile:
    params: SurfaceParams
    verdicts: Mapping[tuple[Field, Condition], AnnotatedVerdict]

    def __post_init__(self):
        keys = {(f, c) for f in FIELDS for c in CONDITIONS}
        if set(self.verdicts) != keys:
            missing = keys - set(self.verdicts)
            raise ValueError(f"profile must carry all 8 verdicts; missing {missing}")

    def verdict(self, field: Field, condition: Condition) -> Verdict:
        return self.verdicts[(field, condition)].verdict

    def to_json(self) -> dict:
        out: dict = {"params": self.params.to_json(), "verdicts": {}}
        for f in FIELDS:
            out["verdicts"][f.value] = {
                c.value: self.verdicts[(f, c)].verdict.value for c in CONDITIONS}
        return out

    @staticmethod
    def from_json(obj: Mapping) -> "RegularityProfile":
        params = SurfaceParams.from_json(obj["params"])
        verdicts = {}
        for f in FIELDS:
            for c in CONDITIONS:
                v = Verdict(obj["verdicts"][f.value][c.value])
                verdicts[(f, c)] = AnnotatedVerdict(v)
        return RegularityProfile(params, verdicts)


def verdict_to_json(v: Verdict) -> str:
    return v.value


def verdict_from_json(s: str) -> Verdict:
    return Verdict(s)

"""
Exact-rational crossing-number bounds in terms of braid index and Euler
characteristic, and their corollaries for composites, satellites and cables.

No floating point: f(3) = 5/3 must survive every step.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, NamedTuple

from pydantic import BaseModel, field_validator


class BoundsDomainError(ValueError):
    pass


class RationalPayload(BaseModel):
    numerator: int
    denominator: int

    @field_validator("denominator")
    @classmethod
    def positive_denominator(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"Denominator must be positive, got {value}")
        return value

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalPayload":
        value = Fraction(value)
        return cls(numerator=value.numerator, denominator=value.denominator)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


class BoundReportPayload(BaseModel):
    formula: str
    inputs: Dict[str, int]
    lower: int
    upper: RationalPayload


@dataclass(frozen=True)
class BoundReport:
    lower: int
    upper: Fraction
    inputs: Dict[str, int] = field(default_factory=dict)
    formula: str = "theorem"

    def contains(self, crossings: int) -> bool:
        return self.lower <= crossings <= self.upper

    def to_payload(self) -> BoundReportPayload:
        return BoundReportPayload(
            formula=self.formula,
            inputs=dict(self.inputs),
            lower=self.lower,
            upper=RationalPayload.from_fraction(self.upper),
        )

    def to_json(self) -> dict:
        return self.to_payload().model_dump()


class CompositeBound(NamedTuple):
    bound: Fraction
    weaker: Fraction
    fixed_constant: Fraction


def _require_braid_index(b: int, name: str = "b"):
    if b < 2:
        raise BoundsDomainError(
            f"{name} must be >= 2 (braid index 1 is the unknot), got {b}"
        )


def f(n: int) -> Fraction:
    _require_braid_index(n, "n")
    if n == 2:
        return Fraction(1)
    if n == 3:
        return Fraction(5, 3)
    return Fraction(2 * n - 5)


def theorem_bounds(chi: int, b: int) -> BoundReport:
    """-chi + b <= c <= f(b) (-chi + b)"""
    _require_braid_index(b)
    base = -chi + b
    if base <= 0:
        raise BoundsDomainError(f"-chi + b must be positive, got chi={chi}, b={b}")
    return BoundReport(
        lower=base,
        upper=f(b) * base,
        inputs={"chi": chi, "b": b},
        formula="theorem",
    )


def genus_bounds(g: int, b: int) -> BoundReport:
    """Knot form of theorem_bounds with chi = 1 - 2g."""
    if g < 0:
        raise BoundsDomainError(f"Genus must be >= 0, got {g}")
    report = theorem_bounds(1 - 2 * g, b)
    return BoundReport(report.lower, report.upper, {"g": g, "b": b}, "genus")


def crossing_budget(chi: int, b: int) -> int:
    return floor(theorem_bounds(chi, b).upper)


def composite_lb(c1: int, b1: int, c2: int, b2: int) -> CompositeBound:
    """
    Crossing lower bound for a connected sum from the summands' data.

    Returns:
        CompositeBound with the sharp sum c1/f(b1) + c2/f(b2), the weaker
        (c1 + c2)/f(max(b1, b2)) and the fixed-constant estimate (c1 + c2)/152
    """
    _require_braid_index(b1, "b1")
    _require_braid_index(b2, "b2")
    return CompositeBound(
        bound=Fraction(c1) / f(b1) + Fraction(c2) / f(b2),
        weaker=Fraction(c1 + c2) / f(max(b1, b2)),
        fixed_constant=Fraction(c1 + c2, 152),
    )


def regularity(b: int) -> Fraction:
    return 1 / f(b)


def satellite_lb(c0: int, b0: int, w: int) -> Fraction:
    """w^2 c0 / f(b0) - w^2 b0; negative values are vacuous."""
    if w < 0:
        raise BoundsDomainError(f"Winding number must be >= 0, got {w}")
    return w * w * Fraction(c0) / f(b0) - w * w * b0


def asymptotic_lb(c: int, b: int) -> Fraction:
    return Fraction(c) / f(b) - b


def braided_cable_lb(c: int, b: int, p: int) -> Fraction:
    if p < 1:
        raise BoundsDomainError(f"Cable strand count must be >= 1, got {p}")
    return p * Fraction(c) / f(b) + (p - 1)


def braided_cable_preserves_crossings(b: int, p: int) -> bool:
    """p >= f(b) guarantees c(K_p) >= c(K)."""
    if p < 1:
        raise BoundsDomainError(f"Cable strand count must be >= 1, got {p}")
    return p >= f(b)


def cabling_conjecture_holds(b: int) -> bool:
    """Every braided cable (p >= 2) of a knot with braid index b keeps its crossings."""
    return f(b) <= 2


def satellite_combined_lb(c0: int, b0: int) -> Fraction:
    return Fraction(c0) / (76 * f(b0))

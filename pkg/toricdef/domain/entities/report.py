"""Report entities for the Gorenstein comparisons and for command runs."""

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from .elements import T2Element


class DimensionComparison(BaseModel):
    """dim T2(-kR*) from the closed form and from the relation complex."""

    model_config = ConfigDict(frozen=True)

    k: int
    closed_form: int
    machinery: int

    @property
    def match(self) -> bool:
        return self.closed_form == self.machinery


class CupComparison(BaseModel):
    """General cup product against sum_i s_i t_i d^i for one pair of summands."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    s_index: int
    t_index: int
    closed_form: tuple[Fraction, ...]
    general: tuple[Fraction, ...] | None = Field(
        default=None, description="Bridged vector in N_Q, when computed"
    )
    general_class: T2Element | None = Field(
        default=None, description="Canonical T2 representative of the general cup"
    )
    closed_class: T2Element | None = Field(
        default=None, description="Canonical T2 representative bridged to closed_form"
    )

    @property
    def match(self) -> bool:
        """Both sides are known and give the same class in T2."""
        if self.general_class is None:
            return False
        return self.closed_class == self.general_class


class CrossValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    dimensions: tuple[DimensionComparison, ...]
    cups: tuple[CupComparison, ...]

    @property
    def all_match(self) -> bool:
        return all(d.match for d in self.dimensions) and all(c.match for c in self.cups)


class VersalEquation(BaseModel):
    """The two scalar equations sum_i t_i^k d^i = 0 for one k."""

    model_config = ConfigDict(frozen=True)

    k: int
    equations: tuple[str, str]


class VersalReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    equations: tuple[VersalEquation, ...]
    linear_part_matches: bool = Field(description="k = 1 cuts out V")
    quadratic_part_matches: bool = Field(
        description="Polarized k = 2 part equals sum_i s_i t_i d^i"
    )


class GorensteinReport(BaseModel):
    """Everything computed for one polygon."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertices: tuple[tuple[int, int], ...]
    size: int
    t1_dim: int
    summand_dim: int
    k1: int
    k2: int
    t2_dims: dict[int, int]
    r_star_in_basis: bool
    cup_table: tuple[CupComparison, ...] = ()
    versal: VersalReport | None = None
    verification: CrossValidationReport | None = None


class RunReport(BaseModel):
    """Outcome of one command, as written by the CLI."""

    model_config = ConfigDict(frozen=True)

    command: str
    version: str
    input: dict[str, Any] = Field(description="Echo of the input and its hash")
    result: dict[str, Any]
    verified: bool | None = None
    timing_seconds: float | None = None


class CheckOutcome(BaseModel):
    """Verdict of one acceptance check."""

    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    details: dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    checks: tuple[CheckOutcome, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

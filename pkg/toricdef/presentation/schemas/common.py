"""Common API schemas."""

from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from toricdef.core.config import settings

Rational = int | str


def encode_integer(x: int) -> int | str:
    """Integers needing more than JSON_SAFE_INTEGER_BITS bits become strings."""
    return str(x) if abs(x) >= 2**settings.JSON_SAFE_INTEGER_BITS else x


def encode_rational(x: Fraction | int) -> Rational:
    """Integers as ints, other rationals as "p/q"."""
    value = Fraction(x)
    if value.denominator == 1:
        return encode_integer(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def encode_vector(v: Sequence[Fraction | int]) -> list[Rational]:
    return [encode_rational(x) for x in v]


def json_safe(value: Any) -> Any:
    """Apply the integer rule to every int of a JSON-like document."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return encode_integer(value)
    if isinstance(value, dict):
        return {key: json_safe(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [json_safe(item) for item in value]
    return value


class ErrorResponse(BaseModel):
    """Error response schema."""

    error: str = Field(description="Error type")
    message: str = Field(description="Error message")
    detail: str | None = Field(default=None, description="Detailed error information")
    timestamp: str = Field(description="Error timestamp")


class HealthResponse(BaseModel):
    """Health check response schema."""

    status: str = Field(description="Service status")
    version: str = Field(description="API version")
    timestamp: str = Field(description="Check timestamp")
    checks: dict[str, str] = Field(description="Individual service checks")


class FixturesResponse(BaseModel):
    """Names of the built-in inputs."""

    cones: list[str]
    polygons: list[str]

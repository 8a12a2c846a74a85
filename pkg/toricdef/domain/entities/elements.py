"""Graded pieces of T1 and T2 and their elements."""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from .cone import DualVector


class T2Label(str, Enum):
    """How the first cohomology relates to T2 in a given degree."""

    EXACT = "T2"
    SUBSPACE = "subspace of T2"
    NOT_APPLICABLE = "H1 = 0; formula not applicable for 2-dimensional cones"


class T1Element(BaseModel):
    """Functional on L(E_0^R) vanishing on the sum of the L(E_i^R).

    ``values`` are the values on the fixed basis of L(E_0^R); there is no
    quotient, so these values are already canonical.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: DualVector = Field(description="R; the element lives in T1(-R)")
    values: tuple[Fraction, ...]

    def is_zero(self) -> bool:
        return not any(self.values)

    def __add__(self, other: "T1Element") -> "T1Element":
        if other.degree != self.degree:
            raise ValueError("cannot add elements of different degrees")
        return T1Element(
            degree=self.degree,
            values=tuple(x + y for x, y in zip(self.values, other.values, strict=True)),
        )

    def scale(self, factor: int | Fraction) -> "T1Element":
        return T1Element(
            degree=self.degree, values=tuple(factor * x for x in self.values)
        )


class T2Element(BaseModel):
    """Tuple (psi_i) of functionals on L(E_i^R), reduced modulo global restrictions."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: DualVector = Field(description="R; the element lives in T2(-R)")
    values: tuple[tuple[Fraction, ...], ...] = Field(
        description="values[i] = psi_i on the basis of L(E_i^R)"
    )

    def is_zero(self) -> bool:
        return not any(any(block) for block in self.values)

    @property
    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for block in self.values for x in block)

    def __add__(self, other: "T2Element") -> "T2Element":
        if other.degree != self.degree:
            raise ValueError("cannot add elements of different degrees")
        return T2Element(
            degree=self.degree,
            values=tuple(
                tuple(x + y for x, y in zip(a, b, strict=True))
                for a, b in zip(self.values, other.values, strict=True)
            ),
        )

    def scale(self, factor: int | Fraction) -> "T2Element":
        return T2Element(
            degree=self.degree,
            values=tuple(tuple(factor * x for x in block) for block in self.values),
        )


class T1Piece(BaseModel):
    """T1(-R) with a basis."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: DualVector
    dimension: int
    basis: tuple[T1Element, ...]


class T2Piece(BaseModel):
    """First cohomology of the dual complex in degree -R, with a basis."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: DualVector
    dimension: int
    basis: tuple[T2Element, ...]
    is_exact: bool = Field(description="Cone is smooth in codimension 2")
    label: T2Label


class ScanEntry(BaseModel):
    """Dimensions found in one degree of a scan."""

    model_config = ConfigDict(frozen=True)

    degree: DualVector
    t1_dim: int
    t2_dim: int


class ScanResult(BaseModel):
    """Nonzero graded pieces inside the scan box."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[ScanEntry, ...]
    degrees_scanned: int
    bound: int
    t2_label: T2Label
    heuristic_box: bool = True

    @property
    def total_t1(self) -> int:
        return sum(e.t1_dim for e in self.entries)

    @property
    def total_t2(self) -> int:
        return sum(e.t2_dim for e in self.entries)


class SpanComplexResult(BaseModel):
    """Cohomology dimensions of the dual span complexes in one degree."""

    model_config = ConfigDict(frozen=True)

    degree: DualVector
    t1_dim: int = Field(description="H1 of the dual span(E_tau^R) complex")
    t2_dim: int = Field(description="H2 of the dual span(E_tau^R) complex")
    v_t1_dim: int = Field(description="H1 of the dual V_tau^R complex")
    v_t2_dim: int = Field(description="H2 of the dual V_tau^R complex")
    v_t1_valid: bool = Field(description="Cone is smooth in codimension 2")
    v_t2_valid: bool = Field(description="Cone is smooth in codimension 3")


class ElementHomology(BaseModel):
    """Homology of the summand of Z^{E^R} belonging to one element r of E."""

    model_config = ConfigDict(frozen=True)

    element: DualVector
    chain_dims: tuple[int, ...] = Field(description="Ranks at spots 0, -1, -2, -3")
    homology: tuple[int, ...] = Field(description="Homology at the checked spots")

    @property
    def is_exact(self) -> bool:
        return not any(self.homology)


class CupResult(BaseModel):
    """phi cup psi for two basis elements of T1 pieces."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree_r: DualVector
    degree_s: DualVector
    phi_index: int
    psi_index: int
    product: T2Element
    bridged_vector: tuple[Fraction, ...] | None = Field(
        default=None, description="Vector in N_Q for cones over height-one polygons"
    )

"""Cone API schemas."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from toricdef.domain.entities.cone import Cone
from toricdef.domain.entities.elements import (
    CupResult,
    ScanResult,
    SpanComplexResult,
    T1Piece,
    T2Piece,
)
from toricdef.domain.entities.hilbert import HilbertBasis
from toricdef.domain.services.cone_geometry import (
    is_smooth_in_codim2,
    is_smooth_in_codim3,
)
from toricdef.presentation.schemas.common import Rational, encode_vector


class ConeSource(BaseModel):
    """A cone given by its generators or by a fixture name."""

    generators: list[list[int]] | None = Field(
        default=None, description="Generators a^1, ..., a^N in Z^n"
    )
    fixture: str | None = Field(default=None, description="Built-in cone name")

    @model_validator(mode="after")
    def check_source(self) -> "ConeSource":
        if (self.generators is None) == (self.fixture is None):
            raise ValueError("give exactly one of 'generators' and 'fixture'")
        return self


class HilbertRequest(ConeSource):
    pass


class DegreeRequest(ConeSource):
    degree: list[int] = Field(description="R in M = Z^n")


class ScanRequest(ConeSource):
    bound: int | None = Field(default=None, ge=0, description="Lower height bound B")


class CupRequest(ConeSource):
    degree_r: list[int] = Field(description="Degree R of phi")
    degree_s: list[int] = Field(description="Degree S of psi")
    phi_index: int = Field(default=0, ge=0, description="Basis index in T1(-R)")
    psi_index: int = Field(default=0, ge=0, description="Basis index in T1(-S)")
    anchor_policy: Literal["min", "max"] = "min"


class ConeResponse(BaseModel):
    """Cone response schema."""

    rank: int
    generators: list[list[int]]
    dropped_generators: list[list[int]]
    facet_normals: list[list[int]]
    smooth_in_codim2: bool
    smooth_in_codim3: bool

    @classmethod
    def from_domain(cls, cone: Cone) -> "ConeResponse":
        return cls(
            rank=cone.rank,
            generators=[list(g) for g in cone.generators],
            dropped_generators=[list(g) for g in cone.dropped_generators],
            facet_normals=[list(u) for u in cone.facet_normals],
            smooth_in_codim2=is_smooth_in_codim2(cone),
            smooth_in_codim3=is_smooth_in_codim3(cone),
        )


class HilbertResponse(BaseModel):
    """{"E": [...], "count": w + 1}"""

    model_config = ConfigDict(populate_by_name=True)

    cone: ConeResponse
    elements: list[list[int]] = Field(alias="E")
    count: int

    @classmethod
    def from_domain(cls, cone: Cone, basis: HilbertBasis) -> "HilbertResponse":
        return cls(
            cone=ConeResponse.from_domain(cone),
            elements=[list(e) for e in basis.elements],
            count=basis.size,
        )


class T1Response(BaseModel):
    degree: list[int]
    t1_dim: int
    basis: list[list[Rational]] = Field(
        description="Values of each basis functional on the basis of L(E_0^R)"
    )

    @classmethod
    def from_domain(cls, piece: T1Piece) -> "T1Response":
        return cls(
            degree=list(piece.degree),
            t1_dim=piece.dimension,
            basis=[encode_vector(b.values) for b in piece.basis],
        )


class SpanComplexResponse(BaseModel):
    t1_dim: int
    t2_dim: int
    v_t1_dim: int
    v_t2_dim: int
    v_t1_valid: bool
    v_t2_valid: bool

    @classmethod
    def from_domain(cls, result: SpanComplexResult) -> "SpanComplexResponse":
        return cls(**result.model_dump(exclude={"degree"}))


class T2Response(BaseModel):
    degree: list[int]
    t2_dim: int
    h1_dim: int = Field(description="First cohomology of the dual relation complex")
    t2_is_exact: bool
    t2_label: str
    basis: list[list[list[Rational]]] = Field(
        description="Canonical blocks (psi_1, ..., psi_N) of each basis class"
    )
    span_complex: SpanComplexResponse

    @classmethod
    def from_domain(cls, piece: T2Piece, span: SpanComplexResult) -> "T2Response":
        return cls(
            degree=list(piece.degree),
            t2_dim=piece.dimension,
            h1_dim=piece.dimension,
            t2_is_exact=piece.is_exact,
            t2_label=piece.label.value,
            basis=[[encode_vector(block) for block in b.values] for b in piece.basis],
            span_complex=SpanComplexResponse.from_domain(span),
        )


class ScanEntryResponse(BaseModel):
    degree: list[int]
    t1_dim: int
    t2_dim: int


class ScanResponse(BaseModel):
    bound: int
    degrees_scanned: int
    heuristic_box: bool
    t2_label: str
    total_t1: int
    total_t2: int
    entries: list[ScanEntryResponse]

    @classmethod
    def from_domain(cls, result: ScanResult) -> "ScanResponse":
        return cls(
            bound=result.bound,
            degrees_scanned=result.degrees_scanned,
            heuristic_box=result.heuristic_box,
            t2_label=result.t2_label.value,
            total_t1=result.total_t1,
            total_t2=result.total_t2,
            entries=[
                ScanEntryResponse(
                    degree=list(e.degree), t1_dim=e.t1_dim, t2_dim=e.t2_dim
                )
                for e in result.entries
            ],
        )


class CupResponse(BaseModel):
    degree_r: list[int]
    degree_s: list[int]
    phi_index: int
    psi_index: int
    degree: list[int] = Field(description="R + S")
    values: list[list[Rational]] = Field(description="Canonical T2 blocks")
    is_zero: bool
    bridged_vector: list[Rational] | None = None

    @classmethod
    def from_domain(cls, result: CupResult) -> "CupResponse":
        product = result.product
        return cls(
            degree_r=list(result.degree_r),
            degree_s=list(result.degree_s),
            phi_index=result.phi_index,
            psi_index=result.psi_index,
            degree=list(product.degree),
            values=[encode_vector(block) for block in product.values],
            is_zero=product.is_zero(),
            bridged_vector=(
                encode_vector(result.bridged_vector)
                if result.bridged_vector is not None
                else None
            ),
        )

"""Gorenstein polygon API schemas."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from toricdef.domain.entities.report import CupComparison, GorensteinReport
from toricdef.presentation.schemas.common import Rational, encode_vector


class PolygonSource(BaseModel):
    """A polygon given by its vertices or by a fixture name."""

    vertices: list[tuple[int, int]] | None = Field(
        default=None, description="Counterclockwise vertices a^1, ..., a^N"
    )
    fixture: str | None = Field(default=None, description="Built-in polygon name")

    @model_validator(mode="after")
    def check_source(self) -> "PolygonSource":
        if (self.vertices is None) == (self.fixture is None):
            raise ValueError("give exactly one of 'vertices' and 'fixture'")
        return self


class GorensteinRequest(PolygonSource):
    kmax: int = Field(default=4, ge=2, le=12, description="Largest k for T2(-kR*)")
    verify: bool = Field(default=False, description="Compare with the machinery")


class CupRowResponse(BaseModel):
    s_index: int
    t_index: int
    closed_form: list[Rational] = Field(description="sum_i s_i t_i d^i")
    general: list[Rational] | None = None
    match: bool | None = None

    @classmethod
    def from_domain(cls, row: CupComparison) -> "CupRowResponse":
        computed = row.general is not None
        return cls(
            s_index=row.s_index,
            t_index=row.t_index,
            closed_form=encode_vector(row.closed_form),
            general=encode_vector(row.general) if computed else None,
            match=row.match if computed else None,
        )


class VersalEquationResponse(BaseModel):
    k: int
    equations: list[str]


class DimensionRowResponse(BaseModel):
    k: int
    closed_form: int
    machinery: int
    match: bool


class VerifyResponse(BaseModel):
    all_match: bool
    dimensions: list[DimensionRowResponse]
    cups_match: bool


class GorensteinResponse(BaseModel):
    """Gorenstein polygon response schema."""

    model_config = ConfigDict(populate_by_name=True)

    size: int = Field(alias="N")
    vertices: list[list[int]]
    t1_dim: int
    summand_dim: int = Field(description="dim V")
    k1: int
    k2: int
    t2_dims: dict[str, int] = Field(description="Closed-form dim T2(-kR*) by k")
    r_star_in_E: bool
    cup_table: list[CupRowResponse]
    versal_equations: list[VersalEquationResponse]
    versal_linear_part_matches: bool
    versal_quadratic_part_matches: bool
    verify: VerifyResponse | None = None

    @classmethod
    def from_domain(cls, report: GorensteinReport) -> "GorensteinResponse":
        verification = report.verification
        verify = None
        if verification is not None:
            verify = VerifyResponse(
                all_match=verification.all_match,
                dimensions=[
                    DimensionRowResponse(
                        k=d.k,
                        closed_form=d.closed_form,
                        machinery=d.machinery,
                        match=d.match,
                    )
                    for d in verification.dimensions
                ],
                cups_match=all(c.match for c in verification.cups),
            )
        versal = report.versal
        return cls(
            size=report.size,
            vertices=[list(v) for v in report.vertices],
            t1_dim=report.t1_dim,
            summand_dim=report.summand_dim,
            k1=report.k1,
            k2=report.k2,
            t2_dims={str(k): d for k, d in sorted(report.t2_dims.items())},
            r_star_in_E=report.r_star_in_basis,
            cup_table=[CupRowResponse.from_domain(row) for row in report.cup_table],
            versal_equations=[
                VersalEquationResponse(k=e.k, equations=list(e.equations))
                for e in (versal.equations if versal else ())
            ],
            versal_linear_part_matches=bool(versal and versal.linear_part_matches),
            versal_quadratic_part_matches=bool(
                versal and versal.quadratic_part_matches
            ),
            verify=verify,
        )

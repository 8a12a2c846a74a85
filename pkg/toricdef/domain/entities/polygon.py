"""Lattice polygons and the Gorenstein cones over them."""

from fractions import Fraction
from math import gcd

from pydantic import BaseModel, ConfigDict, Field, model_validator

from toricdef.core.exceptions import PolygonError

from .cone import Cone, DualVector
from .hilbert import HilbertBasis

Point = tuple[int, int]


def _cross(u: Point, v: Point) -> int:
    return u[0] * v[1] - u[1] * v[0]


class LatticePolygon(BaseModel):
    """Convex lattice polygon with primitive edges, vertices counterclockwise."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[Point, ...] = Field(description="a^1, ..., a^N")

    @model_validator(mode="after")
    def check_shape(self) -> "LatticePolygon":
        count = len(self.vertices)
        if count < 3:
            raise PolygonError("a polygon needs at least 3 vertices")
        if len(set(self.vertices)) != count:
            raise PolygonError("vertices must be distinct")
        for k, d in enumerate(self.edges, start=1):
            if gcd(*d) != 1:
                raise PolygonError(f"edge {k} is not primitive", edge=d)
        area = sum(
            _cross(self.vertices[k], self.vertices[(k + 1) % count])
            for k in range(count)
        )
        if area < 0:
            raise PolygonError("vertices are in clockwise order")
        for k in range(count):
            if _cross(self.edges[k - 1], self.edges[k]) <= 0:
                raise PolygonError(f"not convex at vertex {k + 1}", vertex=k + 1)
        return self

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> tuple[Point, ...]:
        """d^i = a^{i+1} - a^i, indices cyclic."""
        count = len(self.vertices)
        return tuple(
            (
                self.vertices[(k + 1) % count][0] - self.vertices[k][0],
                self.vertices[(k + 1) % count][1] - self.vertices[k][1],
            )
            for k in range(count)
        )

    def translated(self) -> "LatticePolygon":
        """The same polygon moved so that its first vertex is the origin."""
        x0, y0 = self.vertices[0]
        moved = tuple((x - x0, y - y0) for x, y in self.vertices)
        return LatticePolygon(vertices=moved)

    def to_payload(self) -> dict[str, object]:
        return {"vertices": [list(v) for v in self.vertices]}


class SummandSpace(BaseModel):
    """V = {t in Q^N : sum_i t_i d^i = 0}."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    basis: tuple[tuple[Fraction, ...], ...]
    quotient_basis: tuple[tuple[Fraction, ...], ...] = Field(
        description="Basis vectors of V independent modulo (1, ..., 1)"
    )

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def ones(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(1) for _ in self.basis[0]) if self.basis else ()


class GorensteinContext(BaseModel):
    """Cone over a polygon at height one, with its Hilbert basis."""

    model_config = ConfigDict(frozen=True)

    polygon: LatticePolygon = Field(description="Translated so that a^1 = 0")
    cone: Cone
    basis: HilbertBasis
    r_star: DualVector = (0, 0, 1)

    @property
    def r_star_in_basis(self) -> bool:
        return self.r_star in self.basis.elements

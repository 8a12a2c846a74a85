"""Cone entities."""

from pydantic import BaseModel, ConfigDict, Field

LatticeVector = tuple[int, ...]
DualVector = tuple[int, ...]


class Face(BaseModel):
    """A face of a cone, given by the generators it contains."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[int, ...] = Field(description="Sorted generator indices")
    dimension: int = Field(ge=0)

    def contains(self, other: "Face") -> bool:
        """Check whether ``other`` is a face of this face."""
        return set(other.generators) <= set(self.generators)


class Cone(BaseModel):
    """Pointed, full-dimensional rational polyhedral cone in N = Z^n."""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(ge=1, description="Ambient rank n")
    generators: tuple[LatticeVector, ...] = Field(
        description="Primitive, irredundant generators in input order"
    )
    facet_normals: tuple[DualVector, ...] = Field(
        description="Primitive inner facet normals, sorted lexicographically"
    )
    faces: tuple[Face, ...] = Field(description="All faces, the apex and the cone")
    dropped_generators: tuple[LatticeVector, ...] = Field(
        default=(), description="Redundant input generators that were removed"
    )

    @property
    def size(self) -> int:
        """Number of generators N."""
        return len(self.generators)

    def faces_of_dimension(self, dimension: int) -> list[Face]:
        """Faces of the given dimension, the cone itself included."""
        return sorted(
            (f for f in self.faces if f.dimension == dimension),
            key=lambda f: f.generators,
        )

    @property
    def two_faces(self) -> list[tuple[int, int]]:
        """Index pairs (i, j), i < j, spanning a 2-dimensional face."""
        return [
            (f.generators[0], f.generators[1]) for f in self.faces_of_dimension(2)
        ]

    @property
    def incidence(self) -> tuple[frozenset[int], ...]:
        """For each generator, the indices of the facets containing it."""
        return tuple(
            frozenset(
                k
                for k, u in enumerate(self.facet_normals)
                if sum(x * y for x, y in zip(a, u)) == 0
            )
            for a in self.generators
        )

    def to_payload(self) -> dict[str, object]:
        """Input-file representation."""
        return {"rank": self.rank, "generators": [list(g) for g in self.generators]}


class DualCone(BaseModel):
    """The dual cone, given by its primitive extreme rays."""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(ge=1)
    rays: tuple[DualVector, ...] = Field(description="Sorted lexicographically")
    cone_generators: tuple[LatticeVector, ...] = Field(
        description="Generators of the primal cone (the inequalities)"
    )

    def contains(self, m: DualVector) -> bool:
        """r lies in the dual cone iff it pairs nonnegatively with every generator."""
        return all(sum(x * y for x, y in zip(a, m)) >= 0 for a in self.cone_generators)

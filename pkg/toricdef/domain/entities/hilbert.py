"""Hilbert basis and relation entities."""

from functools import cached_property

from pydantic import BaseModel, ConfigDict, Field

from .cone import DualVector


class HilbertBasis(BaseModel):
    """Minimal generating set E of the semigroup of lattice points of the dual cone."""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(ge=1)
    elements: tuple[DualVector, ...] = Field(description="E, sorted lexicographically")
    cone_generators: tuple[tuple[int, ...], ...] = Field(
        description="Generators a^i of the primal cone"
    )
    linear_section: tuple[tuple[int, ...], ...] = Field(
        description="Integer right inverse of pi, |E| x n"
    )

    @property
    def size(self) -> int:
        """Number of elements w + 1."""
        return len(self.elements)

    @cached_property
    def pi_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of pi: Z^E -> M, one column per element of E."""
        return tuple(
            tuple(e[k] for e in self.elements) for k in range(self.rank)
        )

    @cached_property
    def heights(self) -> tuple[tuple[int, ...], ...]:
        """heights[i][v] = <a^i, r^v>."""
        return tuple(
            tuple(sum(x * y for x, y in zip(a, e)) for e in self.elements)
            for a in self.cone_generators
        )

    def index(self, element: DualVector) -> int:
        return self.elements.index(tuple(element))


class Relation(BaseModel):
    """Integer vector q on E with pi(q) = 0."""

    model_config = ConfigDict(frozen=True)

    q: tuple[int, ...]

    @property
    def positive(self) -> tuple[int, ...]:
        """q+ (componentwise positive part)."""
        return tuple(max(x, 0) for x in self.q)

    @property
    def negative(self) -> tuple[int, ...]:
        """q- with q = q+ - q-."""
        return tuple(max(-x, 0) for x in self.q)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.q) if x)

    def is_zero(self) -> bool:
        return not any(self.q)

    def bar(self, basis: HilbertBasis) -> DualVector:
        """q-bar = pi(q+)."""
        positive = self.positive
        return tuple(
            sum(c * e[k] for c, e in zip(positive, basis.elements))
            for k in range(basis.rank)
        )

    def __neg__(self) -> "Relation":
        return Relation(q=tuple(-x for x in self.q))

"""Hilbert basis of the dual cone, the surjection pi and the section Phi."""

import itertools
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from toricdef.core.config import settings
from toricdef.core.exceptions import (
    DimensionMismatchError,
    ScanBoxTooLargeError,
    SectionError,
)
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import DualCone, DualVector
from toricdef.domain.entities.hilbert import HilbertBasis
from toricdef.domain.services.exact_linalg import (
    IntVector,
    integer_section,
    rank,
    solve_rational,
)

logger = get_logger(__name__)


def membership(m: Sequence[int], dual: DualCone) -> bool:
    """m lies in the dual cone."""
    return dual.contains(tuple(m))


def _heights(generators: Sequence[Sequence[int]], m: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(a, m)) for a in generators]


def lattice_points_by_heights(
    generators: Sequence[Sequence[int]],
    lower: Sequence[int],
    upper: Sequence[int],
    limit: int,
    coordinate_bounds: Sequence[tuple[int, int]] | None = None,
) -> list[DualVector]:
    """Lattice points m with lower[i] <= <a^i, m> <= upper[i] for all i.

    The generators must span; the box is derived from n independent ones.
    """
    dimension = len(generators[0])
    chosen: list[int] = []
    for i, a in enumerate(generators):
        if rank([generators[c] for c in chosen] + [a], dimension) > len(chosen):
            chosen.append(i)
        if len(chosen) == dimension:
            break
    matrix = [generators[c] for c in chosen]
    inverse_columns = []
    for k in range(dimension):
        unit = [int(j == k) for j in range(dimension)]
        column = solve_rational(matrix, unit, dimension)
        assert column is not None
        inverse_columns.append(column)

    bounds = []
    for j in range(dimension):
        low = Fraction(0)
        high = Fraction(0)
        for k, c in enumerate(chosen):
            coefficient = inverse_columns[k][j]
            ends = (coefficient * lower[c], coefficient * upper[c])
            low += min(ends)
            high += max(ends)
        lo, hi = ceil(low), floor(high)
        if coordinate_bounds is not None:
            lo = max(lo, coordinate_bounds[j][0])
            hi = min(hi, coordinate_bounds[j][1])
        bounds.append((lo, hi))

    volume = 1
    for lo, hi in bounds:
        volume *= max(hi - lo + 1, 0)
    if volume > limit:
        raise ScanBoxTooLargeError(
            f"enumeration box holds {volume} lattice points (limit {limit})",
            volume=volume,
        )

    points = []
    for m in itertools.product(*(range(lo, hi + 1) for lo, hi in bounds)):
        hs = _heights(generators, m)
        if all(lo <= h <= hi for lo, h, hi in zip(lower, hs, upper)):
            points.append(tuple(m))
    return points


def hilbert_basis(dual: DualCone) -> HilbertBasis:
    """Irreducible lattice points of the dual cone.

    Candidates are lattice points of the zonotope spanned by the extreme rays,
    cut down by the height bound <a^i, m> <= sum_j <a^i, u_j>.
    """
    generators = dual.cone_generators
    rays = dual.rays
    zonotope_heights = [
        sum(sum(x * y for x, y in zip(a, u)) for u in rays) for a in generators
    ]
    coordinate_bounds = [
        (
            sum(min(0, u[k]) for u in rays),
            sum(max(0, u[k]) for u in rays),
        )
        for k in range(dual.rank)
    ]
    candidates = lattice_points_by_heights(
        generators,
        [0] * len(generators),
        zonotope_heights,
        settings.HILBERT_MAX_CANDIDATES,
        coordinate_bounds,
    )
    candidates = [m for m in candidates if any(m)]
    candidates.sort(key=lambda m: (sum(_heights(generators, m)), m))

    irreducible: list[DualVector] = []
    for m in candidates:
        reducible = any(
            dual.contains(tuple(x - y for x, y in zip(m, e))) for e in irreducible
        )
        if not reducible:
            irreducible.append(m)

    elements = tuple(sorted(irreducible))
    pi_rows = [[e[k] for e in elements] for k in range(dual.rank)]
    section = integer_section(pi_rows)
    logger.debug("Computed Hilbert basis", size=len(elements))
    return HilbertBasis(
        rank=dual.rank,
        elements=elements,
        cone_generators=generators,
        linear_section=section,
    )


def pi(basis: HilbertBasis, a: Sequence[int]) -> DualVector:
    """a -> sum_v a_v r^v."""
    if len(a) != basis.size:
        raise DimensionMismatchError(
            f"expected a vector of length {basis.size}, got {len(a)}"
        )
    return tuple(
        sum(c * e[k] for c, e in zip(a, basis.elements)) for k in range(basis.rank)
    )


class SectionPhi:
    """Fixed set-theoretic section of pi.

    Semigroup elements are decomposed greedily along ``order`` (default: the
    order of E), everything else goes through the linear section.
    """

    def __init__(
        self,
        basis: HilbertBasis,
        order: Sequence[int] | None = None,
        search_limit: int | None = None,
    ):
        self.basis = basis
        self.order = tuple(order) if order is not None else tuple(range(basis.size))
        if sorted(self.order) != list(range(basis.size)):
            raise ValueError("order must be a permutation of the Hilbert basis indices")
        self.search_limit = search_limit or settings.PHI_SEARCH_LIMIT
        self._lookup = lru_cache(maxsize=settings.SECTION_CACHE_SIZE)(self._section)

    def in_semigroup(self, m: Sequence[int]) -> bool:
        return all(h >= 0 for h in _heights(self.basis.cone_generators, m))

    def __call__(self, m: Sequence[int]) -> IntVector:
        key = tuple(int(x) for x in m)
        if len(key) != self.basis.rank:
            raise DimensionMismatchError("degree has the wrong rank")
        return self._lookup(key)

    def cache_info(self):
        return self._lookup.cache_info()

    def _section(self, key: DualVector) -> IntVector:
        if self.in_semigroup(key):
            return self._decompose(key)
        return tuple(
            sum(row[k] * key[k] for k in range(self.basis.rank))
            for row in self.basis.linear_section
        )

    def _decompose(self, m: DualVector) -> IntVector:
        generators = self.basis.cone_generators
        heights = self.basis.heights
        remainder = list(_heights(generators, m))
        coefficients = [0] * self.basis.size
        for v in self.order:
            ratios = [
                remainder[i] // heights[i][v]
                for i in range(len(generators))
                if heights[i][v] > 0
            ]
            k = min(ratios)
            if k > 0:
                coefficients[v] += k
                for i in range(len(generators)):
                    remainder[i] -= k * heights[i][v]
        if any(remainder):
            logger.warning("Greedy section stalled, searching", degree=m)
            return self._search(m)
        return tuple(coefficients)

    def _search(self, m: DualVector) -> IntVector:
        generators = self.basis.cone_generators
        heights = self.basis.heights
        budget = [self.search_limit]

        def walk(remainder: list[int], start: int) -> list[int] | None:
            if not any(remainder):
                return []
            budget[0] -= 1
            if budget[0] < 0:
                return None
            for position in range(start, len(self.order)):
                v = self.order[position]
                rest = [remainder[i] - heights[i][v] for i in range(len(generators))]
                if all(h >= 0 for h in rest):
                    found = walk(rest, position)
                    if found is not None:
                        return [v, *found]
            return None

        path = walk(_heights(generators, m), 0)
        if path is None:
            raise SectionError(f"no nonnegative decomposition found for {m}")
        coefficients = [0] * self.basis.size
        for v in path:
            coefficients[v] += 1
        return tuple(coefficients)

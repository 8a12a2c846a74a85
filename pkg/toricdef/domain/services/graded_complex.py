"""Graded pieces T1(-R) and T2(-R) from the relation complexes L(E^R).

For a degree R the sets E_i^R = {r in E : <a^i, r> < <a^i, R>} give the
complex

    sum over 2-faces L(E_i^R & E_j^R) -> sum_i L(E_i^R) -> L(E_0^R)

whose dual has H0 = T1(-R) and, for cones smooth in codimension 2,
H1 = T2(-R). Functionals are stored by their values on the kernel bases of
``exact_linalg``; T2 values are reduced modulo the restrictions of global
functionals so that equal classes have equal values.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from toricdef.core.config import settings
from toricdef.core.exceptions import (
    CocycleViolationError,
    ComputationError,
    DimensionMismatchError,
    SchemaError,
    SNotInDualConeError,
)
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import Cone, DualVector
from toricdef.domain.entities.elements import (
    ScanEntry,
    ScanResult,
    T1Element,
    T1Piece,
    T2Element,
    T2Label,
    T2Piece,
)
from toricdef.domain.entities.hilbert import HilbertBasis
from toricdef.domain.services.cone_geometry import is_smooth_in_codim2, pairing
from toricdef.domain.services.exact_linalg import (
    KernelBasis,
    RatVector,
    RowSpace,
    dot,
    rank,
    rational_kernel_basis,
    row_space,
)
from toricdef.domain.services.hilbert_basis import lattice_points_by_heights

logger = get_logger(__name__)


def relation_space(basis: HilbertBasis, subset: Sequence[int]) -> KernelBasis:
    """L(S): relations supported on ``subset``, as vectors in Q^E."""
    members = tuple(sorted(subset))
    restricted = [[row[v] for v in members] for row in basis.pi_matrix]
    local = rational_kernel_basis(restricted, len(members))
    vectors = []
    for vector in local.vectors:
        full = [Fraction(0)] * basis.size
        for position, v in enumerate(members):
            full[v] = vector[position]
        vectors.append(tuple(full))
    return KernelBasis(
        vectors=tuple(vectors),
        free_columns=tuple(members[c] for c in local.free_columns),
        length=basis.size,
    )


@dataclass(frozen=True)
class DegreeData:
    """Index sets and relation spaces of one degree R."""

    cone: Cone
    basis: HilbertBasis
    degree: DualVector
    facet_sets: tuple[tuple[int, ...], ...]
    union_set: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    pair_sets: tuple[tuple[int, ...], ...]
    facet_spaces: tuple[KernelBasis, ...]
    union_space: KernelBasis
    pair_spaces: tuple[KernelBasis, ...]

    @property
    def degree_heights(self) -> tuple[int, ...]:
        """<a^i, R> for every generator."""
        return tuple(pairing(a, self.degree) for a in self.cone.generators)

    def face_set(self, generators: Sequence[int]) -> tuple[int, ...]:
        """E_tau^R; the apex gives E_0^R."""
        if not generators:
            return self.union_set
        common = set(self.facet_sets[generators[0]])
        for i in generators[1:]:
            common &= set(self.facet_sets[i])
        return tuple(sorted(common))

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """Start of each block L(E_i^R)^* in the stacked coordinates."""
        starts, position = [], 0
        for space in self.facet_spaces:
            starts.append(position)
            position += space.dimension
        return (*starts, position)

    @property
    def stacked_dimension(self) -> int:
        return self.offsets[-1]

    @cached_property
    def t1_constraints(self) -> tuple[RatVector, ...]:
        """Coordinates in L(E_0^R) of the basis vectors of every L(E_i^R)."""
        return tuple(
            self.union_space.coordinates(vector)
            for space in self.facet_spaces
            for vector in space.vectors
        )

    @cached_property
    def cocycle_rows(self) -> tuple[RatVector, ...]:
        """Images d2(q) of the basis vectors q of each L(E_i^R & E_j^R)."""
        rows = []
        for (i, j), space in zip(self.pairs, self.pair_spaces, strict=True):
            for q in space.vectors:
                row = [Fraction(0)] * self.stacked_dimension
                for k, x in enumerate(self.facet_spaces[i].coordinates(q)):
                    row[self.offsets[i] + k] += x
                for k, x in enumerate(self.facet_spaces[j].coordinates(q)):
                    row[self.offsets[j] + k] -= x
                rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def restriction_space(self) -> RowSpace:
        """W1: restrictions of functionals on Q^E to every L(E_i^R)."""
        rows = []
        for v in self.union_set:
            row = [Fraction(0)] * self.stacked_dimension
            for i, space in enumerate(self.facet_spaces):
                for k, vector in enumerate(space.vectors):
                    row[self.offsets[i] + k] = vector[v]
            rows.append(row)
        return row_space(rows, self.stacked_dimension)

    def split(self, flat: Sequence[Fraction]) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(
            tuple(Fraction(x) for x in flat[self.offsets[i] : self.offsets[i + 1]])
            for i in range(len(self.facet_spaces))
        )


def degree_data(cone: Cone, basis: HilbertBasis, degree: Sequence[int]) -> DegreeData:
    """Build E_i^R, E_0^R, the 2-face intersections and their relation spaces."""
    if len(degree) != cone.rank:
        raise DimensionMismatchError(
            f"degree has length {len(degree)}, expected {cone.rank}"
        )
    R = tuple(int(x) for x in degree)
    facet_sets = tuple(
        tuple(
            v
            for v in range(basis.size)
            if basis.heights[i][v] < pairing(a, R)
        )
        for i, a in enumerate(cone.generators)
    )
    union_set = tuple(sorted(set().union(*facet_sets)))
    pairs = tuple(cone.two_faces)
    pair_sets = tuple(
        tuple(sorted(set(facet_sets[i]) & set(facet_sets[j]))) for i, j in pairs
    )
    return DegreeData(
        cone=cone,
        basis=basis,
        degree=R,
        facet_sets=facet_sets,
        union_set=union_set,
        pairs=pairs,
        pair_sets=pair_sets,
        facet_spaces=tuple(relation_space(basis, s) for s in facet_sets),
        union_space=relation_space(basis, union_set),
        pair_spaces=tuple(relation_space(basis, s) for s in pair_sets),
    )


def t1_dimension(dd: DegreeData) -> int:
    return dd.union_space.dimension - rank(dd.t1_constraints, dd.union_space.dimension)


def t1_piece(dd: DegreeData) -> T1Piece:
    """(L(E_0^R) / sum_i L(E_i^R))^* with a deterministic basis."""
    kernel = rational_kernel_basis(dd.t1_constraints, dd.union_space.dimension)
    elements = tuple(T1Element(degree=dd.degree, values=v) for v in kernel.vectors)
    return T1Piece(degree=dd.degree, dimension=len(elements), basis=elements)


def t1_element(dd: DegreeData, values: Sequence[int | Fraction]) -> T1Element:
    """Validate user-supplied values on the basis of L(E_0^R)."""
    if len(values) != dd.union_space.dimension:
        raise DimensionMismatchError(
            f"expected {dd.union_space.dimension} values, got {len(values)}"
        )
    converted = tuple(Fraction(x) for x in values)
    if any(dot(row, converted) for row in dd.t1_constraints):
        raise SchemaError("functional does not vanish on the sum of the L(E_i^R)")
    return T1Element(degree=dd.degree, values=converted)


def t2_label(cone: Cone) -> T2Label:
    if cone.rank == 2:
        return T2Label.NOT_APPLICABLE
    return T2Label.EXACT if is_smooth_in_codim2(cone) else T2Label.SUBSPACE


def t2_dimension(dd: DegreeData) -> int:
    """dim(sum_i L(E_i^R)) - rank d1 - rank d2."""
    return (
        dd.stacked_dimension
        - dd.restriction_space.dimension
        - rank(dd.cocycle_rows, dd.stacked_dimension)
    )


def t2_piece(dd: DegreeData) -> T2Piece:
    """First cohomology of the dual relation complex with a canonical basis."""
    cocycles = rational_kernel_basis(dd.cocycle_rows, dd.stacked_dimension)
    reduced = [dd.restriction_space.reduce(z) for z in cocycles.vectors]
    complement = row_space(reduced, dd.stacked_dimension)
    expected = t2_dimension(dd)
    if complement.dimension != expected:
        raise ComputationError(
            "cocycle basis does not match the rank formula",
            found=complement.dimension,
            expected=expected,
        )
    elements = tuple(
        T2Element(degree=dd.degree, values=dd.split(row)) for row in complement.rows
    )
    label = t2_label(dd.cone)
    return T2Piece(
        degree=dd.degree,
        dimension=len(elements),
        basis=elements,
        is_exact=is_smooth_in_codim2(dd.cone),
        label=label,
    )


def is_cocycle(dd: DegreeData, flat: Sequence[Fraction]) -> bool:
    return not any(dot(row, flat) for row in dd.cocycle_rows)


def canonical_t2(
    dd: DegreeData, values: Sequence[Sequence[int | Fraction]]
) -> T2Element:
    """Check the cocycle condition and reduce modulo W1."""
    if len(values) != len(dd.facet_spaces) or any(
        len(block) != space.dimension
        for block, space in zip(values, dd.facet_spaces)
    ):
        raise DimensionMismatchError("value blocks do not match the L(E_i^R) bases")
    flat = tuple(Fraction(x) for block in values for x in block)
    if not is_cocycle(dd, flat):
        raise CocycleViolationError(
            "psi_i and psi_j differ on L(E_i^R & E_j^R)", degree=dd.degree
        )
    reduced = dd.restriction_space.reduce(flat)
    return T2Element(degree=dd.degree, values=dd.split(reduced))


def _restrict(
    source: KernelBasis, target: KernelBasis, values: Sequence[Fraction]
) -> tuple[Fraction, ...]:
    return tuple(
        sum(
            (c * x for c, x in zip(source.coordinates(vector), values, strict=True)),
            Fraction(0),
        )
        for vector in target.vectors
    )


def multiply_by_character(
    x: T1Element | T2Element,
    s: Sequence[int],
    cone: Cone,
    basis: HilbertBasis,
) -> T1Element | T2Element:
    """Multiplication by x^s: restrict along L(E_i^{R-s}) in L(E_i^R)."""
    shift = tuple(int(c) for c in s)
    if len(shift) != cone.rank:
        raise DimensionMismatchError("s has the wrong rank")
    if any(pairing(a, shift) < 0 for a in cone.generators):
        raise SNotInDualConeError(f"{list(shift)} is not in the dual cone")
    source = degree_data(cone, basis, x.degree)
    target = degree_data(cone, basis, tuple(r - c for r, c in zip(x.degree, shift)))
    if isinstance(x, T1Element):
        return T1Element(
            degree=target.degree,
            values=_restrict(source.union_space, target.union_space, x.values),
        )
    blocks = [
        _restrict(source.facet_spaces[i], target.facet_spaces[i], x.values[i])
        for i in range(cone.size)
    ]
    return canonical_t2(target, blocks)


def scan_box(
    cone: Cone, basis: HilbertBasis, bound: int | None = None
) -> tuple[list[int], list[int]]:
    """Lower and upper height bounds -B <= <a^i, R> <= max height + 1."""
    b = settings.SCAN_DEFAULT_BOUND if bound is None else bound
    lower = [-b] * cone.size
    upper = [max(basis.heights[i]) + 1 for i in range(cone.size)]
    return lower, upper


def degree_scan(
    cone: Cone, basis: HilbertBasis, bound: int | None = None
) -> ScanResult:
    """Dimensions of T1(-R) and T2(-R) for every R in the scan box.

    The box is a heuristic: nothing guarantees that the nonzero pieces lie
    inside it.
    """
    b = settings.SCAN_DEFAULT_BOUND if bound is None else bound
    lower, upper = scan_box(cone, basis, b)
    degrees = lattice_points_by_heights(
        cone.generators, lower, upper, settings.SCAN_MAX_POINTS
    )
    entries = []
    for R in sorted(degrees):
        dd = degree_data(cone, basis, R)
        t1 = t1_dimension(dd)
        t2 = t2_dimension(dd)
        if t1 or t2:
            entries.append(ScanEntry(degree=R, t1_dim=t1, t2_dim=t2))
    logger.info(
        "Scanned degrees",
        degrees=len(degrees),
        nonzero=len(entries),
        bound=b,
    )
    return ScanResult(
        entries=tuple(entries),
        degrees_scanned=len(degrees),
        bound=b,
        t2_label=t2_label(cone),
    )


def union_criterion_holds(dd: DegreeData) -> bool:
    """e lies in E_0^R exactly when e - R is not in the dual cone."""
    union = set(dd.union_set)
    for v, e in enumerate(dd.basis.elements):
        shifted = tuple(x - r for x, r in zip(e, dd.degree))
        above = all(pairing(a, shifted) >= 0 for a in dd.cone.generators)
        if (v in union) == above:
            return False
    return True


def directedness_holds(dd: DegreeData, i: int, truncation: int = 2) -> bool:
    """Any two points of K_i^R in a box have a common upper bound in K_i^R.

    Points are taken with heights at most ``truncation`` on the other
    generators; the upper bound is searched with twice that allowance.
    """
    h = dd.degree_heights[i]
    if h <= 0:
        return True

    def points(allowance: int) -> list[DualVector]:
        upper = [allowance] * dd.cone.size
        upper[i] = h - 1
        return lattice_points_by_heights(
            dd.cone.generators, [0] * dd.cone.size, upper, settings.SCAN_MAX_POINTS
        )

    def dominates(big: DualVector, small: DualVector) -> bool:
        difference = tuple(x - y for x, y in zip(big, small))
        return all(pairing(a, difference) >= 0 for a in dd.cone.generators)

    small = points(truncation)
    large = points(2 * truncation)
    return all(
        any(dominates(ell, r) and dominates(ell, s) for ell in large)
        for r in small
        for s in small
    )

"""The span(E^R) complex, its V-variant and the zig-zag into it.

Terms by face dimension: span(E_0^R) at the apex, span(E_i^R) on rays,
span(E_tau^R) on 2- and 3-faces. The 3-face differential follows the cycle of
2-faces of the face; a 2-face (i, j), i < j, enters with sign +1 when the cycle
walks from i to j.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from toricdef.core.exceptions import (
    CocycleViolationError,
    DimensionMismatchError,
    IsoCheckFailedError,
)
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import Cone, Face
from toricdef.domain.entities.elements import (
    ElementHomology,
    SpanComplexResult,
    T2Element,
)
from toricdef.domain.services.cone_geometry import (
    face_cycle,
    is_smooth_in_codim2,
    is_smooth_in_codim3,
)
from toricdef.domain.services.exact_linalg import (
    RatVector,
    RowSpace,
    dot,
    identity,
    rank,
    rational_kernel_basis,
    row_space,
    solve_rational,
)
from toricdef.domain.services.graded_complex import DegreeData, is_cocycle

logger = get_logger(__name__)

SpaceBuilder = Callable[[Sequence[int]], RowSpace]


def oriented_edges(cone: Cone, face: Face) -> list[tuple[tuple[int, int], int]]:
    """2-faces of a 3-face with their signs in the boundary map."""
    cycle = face_cycle(cone, face)
    edges = []
    for k, start in enumerate(cycle):
        end = cycle[(k + 1) % len(cycle)]
        key = (min(start, end), max(start, end))
        edges.append((key, 1 if start < end else -1))
    return edges


def three_faces(cone: Cone) -> list[Face]:
    return cone.faces_of_dimension(3)


def span_space(dd: DegreeData, generators: Sequence[int]) -> RowSpace:
    """span(E_tau^R) in M_Q."""
    members = dd.face_set(generators)
    return row_space([dd.basis.elements[v] for v in members], dd.cone.rank)


def v_space(dd: DegreeData, generators: Sequence[int]) -> RowSpace:
    """V_tau^R: 0, the wall <a^i, .> = 0 or all of M_Q, intersected over tau."""
    n = dd.cone.rank
    if not generators:
        pieces = [v_space(dd, (i,)) for i in range(dd.cone.size)]
        return row_space([row for p in pieces for row in p.rows], n)
    constraints: list[Sequence[int]] = []
    for i in generators:
        h = dd.degree_heights[i]
        if h <= 0:
            constraints.extend(identity(n))
        elif h == 1:
            constraints.append(dd.cone.generators[i])
    kernel = rational_kernel_basis(constraints, n)
    return row_space(kernel.vectors, n)


@dataclass(frozen=True)
class FaceComplexRanks:
    """Term dimensions and differential ranks of a face-indexed complex."""

    term_dims: tuple[int, int, int, int]
    ranks: tuple[int, int, int]

    @property
    def h1(self) -> int:
        return self.term_dims[1] - self.ranks[0] - self.ranks[1]

    @property
    def h2(self) -> int:
        return self.term_dims[2] - self.ranks[1] - self.ranks[2]


def _block_offsets(spaces: Sequence[RowSpace]) -> list[int]:
    offsets, position = [], 0
    for s in spaces:
        offsets.append(position)
        position += s.dimension
    return [*offsets, position]


def face_complex_ranks(dd: DegreeData, space: SpaceBuilder) -> FaceComplexRanks:
    cone = dd.cone
    n = cone.rank
    rays = [space((i,)) for i in range(cone.size)]
    pairs = list(dd.pairs)
    pair_spaces = [space(p) for p in pairs]
    cells = three_faces(cone)
    cell_spaces = [space(f.generators) for f in cells]
    ray_offsets = _block_offsets(rays)
    pair_offsets = _block_offsets(pair_spaces)
    pair_index = {p: k for k, p in enumerate(pairs)}

    rank_first = rank([row for s in rays for row in s.rows], n)

    images = []
    for (i, j), s in zip(pairs, pair_spaces):
        for x in s.rows:
            image = [Fraction(0)] * ray_offsets[-1]
            for k, c in enumerate(rays[i].coordinates(x)):
                image[ray_offsets[i] + k] += c
            for k, c in enumerate(rays[j].coordinates(x)):
                image[ray_offsets[j] + k] -= c
            images.append(image)
    rank_second = rank(images, ray_offsets[-1])

    images = []
    for face, s in zip(cells, cell_spaces):
        edges = oriented_edges(cone, face)
        for x in s.rows:
            image = [Fraction(0)] * pair_offsets[-1]
            for key, sign in edges:
                k0 = pair_index[key]
                for k, c in enumerate(pair_spaces[k0].coordinates(x)):
                    image[pair_offsets[k0] + k] += sign * c
            images.append(image)
    rank_third = rank(images, pair_offsets[-1])

    return FaceComplexRanks(
        term_dims=(
            space(()).dimension,
            ray_offsets[-1],
            pair_offsets[-1],
            sum(s.dimension for s in cell_spaces),
        ),
        ranks=(rank_first, rank_second, rank_third),
    )


def t1_t2_via_span_complex(dd: DegreeData) -> SpanComplexResult:
    """H1 and H2 of the dual span complex and of its V-variant."""
    raw = face_complex_ranks(dd, lambda g: span_space(dd, g))
    variant = face_complex_ranks(dd, lambda g: v_space(dd, g))
    result = SpanComplexResult(
        degree=dd.degree,
        t1_dim=raw.h1,
        t2_dim=raw.h2,
        v_t1_dim=variant.h1,
        v_t2_dim=variant.h2,
        v_t1_valid=is_smooth_in_codim2(dd.cone),
        v_t2_valid=is_smooth_in_codim3(dd.cone),
    )
    logger.debug("Span complex", degree=dd.degree, t1=raw.h1, t2=raw.h2)
    return result


@dataclass(frozen=True)
class SpanCochain:
    """Functionals lambda_ij on span(E_i^R & E_j^R), one per 2-face.

    ``representatives[k]`` is a vector y in N_Q with lambda = <y, .>; only its
    restriction to the span is meaningful. ``values[k]`` are the values on the
    row basis of the span.
    """

    pairs: tuple[tuple[int, int], ...]
    representatives: tuple[RatVector, ...]
    values: tuple[tuple[Fraction, ...], ...]

    @property
    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for block in self.values for x in block)

    def is_zero(self) -> bool:
        return not any(self.flat)


def extend_functional(dd: DegreeData, i: int, values: Sequence[Fraction]) -> RatVector:
    """psi_i on L(E_i^R) extended to Q^E, zero on the fixed complement."""
    space = dd.facet_spaces[i]
    f = [Fraction(0)] * dd.basis.size
    for column, x in zip(space.free_columns, values, strict=True):
        f[column] = Fraction(x)
    return tuple(f)


def zigzag_bridge(t2: T2Element, dd: DegreeData) -> SpanCochain:
    """Image of a T2 class in the second cohomology of the dual span complex."""
    if t2.degree != dd.degree:
        raise DimensionMismatchError("element and degree data disagree on R")
    if not is_cocycle(dd, t2.flat):
        raise CocycleViolationError("input tuple is not a cocycle", degree=dd.degree)
    extended = [extend_functional(dd, i, t2.values[i]) for i in range(dd.cone.size)]
    representatives = []
    values = []
    for (i, j), members in zip(dd.pairs, dd.pair_sets):
        difference = [x - y for x, y in zip(extended[i], extended[j])]
        rows = [dd.basis.elements[v] for v in members]
        y = solve_rational(rows, [difference[v] for v in members], dd.cone.rank)
        if y is None:
            raise CocycleViolationError(
                "difference does not descend to the span", pair=(i, j)
            )
        representatives.append(y)
        values.append(tuple(dot(y, row) for row in span_space(dd, (i, j)).rows))
    cochain = SpanCochain(
        pairs=dd.pairs, representatives=tuple(representatives), values=tuple(values)
    )
    if not span_cocycle_holds(dd, cochain):
        raise CocycleViolationError("bridged cochain is not closed", degree=dd.degree)
    return cochain


def span_cocycle_holds(dd: DegreeData, cochain: SpanCochain) -> bool:
    """The 3-face coboundary of the cochain vanishes."""
    index = {p: k for k, p in enumerate(cochain.pairs)}
    for face in three_faces(dd.cone):
        edges = oriented_edges(dd.cone, face)
        for x in span_space(dd, face.generators).rows:
            total = sum(
                (
                    sign * dot(cochain.representatives[index[key]], x)
                    for key, sign in edges
                ),
                Fraction(0),
            )
            if total:
                return False
    return True


def span_coboundaries(dd: DegreeData) -> RowSpace:
    """Image of the sum of span(E_i^R)^* in the 2-face cochains."""
    rays = [span_space(dd, (i,)) for i in range(dd.cone.size)]
    pair_spaces = [span_space(dd, p) for p in dd.pairs]
    offsets = _block_offsets(pair_spaces)
    generators = []
    for i, ray in enumerate(rays):
        for position in range(ray.dimension):
            vector = [Fraction(0)] * offsets[-1]
            for k, (a, b) in enumerate(dd.pairs):
                if i not in (a, b):
                    continue
                sign = 1 if i == a else -1
                for m, x in enumerate(pair_spaces[k].rows):
                    vector[offsets[k] + m] = sign * ray.coordinates(x)[position]
            generators.append(vector)
    return row_space(generators, offsets[-1])


def span_class_is_zero(dd: DegreeData, cochain: SpanCochain) -> bool:
    return span_coboundaries(dd).contains(cochain.flat)


def element_complex_homology(dd: DegreeData, v: int) -> ElementHomology:
    """Homology of the summand of Z^{E^R} sitting over the element with index v."""
    cone = dd.cone
    rays = [i for i in range(cone.size) if v in dd.facet_sets[i]]
    pairs = [p for p, members in zip(dd.pairs, dd.pair_sets) if v in members]
    cells = [f for f in three_faces(cone) if v in dd.face_set(f.generators)]
    apex = 1 if v in dd.union_set else 0

    first = [[1] * len(rays)] if apex else []
    ray_index = {i: k for k, i in enumerate(rays)}
    second = [[0] * len(pairs) for _ in rays]
    for column, (i, j) in enumerate(pairs):
        second[ray_index[i]][column] += 1
        second[ray_index[j]][column] -= 1
    pair_index = {p: k for k, p in enumerate(pairs)}
    third = [[0] * len(cells) for _ in pairs]
    for column, face in enumerate(cells):
        for key, sign in oriented_edges(cone, face):
            third[pair_index[key]][column] += sign

    r1 = rank(first, len(rays)) if first and rays else 0
    r2 = rank(second, len(pairs)) if second and pairs else 0
    r3 = rank(third, len(cells)) if third and cells else 0
    dims = (apex, len(rays), len(pairs), len(cells))
    homology = [dims[0] - r1, dims[1] - r1 - r2, dims[2] - r2 - r3]
    if cone.rank == 3:
        homology.append(dims[3] - r3)
    return ElementHomology(
        element=dd.basis.elements[v], chain_dims=dims, homology=tuple(homology)
    )


def cycle_vector(dd: DegreeData, cochain: SpanCochain) -> tuple[Fraction, ...]:
    """sum of the oriented representatives around the 3-dimensional cone.

    Defined when every 2-face span is all of M, so that each representative
    is unique.
    """
    if dd.cone.rank != 3:
        raise DimensionMismatchError("cycle vectors need a 3-dimensional cone")
    for pair in cochain.pairs:
        if span_space(dd, pair).dimension != 3:
            raise IsoCheckFailedError(
                "2-face span is not all of M; no vector representative", pair=pair
            )
    index = {p: k for k, p in enumerate(cochain.pairs)}
    top = dd.cone.faces_of_dimension(3)[0]
    total = [Fraction(0)] * 3
    for key, sign in oriented_edges(dd.cone, top):
        for k, y in enumerate(cochain.representatives[index[key]]):
            total[k] += sign * y
    return tuple(total)

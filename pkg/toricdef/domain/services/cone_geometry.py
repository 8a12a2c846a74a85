"""Cone geometry: facets through cddlib, faces and smoothness tests."""

from collections.abc import Sequence

import cdd

from toricdef.core.config import settings
from toricdef.core.exceptions import (
    DimensionMismatchError,
    EmptyInputError,
    NotFullDimensionalError,
    NotPointedError,
    RankCapExceededError,
)
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import Cone, DualCone, Face, LatticeVector
from toricdef.domain.services.exact_linalg import (
    clear_denominators,
    primitive,
    rank,
    smith_normal_form,
)

logger = get_logger(__name__)


def pairing(a: Sequence[int], r: Sequence[int]) -> int:
    """Integer pairing between N and M."""
    if len(a) != len(r):
        raise DimensionMismatchError(
            f"cannot pair vectors of lengths {len(a)} and {len(r)}"
        )
    return sum(x * y for x, y in zip(a, r))


def extreme_rays(
    constraints: Sequence[Sequence[int]], dimension: int
) -> list[tuple[int, ...]]:
    """Primitive extreme rays of {x : <c, x> >= 0 for all constraints c}.

    The H- to V-representation conversion runs through cddlib in exact
    (fraction) arithmetic. The cone must be pointed.
    """
    if not constraints:
        raise NotPointedError(f"no constraints: the cone is all of Q^{dimension}")
    matrix = cdd.Matrix([[0, *row] for row in constraints], number_type="fraction")
    matrix.rep_type = cdd.RepType.INEQUALITY
    generators = cdd.Polyhedron(matrix).get_generators()
    if generators.lin_set:
        raise NotPointedError("constraint system does not describe a pointed cone")
    generators.canonicalize()
    # rows are (0, ray) or (1, vertex); the only vertex of a cone is 0
    rays = {
        primitive(clear_denominators(row[1:])[0])
        for row in generators
        if row[0] == 0 and any(row[1:])
    }
    return sorted(rays)


def _contains_line(generators: Sequence[LatticeVector], dimension: int) -> bool:
    """Is there a nonzero nonnegative combination of the generators equal to 0?"""
    count = len(generators)
    constraints: list[tuple[int, ...]] = [
        tuple(int(i == j) for j in range(count)) for i in range(count)
    ]
    for k in range(dimension):
        row = tuple(g[k] for g in generators)
        constraints += [row, tuple(-x for x in row)]
    return bool(extreme_rays(constraints, count))


def _enumerate_faces(
    generators: Sequence[LatticeVector], normals: Sequence[tuple[int, ...]]
) -> tuple[Face, ...]:
    everything = frozenset(range(len(generators)))
    facets = {
        frozenset(i for i, a in enumerate(generators) if pairing(a, u) == 0)
        for u in normals
    }
    found = {everything} | facets
    frontier = set(found)
    while frontier:
        fresh = set()
        for face in frontier:
            for facet in facets:
                meet = face & facet
                if meet not in found:
                    fresh.add(meet)
        found |= fresh
        frontier = fresh
    faces = []
    for face in found:
        members = tuple(sorted(face))
        dimension = rank([generators[i] for i in members], len(generators[0]))
        faces.append(Face(generators=members, dimension=dimension))
    return tuple(sorted(faces, key=lambda f: (f.dimension, f.generators)))


def build_cone(generators: Sequence[Sequence[int]]) -> Cone:
    """Validate generators and assemble a Cone with facets and faces."""
    if not generators:
        raise EmptyInputError("a cone needs at least one generator")
    dimension = len(generators[0])
    if dimension == 0:
        raise EmptyInputError("generators must have positive length")
    for g in generators:
        if len(g) != dimension:
            raise DimensionMismatchError("generators have different lengths")
        if not any(g):
            raise EmptyInputError("zero vector is not a valid generator")
    if dimension > settings.MAX_AMBIENT_RANK:
        raise RankCapExceededError(
            f"ambient rank {dimension} exceeds the cap {settings.MAX_AMBIENT_RANK}"
        )

    unique = list(
        dict.fromkeys(primitive(tuple(int(x) for x in g)) for g in generators)
    )

    if _contains_line(unique, dimension):
        raise NotPointedError("the cone contains a line")
    if rank(unique, dimension) < dimension:
        raise NotFullDimensionalError(
            "the cone is not full-dimensional; restrict to the span of its generators"
        )

    normals = extreme_rays(unique, dimension)

    kept: list[LatticeVector] = []
    dropped: list[LatticeVector] = []
    for a in unique:
        tight = [u for u in normals if pairing(a, u) == 0]
        if rank(tight, dimension) == dimension - 1:
            kept.append(a)
        else:
            dropped.append(a)
    if dropped:
        logger.info("Dropped redundant generators", dropped=dropped)

    return Cone(
        rank=dimension,
        generators=tuple(kept),
        facet_normals=tuple(normals),
        faces=_enumerate_faces(kept, normals),
        dropped_generators=tuple(dropped),
    )


def dual_cone(cone: Cone) -> DualCone:
    """Extreme rays of the dual cone."""
    if rank(cone.generators, cone.rank) < cone.rank:
        raise NotFullDimensionalError("dual of a lower-dimensional cone is not pointed")
    return DualCone(
        rank=cone.rank,
        rays=tuple(sorted(cone.facet_normals)),
        cone_generators=cone.generators,
    )


def two_faces(cone: Cone) -> list[tuple[int, int]]:
    """Generator index pairs spanning 2-dimensional faces (the cone itself if n = 2)."""
    return cone.two_faces


def is_smooth_face(cone: Cone, face: Face) -> bool:
    """Face generators form part of a Z-basis of N."""
    if len(face.generators) != face.dimension:
        return False
    if face.dimension == 0:
        return True
    snf = smith_normal_form([cone.generators[i] for i in face.generators])
    return snf.rank == face.dimension and all(d == 1 for d in snf.invariant_factors)


def is_smooth_in_codim(cone: Cone, k: int) -> bool:
    """Every face of dimension k is smooth; the cone itself counts when dim <= k."""
    if cone.rank <= k:
        return is_smooth_face(cone, cone.faces_of_dimension(cone.rank)[0])
    return all(is_smooth_face(cone, f) for f in cone.faces_of_dimension(k))


def is_smooth_in_codim2(cone: Cone) -> bool:
    return is_smooth_in_codim(cone, 2)


def is_smooth_in_codim3(cone: Cone) -> bool:
    return is_smooth_in_codim(cone, 3)


def face_cycle(cone: Cone, face: Face) -> list[int]:
    """Generators of a 3-dimensional face in the cyclic order of its 2-faces."""
    members = set(face.generators)
    edges = [
        f.generators
        for f in cone.faces_of_dimension(2)
        if set(f.generators) <= members
    ]
    neighbours: dict[int, list[int]] = {i: [] for i in members}
    for i, j in edges:
        neighbours[i].append(j)
        neighbours[j].append(i)
    start = min(members)
    cycle = [start]
    previous, current = None, start
    while True:
        options = sorted(n for n in neighbours[current] if n != previous)
        step = options[0]
        if step == start:
            break
        cycle.append(step)
        previous, current = current, step
        if len(cycle) > len(members):
            raise ValueError("2-faces of a 3-face do not form a cycle")
    return cycle

"""Cup product T1(-R) x T1(-S) -> T2(-R-S)."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from toricdef.core.exceptions import (
    CocycleViolationError,
    CorrectionNotFoundError,
    DimensionMismatchError,
    NoHeightOneElementError,
    NotSmoothCodim2Error,
)
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import Cone, DualVector
from toricdef.domain.entities.elements import T1Element, T2Element
from toricdef.domain.entities.hilbert import HilbertBasis, Relation
from toricdef.domain.services.cone_geometry import is_smooth_in_codim2
from toricdef.domain.services.exact_linalg import (
    IntVector,
    RatVector,
    clear_denominators,
    dot,
    rank,
    solve_integer,
    solve_rational,
)
from toricdef.domain.services.graded_complex import (
    DegreeData,
    canonical_t2,
    degree_data,
    relation_space,
)
from toricdef.domain.services.hilbert_basis import SectionPhi, pi

logger = get_logger(__name__)

AnchorPolicy = Literal["min", "max"]


def choose_anchor(
    basis: HilbertBasis,
    i: int,
    j: int | None = None,
    policy: AnchorPolicy = "min",
) -> int:
    """Index of r(i), or of r(i, j) when a second generator is given.

    r(i) has height 1 on a^i; r(i, j) additionally has height 0 on a^j.
    """
    heights = basis.heights
    candidates = [
        v
        for v in range(basis.size)
        if heights[i][v] == 1 and (j is None or heights[j][v] == 0)
    ]
    if not candidates:
        raise NoHeightOneElementError(
            "no element of E has the required heights", generator=i, other=j
        )
    return candidates[0] if policy == "min" else candidates[-1]


def wall_correction(
    basis: HilbertBasis, walls: Sequence[int], target: Sequence[int]
) -> IntVector:
    """Integer c supported on E & walls-perp with pi(c) = target."""
    members = [
        v for v in range(basis.size) if all(basis.heights[w][v] == 0 for w in walls)
    ]
    matrix = [[row[v] for v in members] for row in basis.pi_matrix]
    c = solve_integer(matrix, target) if members else None
    if c is None:
        rational = solve_rational(matrix, target, len(members)) if members else None
        raise CorrectionNotFoundError(
            "no integer correction on the wall",
            walls=tuple(walls),
            rational_solution=rational is not None,
        )
    full = [0] * basis.size
    for position, v in enumerate(members):
        full[v] = c[position]
    return tuple(full)


@dataclass(frozen=True)
class ElementaryRelations:
    """The relations p(r) relative to one generator or to a 2-face."""

    walls: tuple[int, ...]
    anchors: tuple[int, ...]
    relations: tuple[Relation, ...]

    def __getitem__(self, v: int) -> Relation:
        return self.relations[v]


def elementary_relations(
    basis: HilbertBasis,
    walls: Sequence[int],
    policy: AnchorPolicy = "min",
) -> ElementaryRelations:
    """p(r) = e^r - sum_w <a^w, r> e^{r(w)} + c for every r in E.

    ``walls`` is (i,) for the single-index construction or (i, j) for a
    2-face; the anchors are r(i) or the pair r(i, j), r(j, i).
    """
    walls = tuple(walls)
    if len(walls) == 1:
        anchors = (choose_anchor(basis, walls[0], policy=policy),)
    else:
        i, j = walls
        anchors = (
            choose_anchor(basis, i, j, policy),
            choose_anchor(basis, j, i, policy),
        )
    relations = []
    for v, r in enumerate(basis.elements):
        heights = [basis.heights[w][v] for w in walls]
        if not any(heights):
            relations.append(Relation(q=(0,) * basis.size))
            continue
        q = [0] * basis.size
        q[v] += 1
        m = list(r)
        for h, anchor in zip(heights, anchors):
            q[anchor] -= h
            m = [x - h * y for x, y in zip(m, basis.elements[anchor])]
        if any(m):
            c = wall_correction(basis, walls, [-x for x in m])
            q = [x + y for x, y in zip(q, c)]
        relation = Relation(q=tuple(q))
        if not relation.is_zero():
            _check_elementary(basis, walls, v, relation)
        relations.append(relation)
    return ElementaryRelations(
        walls=walls, anchors=anchors, relations=tuple(relations)
    )


def _check_elementary(
    basis: HilbertBasis, walls: Sequence[int], v: int, relation: Relation
) -> None:
    if any(pi(basis, relation.q)):
        raise CorrectionNotFoundError("p(r) is not a relation", element=v)
    bar = relation.bar(basis)
    for w in walls:
        height = sum(x * y for x, y in zip(basis.cone_generators[w], bar))
        if height != basis.heights[w][v]:
            raise CorrectionNotFoundError(
                "p(r) has the wrong height", element=v, wall=w
            )


def decompose(
    q: Sequence[int],
    relations: ElementaryRelations,
    basis: HilbertBasis,
    allowed: Sequence[int],
    bound: Sequence[int],
) -> list[Relation]:
    """Split q into pieces of small height.

    q = sum_r q_r p(r) + q0, returned as |q_r| copies of sign(q_r) p(r) and
    q0. Every piece is checked to be supported on ``allowed`` and to have
    height below ``bound[k]`` on wall ``relations.walls[k]``.
    """
    q = tuple(int(x) for x in q)
    if any(pi(basis, q)):
        raise DimensionMismatchError("q is not a relation")
    pieces: list[Relation] = []
    rest = list(q)
    for v, coefficient in enumerate(q):
        p = relations[v]
        if not coefficient or p.is_zero():
            continue
        piece = p if coefficient > 0 else -p
        pieces.extend([piece] * abs(coefficient))
        rest = [x - coefficient * y for x, y in zip(rest, p.q)]
    remainder = Relation(q=tuple(rest))
    if not remainder.is_zero():
        pieces.append(remainder)
    check_pieces(pieces, relations, basis, allowed, bound)
    logger.debug("Decomposed relation", pieces=len(pieces), walls=relations.walls)
    return pieces


def check_pieces(
    pieces: Sequence[Relation],
    relations: ElementaryRelations,
    basis: HilbertBasis,
    allowed: Sequence[int],
    bound: Sequence[int],
) -> None:
    permitted = set(allowed)
    for piece in pieces:
        if not set(piece.support) <= permitted:
            raise CorrectionNotFoundError(
                "decomposition piece leaves E_i^{R+S}", support=piece.support
            )
        bar = piece.bar(basis)
        for w, limit in zip(relations.walls, bound):
            height = sum(x * y for x, y in zip(basis.cone_generators[w], bar))
            if height >= limit:
                raise CorrectionNotFoundError(
                    "decomposition piece is too high", wall=w, height=height
                )


def split_piece(
    pieces: Sequence[Relation],
    relations: ElementaryRelations,
    allowed: Sequence[int],
) -> list[Relation]:
    """A second decomposition of the same relation.

    The first piece +-p(r) is replaced by +-(p(r) - p(r')) and +-p(r') for
    the first other nonzero p(r') with r' in ``allowed``. Neither part is
    higher than max(<a, r>, <a, r'>) on any wall. Without such a piece the
    list comes back unchanged.
    """
    elementary = [relations[v] for v in allowed if not relations[v].is_zero()]
    for k, piece in enumerate(pieces):
        for sign in (1, -1):
            base = piece if sign == 1 else -piece
            if base not in elementary:
                continue
            other = next((p for p in elementary if p != base), None)
            if other is None:
                continue
            part = other if sign == 1 else -other
            rest = Relation(q=tuple(x - y for x, y in zip(piece.q, part.q)))
            return [*pieces[:k], rest, part, *pieces[k + 1 :]]
    return list(pieces)


class ExtendedFunctional:
    """A T1 element extended to a functional on Q^E.

    The extension is fixed on a complement of L(E_0^R) in L(E) (zero unless
    ``complement_values`` are given); only its values on relations matter.
    """

    def __init__(
        self,
        element: T1Element,
        dd: DegreeData,
        complement_values: Sequence[int | Fraction] | None = None,
    ):
        self.element = element
        total = relation_space(dd.basis, range(dd.basis.size))
        rows: list[RatVector] = list(dd.union_space.vectors)
        complement: list[RatVector] = []
        for vector in total.vectors:
            if rank(rows + complement + [vector], dd.basis.size) > len(rows) + len(
                complement
            ):
                complement.append(vector)
        extra = (
            [Fraction(0)] * len(complement)
            if complement_values is None
            else [Fraction(x) for x in complement_values]
        )
        if len(extra) != len(complement):
            raise DimensionMismatchError(
                f"expected {len(complement)} complement values, got {len(extra)}"
            )
        solution = solve_rational(
            rows + complement, list(element.values) + extra, dd.basis.size
        )
        assert solution is not None
        self.vector = solution
        self.complement_dimension = len(complement)

    def __call__(self, x: Sequence[int | Fraction]) -> Fraction:
        return Fraction(dot(self.vector, x))


def t_pair(
    phi: ExtendedFunctional,
    psi: ExtendedFunctional,
    R: DualVector,
    S: DualVector,
    section: SectionPhi,
    alpha: Sequence[int],
    beta: Sequence[int],
) -> Fraction:
    """t(alpha, beta) for alpha, beta in N^E with pi(alpha) = pi(beta)."""
    basis = section.basis
    image = pi(basis, alpha)
    if image != pi(basis, beta):
        raise DimensionMismatchError("alpha and beta have different images")
    difference = [a - b for a, b in zip(alpha, beta)]
    lift_r = section(tuple(x - y for x, y in zip(image, R)))
    base_r = section(R)
    lift_s = section(tuple(x - y for x, y in zip(image, S)))
    base_s = section(S)
    first = psi([x + y - b for x, y, b in zip(lift_r, base_r, beta)])
    second = phi([x + y - a for x, y, a in zip(lift_s, base_s, alpha)])
    return phi(difference) * first + psi(difference) * second


def t_value(
    phi: ExtendedFunctional,
    psi: ExtendedFunctional,
    R: DualVector,
    S: DualVector,
    section: SectionPhi,
    q: Relation,
) -> Fraction:
    """t(q) = t(q+, q-)."""
    return t_pair(phi, psi, R, S, section, q.positive, q.negative)


def product_shortcut(
    phi: ExtendedFunctional,
    psi: ExtendedFunctional,
    alpha: Sequence[int],
    beta: Sequence[int],
) -> Fraction:
    """phi(alpha - beta) psi(alpha - beta).

    Agrees with t(alpha, beta) when R = S and alpha dominates Phi(R).
    """
    difference = [a - b for a, b in zip(alpha, beta)]
    return phi(difference) * psi(difference)


class CupProductService:
    """Cup products on one cone with a fixed section and anchor policy.

    With ``split_pieces`` one elementary piece of every decomposition is split
    further (``split_piece``); the resulting class is the same.
    """

    def __init__(
        self,
        cone: Cone,
        basis: HilbertBasis,
        section: SectionPhi | None = None,
        anchor_policy: AnchorPolicy = "min",
        split_pieces: bool = False,
    ):
        if not is_smooth_in_codim2(cone):
            raise NotSmoothCodim2Error(
                "the cup product needs a cone smooth in codimension 2"
            )
        self.cone = cone
        self.basis = basis
        self.section = section or SectionPhi(basis)
        self.anchor_policy = anchor_policy
        self.split_pieces = split_pieces
        self._relations: dict[tuple[int, ...], ElementaryRelations] = {}

    def relations(self, walls: Sequence[int]) -> ElementaryRelations:
        key = tuple(walls)
        if key not in self._relations:
            self._relations[key] = elementary_relations(
                self.basis, key, self.anchor_policy
            )
        return self._relations[key]

    def evaluate(
        self,
        phi: ExtendedFunctional,
        psi: ExtendedFunctional,
        target: DegreeData,
        walls: Sequence[int],
        allowed: Sequence[int],
        q: Sequence[Fraction],
    ) -> Fraction:
        """(phi cup psi) on a relation q, decomposed along ``walls``."""
        scaled, denominator = clear_denominators(q)
        R, S = phi.element.degree, psi.element.degree
        bound = [target.degree_heights[w] for w in walls]
        relations = self.relations(walls)
        pieces = decompose(scaled, relations, self.basis, allowed, bound)
        if self.split_pieces:
            pieces = split_piece(pieces, relations, allowed)
            check_pieces(pieces, relations, self.basis, allowed, bound)
        total = sum(
            (t_value(phi, psi, R, S, self.section, piece) for piece in pieces),
            Fraction(0),
        )
        return total / denominator

    def cup(
        self,
        phi: T1Element,
        psi: T1Element,
        phi_extension: Sequence[int | Fraction] | None = None,
        psi_extension: Sequence[int | Fraction] | None = None,
        check_pairs: bool = False,
    ) -> T2Element:
        """Class of phi cup psi in T2(-(R+S)).

        With ``check_pairs`` every 2-face relation is evaluated a second time
        through the pair decomposition and compared.
        """
        R, S = phi.degree, psi.degree
        degree = tuple(x + y for x, y in zip(R, S))
        extended_phi = ExtendedFunctional(
            phi, degree_data(self.cone, self.basis, R), phi_extension
        )
        extended_psi = ExtendedFunctional(
            psi, degree_data(self.cone, self.basis, S), psi_extension
        )
        target = degree_data(self.cone, self.basis, degree)

        blocks = []
        for i, space in enumerate(target.facet_spaces):
            blocks.append(
                tuple(
                    self.evaluate(
                        extended_phi,
                        extended_psi,
                        target,
                        (i,),
                        target.facet_sets[i],
                        vector,
                    )
                    for vector in space.vectors
                )
            )

        if check_pairs:
            self._check_pairs(extended_phi, extended_psi, target, blocks)

        try:
            result = canonical_t2(target, blocks)
        except CocycleViolationError:
            logger.error("Cup product is not a cocycle", degree=degree)
            raise
        logger.debug("Computed cup product", degree=degree, zero=result.is_zero())
        return result

    def _check_pairs(
        self,
        phi: ExtendedFunctional,
        psi: ExtendedFunctional,
        target: DegreeData,
        blocks: Sequence[Sequence[Fraction]],
    ) -> None:
        for (i, j), members, space in zip(
            target.pairs, target.pair_sets, target.pair_spaces
        ):
            for q in space.vectors:
                via_pair = self.evaluate(phi, psi, target, (i, j), members, q)
                coordinates = target.facet_spaces[i].coordinates(q)
                via_single = sum(
                    (c * x for c, x in zip(coordinates, blocks[i])), Fraction(0)
                )
                if via_pair != via_single:
                    raise CocycleViolationError(
                        "pair decomposition disagrees", pair=(i, j)
                    )

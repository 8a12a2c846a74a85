"""Three-dimensional Gorenstein cones over lattice polygons.

T1(-R*) is described by Minkowski summands, T2(-kR*) by lattice diameters
and the cup product by sum_i s_i t_i d^i. Each closed form is compared with
the relation-complex machinery of ``graded_complex`` and ``cup_product``.
"""

import itertools
from collections.abc import Sequence
from fractions import Fraction
from math import floor, gcd

import sympy

from toricdef.core.exceptions import (
    InputError,
    IsoCheckFailedError,
    NotInSummandSpaceError,
    SchemaError,
    UnsupportedDegreeError,
)
from toricdef.core.logging import get_logger
from toricdef.domain.entities.cone import DualVector
from toricdef.domain.entities.elements import T1Element, T2Element
from toricdef.domain.entities.polygon import (
    GorensteinContext,
    LatticePolygon,
    SummandSpace,
)
from toricdef.domain.entities.report import (
    CrossValidationReport,
    CupComparison,
    DimensionComparison,
    VersalEquation,
    VersalReport,
)
from toricdef.domain.services.cone_geometry import build_cone, dual_cone
from toricdef.domain.services.cup_product import CupProductService
from toricdef.domain.services.exact_linalg import (
    RatVector,
    dot,
    rank,
    rational_kernel_basis,
    solve_integer,
    solve_rational,
)
from toricdef.domain.services.graded_complex import (
    DegreeData,
    canonical_t2,
    degree_data,
    t1_element,
    t1_piece,
    t2_dimension,
    t2_piece,
)
from toricdef.domain.services.hilbert_basis import hilbert_basis
from toricdef.domain.services.span_complex import (
    cycle_vector,
    span_space,
    zigzag_bridge,
)

logger = get_logger(__name__)


def cone_from_polygon(polygon: LatticePolygon) -> GorensteinContext:
    """sigma = Cone(Q x {1}) after moving the first vertex to the origin."""
    moved = polygon.translated()
    cone = build_cone([(x, y, 1) for x, y in moved.vertices])
    basis = hilbert_basis(dual_cone(cone))
    context = GorensteinContext(polygon=moved, cone=cone, basis=basis)
    logger.debug(
        "Built Gorenstein cone",
        vertices=moved.size,
        hilbert_basis=basis.size,
        r_star_in_basis=context.r_star_in_basis,
    )
    return context


def is_r_star_in_E(context: GorensteinContext) -> bool:
    return context.r_star_in_basis


def _edge_rows(polygon: LatticePolygon) -> list[list[int]]:
    return [[d[0] for d in polygon.edges], [d[1] for d in polygon.edges]]


def summand_space(polygon: LatticePolygon) -> SummandSpace:
    """Kernel of the 2 x N edge matrix, with a basis of V modulo (1, ..., 1)."""
    kernel = rational_kernel_basis(_edge_rows(polygon), polygon.size)
    ones = tuple(Fraction(1) for _ in range(polygon.size))
    chosen: list[RatVector] = [ones]
    for vector in kernel.vectors:
        if rank([*chosen, vector], polygon.size) > len(chosen):
            chosen.append(vector)
    return SummandSpace(basis=kernel.vectors, quotient_basis=tuple(chosen[1:]))


def _check_summand(polygon: LatticePolygon, t: Sequence[int | Fraction]) -> None:
    if len(t) != polygon.size:
        raise NotInSummandSpaceError(
            f"expected {polygon.size} entries, got {len(t)}"
        )
    if any(dot(row, t) for row in _edge_rows(polygon)):
        raise NotInSummandSpaceError("sum_i t_i d^i is not zero")


def psi_pairing(
    context: GorensteinContext, t: Sequence[int | Fraction], e: DualVector
) -> Fraction:
    """Psi(t, [c; eta]) = sum_{v < i} t_v <d^v, -c>.

    i is the first vertex maximizing <., -c>; there the maximum equals eta.
    """
    polygon = context.polygon
    _check_summand(polygon, t)
    c, eta = (e[0], e[1]), e[2]
    if c == (0, 0):
        return Fraction(0)
    values = [-(a[0] * c[0] + a[1] * c[1]) for a in polygon.vertices]
    if eta not in values:
        raise SchemaError(f"{list(e)} is not an element of the Hilbert basis")
    i = values.index(eta)
    return sum(
        (
            Fraction(t[v]) * -(d[0] * c[0] + d[1] * c[1])
            for v, d in enumerate(polygon.edges[:i])
        ),
        Fraction(0),
    )


def t1_iso(context: GorensteinContext, t: Sequence[int | Fraction]) -> T1Element:
    """The T1(-R*) element q -> sum_e Psi(t, e) q_e."""
    f = [psi_pairing(context, t, e) for e in context.basis.elements]
    dd = degree_data(context.cone, context.basis, context.r_star)
    values = [dot(f, vector) for vector in dd.union_space.vectors]
    try:
        return t1_element(dd, values)
    except SchemaError as exc:
        raise IsoCheckFailedError(
            "Psi does not vanish on the sum of the L(E_i^R*)"
        ) from exc


def check_t1_iso(context: GorensteinContext, space: SummandSpace) -> int:
    """Verify that Psi induces an isomorphism V / Q(1, ..., 1) -> T1(-R*)."""
    if not t1_iso(context, space.ones).is_zero():
        raise IsoCheckFailedError("Psi(1, .) is not the zero class")
    piece = t1_piece(degree_data(context.cone, context.basis, context.r_star))
    images = [t1_iso(context, t).values for t in space.quotient_basis]
    expected = context.polygon.size - 3
    if piece.dimension != expected or len(images) != expected:
        raise IsoCheckFailedError(
            "dimension mismatch", t1=piece.dimension, summands=len(images)
        )
    width = len(piece.basis[0].values) if piece.basis else 0
    if images and rank(images, width) != expected:
        raise IsoCheckFailedError("Psi is not injective modulo (1, ..., 1)")
    return expected


def diameter(polygon: LatticePolygon, c: Sequence[int]) -> int:
    """max <a, c> - min <a, c> over the vertices."""
    if not any(c):
        raise InputError("direction must be nonzero")
    values = [a[0] * c[0] + a[1] * c[1] for a in polygon.vertices]
    return max(values) - min(values)


def _direction_candidates(
    polygon: LatticePolygon,
) -> list[tuple[int, tuple[int, int]]]:
    """(d(c), c) for every primitive c, up to sign, with d(c) <= max(d(e1), d(e2))."""
    ceiling = max(diameter(polygon, (1, 0)), diameter(polygon, (0, 1)))
    u = polygon.edges[0]
    w = polygon.edges[-1]
    det = abs(u[0] * w[1] - u[1] * w[0])
    # |c|_max <= d(c) * ||A^-1||_max for A with rows u, w
    norm = Fraction(max(abs(w[1]) + abs(u[1]), abs(w[0]) + abs(u[0])), det)
    reach = floor(ceiling * norm)
    candidates = []
    for x in range(0, reach + 1):
        for y in range(-reach, reach + 1):
            if (x, y) == (0, 0) or gcd(x, y) != 1 or (x == 0 and y < 0):
                continue
            d = diameter(polygon, (x, y))
            if d <= ceiling:
                candidates.append((d, (x, y)))
    return sorted(candidates)


def k_thresholds(polygon: LatticePolygon) -> tuple[int, int]:
    """k1 = min d(c); k2 = min over independent c, c' of max(d(c), d(c'))."""
    candidates = _direction_candidates(polygon)
    k1 = candidates[0][0]
    first = candidates[0][1]
    k2 = next(
        d for d, c in candidates if first[0] * c[1] - first[1] * c[0] != 0
    )
    return k1, k2


def t2_dims_closed_form(polygon: LatticePolygon, k: int) -> int:
    if k < 2:
        raise UnsupportedDegreeError("the closed form covers k >= 2 only", k=k)
    k1, k2 = k_thresholds(polygon)
    if k <= k1:
        return 2
    if k <= k2:
        return 1
    return 0


def t2_embedding(context: GorensteinContext, k: int) -> tuple[RatVector, ...]:
    """Basis of the annihilator of span(intersection of the E_i^{kR*}) in N_Q."""
    if k < 2:
        raise UnsupportedDegreeError("the embedding covers k >= 2 only", k=k)
    dd = degree_data(context.cone, context.basis, scaled_r_star(context, k))
    common = span_space(dd, tuple(range(context.cone.size)))
    return rational_kernel_basis(common.rows, 3).vectors


def scaled_r_star(context: GorensteinContext, k: int) -> DualVector:
    return tuple(k * x for x in context.r_star)


def cup_closed_form(
    polygon: LatticePolygon,
    s: Sequence[int | Fraction],
    t: Sequence[int | Fraction],
) -> tuple[Fraction, ...]:
    """(sum_i s_i t_i d^i, 0) in N_Q."""
    _check_summand(polygon, s)
    _check_summand(polygon, t)
    x, y = (
        sum(
            (Fraction(a) * b * d[axis] for a, b, d in zip(s, t, polygon.edges)),
            Fraction(0),
        )
        for axis in (0, 1)
    )
    return (x, y, Fraction(0))


def bridge_to_vector(
    context: GorensteinContext, t2: T2Element
) -> tuple[Fraction, ...]:
    """Vector n in N_Q representing a T2(-kR*) class.

    Edge (i, i+1) enters with +1 and the closing edge (N, 1) with -1, the
    orientation of the boundary cycle.
    """
    dd = degree_data(context.cone, context.basis, t2.degree)
    return cycle_vector(dd, zigzag_bridge(t2, dd))


def pair_with_degree(
    context: GorensteinContext, t2: T2Element, r: Sequence[int]
) -> Fraction:
    """sum_i psi_i(q^i(r)) with q^i(r) = x^(i,i+1) - x^(i-1,i).

    x^e is an integer decomposition of r over E_i^R & E_j^R for the 2-face e.
    The value equals <bridge_to_vector(t2), r>.
    """
    dd = degree_data(context.cone, context.basis, t2.degree)
    decompositions = {}
    for pair, members in zip(dd.pairs, dd.pair_sets):
        matrix = [[dd.basis.elements[v][k] for v in members] for k in range(3)]
        x = solve_integer(matrix, list(r)) if members else None
        if x is None:
            raise UnsupportedDegreeError(
                "r has no integer decomposition on a 2-face set", pair=pair
            )
        full = [0] * dd.basis.size
        for position, v in enumerate(members):
            full[v] = x[position]
        decompositions[pair] = full
    count = context.cone.size
    total = Fraction(0)
    for i in range(count):
        ahead = decompositions[_edge_key(i, (i + 1) % count)]
        behind = decompositions[_edge_key((i - 1) % count, i)]
        q = [a - b for a, b in zip(ahead, behind)]
        coordinates = dd.facet_spaces[i].coordinates(q)
        total += sum((c * x for c, x in zip(coordinates, t2.values[i])), Fraction(0))
    return total


def _edge_key(i: int, j: int) -> tuple[int, int]:
    return (min(i, j), max(i, j))


def _substitute(
    form: sympy.Expr, symbols: Sequence[sympy.Symbol], values: Sequence[Fraction]
) -> Fraction:
    value = form.subs(
        {x: sympy.Rational(v.numerator, v.denominator) for x, v in zip(symbols, values)}
    )
    return Fraction(int(value.p), int(value.q))


def versal_equations(polygon: LatticePolygon, kmax: int) -> VersalReport:
    """sum_i t_i^k d^i = 0 for k = 1..kmax, rendered with sympy.

    Also checks that k = 1 cuts out V and that the polarized k = 2 part is
    the closed-form cup product on a basis of V modulo (1, ..., 1).
    """
    symbols = sympy.symbols(f"t1:{polygon.size + 1}")

    def forms(k: int) -> list[sympy.Expr]:
        return [
            sympy.expand(sum(t**k * d[axis] for t, d in zip(symbols, polygon.edges)))
            for axis in (0, 1)
        ]

    equations = tuple(
        VersalEquation(k=k, equations=tuple(str(f) for f in forms(k)))
        for k in range(1, kmax + 1)
    )

    space = summand_space(polygon)
    matrix, _ = sympy.linear_eq_to_matrix(forms(1), symbols)
    linear_matches = matrix.rank() == 2 and all(
        not any(dot([int(x) for x in matrix.row(axis)], vector) for axis in (0, 1))
        for vector in space.basis
    )

    quadratic = forms(2)
    quadratic_matches = True
    for s, t in itertools.combinations_with_replacement(space.quotient_basis, 2):
        both = [a + b for a, b in zip(s, t)]
        polarized = [
            (
                _substitute(form, symbols, both)
                - _substitute(form, symbols, s)
                - _substitute(form, symbols, t)
            )
            / 2
            for form in quadratic
        ]
        if polarized != list(cup_closed_form(polygon, s, t)[:2]):
            quadratic_matches = False
    return VersalReport(
        equations=equations,
        linear_part_matches=linear_matches,
        quadratic_part_matches=quadratic_matches,
    )


class GorensteinService:
    """Closed forms for one polygon and their comparison with the machinery."""

    def __init__(self, polygon: LatticePolygon):
        self.polygon = polygon
        self.context = cone_from_polygon(polygon)
        self.space = summand_space(self.context.polygon)
        self._cup: CupProductService | None = None
        self._bridged_bases: dict[
            DualVector, tuple[DegreeData, tuple[T2Element, ...], list[RatVector]]
        ] = {}

    def degree_data(self, k: int) -> DegreeData:
        return degree_data(
            self.context.cone, self.context.basis, scaled_r_star(self.context, k)
        )

    def general_cup_class(
        self, s: Sequence[Fraction], t: Sequence[Fraction]
    ) -> T2Element:
        """Cup of Psi(s) and Psi(t) in T2(-2R*), canonical form."""
        if self._cup is None:
            self._cup = CupProductService(self.context.cone, self.context.basis)
        return self._cup.cup(t1_iso(self.context, s), t1_iso(self.context, t))

    def class_of_vector(
        self, degree: Sequence[int], n: Sequence[Fraction]
    ) -> T2Element | None:
        """Canonical T2(-R) representative whose bridged vector is n.

        None when n is not bridged from any class, or when the bridge is not
        injective in this degree.
        """
        key = tuple(degree)
        if key not in self._bridged_bases:
            dd = degree_data(self.context.cone, self.context.basis, key)
            basis = t2_piece(dd).basis
            vectors = [bridge_to_vector(self.context, b) for b in basis]
            self._bridged_bases[key] = (dd, basis, vectors)
        dd, basis, vectors = self._bridged_bases[key]
        if rank(vectors, 3) < len(basis):
            logger.warning("Bridge is not injective", degree=key)
            return None
        rows = [[v[axis] for v in vectors] for axis in range(3)]
        coefficients = solve_rational(rows, list(n), len(basis))
        if coefficients is None:
            return None
        values = [
            [
                sum(
                    (c * b.values[i][m] for c, b in zip(coefficients, basis)),
                    Fraction(0),
                )
                for m in range(space.dimension)
            ]
            for i, space in enumerate(dd.facet_spaces)
        ]
        return canonical_t2(dd, values)

    def cup_table(self, general: bool = True) -> tuple[CupComparison, ...]:
        """Closed-form cups on a basis of V modulo (1, ..., 1).

        With ``general`` each entry also carries the general cup, both as a
        class and bridged to N_Q, and the class the closed form bridges from.
        """
        basis = self.space.quotient_basis
        rows = []
        for a, b in itertools.combinations_with_replacement(range(len(basis)), 2):
            s, t = basis[a], basis[b]
            closed = cup_closed_form(self.context.polygon, s, t)
            if not general:
                rows.append(CupComparison(s_index=a, t_index=b, closed_form=closed))
                continue
            product = self.general_cup_class(s, t)
            rows.append(
                CupComparison(
                    s_index=a,
                    t_index=b,
                    closed_form=closed,
                    general=bridge_to_vector(self.context, product),
                    general_class=product,
                    closed_class=self.class_of_vector(product.degree, closed),
                )
            )
        return tuple(rows)

    def cross_validate(self, kmax: int) -> CrossValidationReport:
        dimensions = tuple(
            DimensionComparison(
                k=k,
                closed_form=t2_dims_closed_form(self.context.polygon, k),
                machinery=t2_dimension(self.degree_data(k)),
            )
            for k in range(2, kmax + 1)
        )
        report = CrossValidationReport(dimensions=dimensions, cups=self.cup_table())
        logger.info(
            "Cross-validated polygon",
            vertices=self.polygon.size,
            all_match=report.all_match,
        )
        return report

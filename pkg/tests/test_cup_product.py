"""Cup product tests."""

import pytest

from toricdef.core.exceptions import (
    CorrectionNotFoundError,
    DimensionMismatchError,
    NotSmoothCodim2Error,
)
from toricdef.domain.services.cup_product import (
    CupProductService,
    ExtendedFunctional,
    check_pieces,
    choose_anchor,
    decompose,
    elementary_relations,
    product_shortcut,
    split_piece,
    t_pair,
    wall_correction,
)
from toricdef.domain.services.exact_linalg import clear_denominators
from toricdef.domain.services.graded_complex import (
    degree_data,
    relation_space,
    t1_piece,
)
from toricdef.domain.services.hilbert_basis import SectionPhi, pi

R_STAR = (0, 0, 1)


@pytest.fixture(scope="module")
def hexagon_t1(hexagon_cone, hexagon_basis):
    dd = degree_data(hexagon_cone, hexagon_basis, R_STAR)
    return dd, t1_piece(dd)


class TestElementaryRelations:
    """Anchors, wall corrections and elementary relations test cases."""

    def test_anchor_policies(self, square_basis):
        """Test the first and last elements of height one."""
        assert choose_anchor(square_basis, 0) == 0
        assert choose_anchor(square_basis, 0, policy="max") == 1

    def test_pair_anchor(self, square_basis):
        """Test r(i, j) has height 1 on a^i and 0 on a^j."""
        v = choose_anchor(square_basis, 0, 1)
        assert square_basis.heights[0][v] == 1
        assert square_basis.heights[1][v] == 0

    def test_wall_correction(self, square_basis):
        """Test an integer correction on the wall a^1-perp."""
        assert wall_correction(square_basis, (0,), (1, 2, 0)) == (0, 0, 2, 1)

    def test_wall_correction_missing(self, square_basis):
        """Test a target off the wall has no correction."""
        with pytest.raises(CorrectionNotFoundError):
            wall_correction(square_basis, (0,), (0, 0, 1))

    def test_relations(self, square_basis):
        """Test p(r) is a relation, zero for elements on the wall."""
        relations = elementary_relations(square_basis, (0,))
        for relation in relations.relations:
            assert pi(square_basis, relation.q) == (0, 0, 0)
        assert relations[2].is_zero()
        assert relations[3].is_zero()
        assert relations[1].q == (-1, 1, 1, -1)

    def test_decompose_rejects_non_relation(self, square_basis):
        """Test only relations can be decomposed."""
        relations = elementary_relations(square_basis, (0,))
        with pytest.raises(DimensionMismatchError):
            decompose((1, 0, 0, 0), relations, square_basis, range(4), [5])


class TestTPair:
    """t(alpha, beta) test cases."""

    def _functionals(self, hexagon_t1):
        dd, piece = hexagon_t1
        return (
            ExtendedFunctional(piece.basis[0], dd),
            ExtendedFunctional(piece.basis[1], dd),
        )

    def _triple(self, basis):
        m = (1, 0, 3)
        a = SectionPhi(basis)(m)
        b = SectionPhi(basis, order=list(reversed(range(basis.size))))(m)
        q = clear_denominators(relation_space(basis, range(basis.size)).vectors[0])[0]
        c = tuple(x + y for x, y in zip(a, q))
        return a, b, c

    def test_extension_restricts(self, hexagon_t1):
        """Test the extended functional agrees with the element on L(E_0^R)."""
        dd, piece = hexagon_t1
        phi = ExtendedFunctional(piece.basis[0], dd)
        for vector, value in zip(dd.union_space.vectors, piece.basis[0].values):
            assert phi(vector) == value

    def test_extension_length(self, hexagon_t1):
        """Test the number of complement values is checked."""
        dd, piece = hexagon_t1
        width = ExtendedFunctional(piece.basis[0], dd).complement_dimension
        with pytest.raises(DimensionMismatchError):
            ExtendedFunctional(piece.basis[0], dd, [0] * (width + 1))

    def test_diagonal_vanishes(self, hexagon_t1, hexagon_basis):
        """Test t(a, a) = 0."""
        phi, psi = self._functionals(hexagon_t1)
        a, _, _ = self._triple(hexagon_basis)
        section = SectionPhi(hexagon_basis)
        assert t_pair(phi, psi, R_STAR, R_STAR, section, a, a) == 0

    def test_cocycle_identity(self, hexagon_t1, hexagon_basis):
        """Test t(a, b) + t(b, c) = t(a, c)."""
        phi, psi = self._functionals(hexagon_t1)
        a, b, c = self._triple(hexagon_basis)
        section = SectionPhi(hexagon_basis)

        def t(x, y):
            return t_pair(phi, psi, R_STAR, R_STAR, section, x, y)

        assert t(a, b) + t(b, c) == t(a, c)
        assert t(a, b) == -t(b, a)

    def test_images_must_agree(self, hexagon_t1, hexagon_basis):
        """Test alpha and beta need the same image."""
        phi, psi = self._functionals(hexagon_t1)
        zero = (0,) * hexagon_basis.size
        one = tuple(int(v == 0) for v in range(hexagon_basis.size))
        with pytest.raises(DimensionMismatchError):
            t_pair(phi, psi, R_STAR, R_STAR, SectionPhi(hexagon_basis), one, zero)

    def test_product_shortcut(self, hexagon_t1, hexagon_basis):
        """Test t(Phi(R) + e^v, beta) = phi(alpha - beta) psi(alpha - beta)."""
        phi, psi = self._functionals(hexagon_t1)
        section = SectionPhi(hexagon_basis)
        order = list(reversed(range(hexagon_basis.size)))
        other = SectionPhi(hexagon_basis, order=order)
        anchor = section(R_STAR)
        for v in range(hexagon_basis.size):
            alpha = [x + (1 if k == v else 0) for k, x in enumerate(anchor)]
            beta = other(pi(hexagon_basis, alpha))
            assert t_pair(
                phi, psi, R_STAR, R_STAR, section, alpha, beta
            ) == product_shortcut(phi, psi, alpha, beta)


class TestDecompositionInvariance:
    """(phi cup psi)_i does not depend on how a relation is decomposed."""

    DEGREE = (0, 0, 2)

    def _decomposition(self, service, target, i, vector):
        q, _ = clear_denominators(vector)
        relations = service.relations((i,))
        allowed = target.facet_sets[i]
        bound = [target.degree_heights[i]]
        return q, decompose(q, relations, service.basis, allowed, bound)

    def test_split_piece(self, hexagon_cone, hexagon_basis):
        """Test one p(r) is split into two pieces with the same total."""
        service = CupProductService(hexagon_cone, hexagon_basis)
        target = degree_data(hexagon_cone, hexagon_basis, self.DEGREE)
        relations = service.relations((0,))
        allowed = target.facet_sets[0]
        for vector in target.facet_spaces[0].vectors:
            q, pieces = self._decomposition(service, target, 0, vector)
            split = split_piece(pieces, relations, allowed)
            assert len(split) == len(pieces) + 1
            total = [sum(column) for column in zip(*(p.q for p in split))]
            assert tuple(total) == q
            check_pieces(
                split,
                relations,
                hexagon_basis,
                allowed,
                [target.degree_heights[0]],
            )

    def test_split_without_elementary_piece(self, square_basis):
        """Test a lone elementary piece has no partner and stays as it is."""
        relations = elementary_relations(square_basis, (0,))
        remainder = [relations[1]]
        assert split_piece(remainder, relations, [1]) == remainder

    def test_values_agree_on_every_wall(
        self, hexagon_cone, hexagon_basis, hexagon_t1
    ):
        """Test the split decomposition gives the same value on each relation."""
        dd, piece = hexagon_t1
        phi = ExtendedFunctional(piece.basis[0], dd)
        psi = ExtendedFunctional(piece.basis[1], dd)
        default = CupProductService(hexagon_cone, hexagon_basis)
        split = CupProductService(hexagon_cone, hexagon_basis, split_pieces=True)
        target = degree_data(hexagon_cone, hexagon_basis, self.DEGREE)
        for i, space in enumerate(target.facet_spaces):
            allowed = target.facet_sets[i]
            for vector in space.vectors:
                assert split.evaluate(
                    phi, psi, target, (i,), allowed, vector
                ) == default.evaluate(phi, psi, target, (i,), allowed, vector)

    @pytest.mark.slow
    def test_class_agrees(self, hexagon_cone, hexagon_basis, hexagon_t1):
        """Test the cup class is unchanged by the split decomposition."""
        _, piece = hexagon_t1
        phi, psi = piece.basis[0], piece.basis[2]
        reference = CupProductService(hexagon_cone, hexagon_basis).cup(phi, psi)
        split = CupProductService(
            hexagon_cone, hexagon_basis, split_pieces=True
        ).cup(phi, psi)
        assert split == reference


class TestCupProductService:
    """Cup product service test cases."""

    def test_needs_smooth_codim2(self, a3_cone, a3_basis):
        """Test the cup product refuses xy = z^4."""
        with pytest.raises(NotSmoothCodim2Error):
            CupProductService(a3_cone, a3_basis)

    def test_quadric_square_vanishes(self, square_cone, square_basis):
        """Test the only deformation of xy = zw is unobstructed."""
        piece = t1_piece(degree_data(square_cone, square_basis, R_STAR))
        phi = piece.basis[0]
        product = CupProductService(square_cone, square_basis).cup(phi, phi)
        assert product.degree == (0, 0, 2)
        assert product.is_zero()

    @pytest.mark.slow
    def test_hexagon_anchor_invariance(self, hexagon_cone, hexagon_basis, hexagon_t1):
        """Test the class ignores the anchor policy."""
        _, piece = hexagon_t1
        phi, psi = piece.basis[0], piece.basis[1]
        first = CupProductService(hexagon_cone, hexagon_basis).cup(
            phi, psi, check_pairs=True
        )
        second = CupProductService(
            hexagon_cone, hexagon_basis, anchor_policy="max"
        ).cup(phi, psi)
        assert first.degree == (0, 0, 2)
        assert first == second

    @pytest.mark.slow
    def test_hexagon_section_invariance(self, hexagon_cone, hexagon_basis, hexagon_t1):
        """Test the class ignores the section Phi."""
        _, piece = hexagon_t1
        phi, psi = piece.basis[1], piece.basis[2]
        reference = CupProductService(hexagon_cone, hexagon_basis).cup(phi, psi)
        shuffled = CupProductService(
            hexagon_cone,
            hexagon_basis,
            section=SectionPhi(
                hexagon_basis, order=list(reversed(range(hexagon_basis.size)))
            ),
        ).cup(phi, psi)
        assert shuffled == reference

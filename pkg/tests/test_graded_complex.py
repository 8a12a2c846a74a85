"""Graded T1 and T2 tests."""

from fractions import Fraction

import pytest

from toricdef.core.exceptions import (
    CocycleViolationError,
    DimensionMismatchError,
    SNotInDualConeError,
)
from toricdef.domain.entities.elements import T2Label
from toricdef.domain.services.graded_complex import (
    canonical_t2,
    degree_data,
    degree_scan,
    directedness_holds,
    is_cocycle,
    multiply_by_character,
    relation_space,
    scan_box,
    t1_dimension,
    t1_element,
    t1_piece,
    t2_dimension,
    t2_label,
    t2_piece,
    union_criterion_holds,
)

R_STAR = (0, 0, 1)


class TestRelationSpace:
    """Relation space test cases."""

    def test_quadric_relation(self, square_basis):
        """Test xy = zw gives one relation."""
        space = relation_space(square_basis, range(4))
        assert space.vectors == ((1, -1, -1, 1),)

    def test_empty_subset(self, square_basis):
        """Test L of the empty set is zero."""
        assert relation_space(square_basis, ()).dimension == 0


class TestT1:
    """T1 test cases."""

    def test_quadric_cone(self, square_cone, square_basis):
        """Test the quadric cone has one deformation in degree -R*."""
        assert t1_dimension(degree_data(square_cone, square_basis, R_STAR)) == 1

    def test_octant_rigid(self, octant, octant_basis):
        """Test affine space has no deformations."""
        for degree in [(1, 1, 1), (1, 0, 0), (2, -1, 0)]:
            assert t1_dimension(degree_data(octant, octant_basis, degree)) == 0

    def test_hexagon(self, hexagon_cone, hexagon_basis):
        """Test the hexagon has N - 3 = 3 deformations in degree -R*."""
        piece = t1_piece(degree_data(hexagon_cone, hexagon_basis, R_STAR))
        assert piece.dimension == 3
        assert len(piece.basis) == 3

    def test_zero_degree(self, hexagon_cone, hexagon_basis):
        """Test degree 0 has empty index sets."""
        dd = degree_data(hexagon_cone, hexagon_basis, (0, 0, 0))
        assert dd.union_set == ()
        assert t1_dimension(dd) == 0

    def test_degree_wrong_rank(self, square_cone, square_basis):
        """Test a degree of the wrong length is rejected."""
        with pytest.raises(DimensionMismatchError):
            degree_data(square_cone, square_basis, (0, 1))

    def test_t1_element_wrong_length(self, square_cone, square_basis):
        """Test user values must match the basis of L(E_0^R)."""
        dd = degree_data(square_cone, square_basis, R_STAR)
        with pytest.raises(DimensionMismatchError):
            t1_element(dd, [1] * (dd.union_space.dimension + 1))

    def test_union_criterion(self, hexagon_cone, hexagon_basis):
        """Test e in E_0^R exactly when e - R is not in the dual cone."""
        for k in (1, 2, 3):
            dd = degree_data(hexagon_cone, hexagon_basis, (0, 0, k))
            assert union_criterion_holds(dd)

    @pytest.mark.parametrize("fixture", ["square", "hexagon"])
    def test_directedness(self, request, fixture):
        """Test K_i^R is directed in degree R*."""
        cone = request.getfixturevalue(f"{fixture}_cone")
        basis = request.getfixturevalue(f"{fixture}_basis")
        dd = degree_data(cone, basis, R_STAR)
        assert all(directedness_holds(dd, i) for i in range(cone.size))


class TestT2:
    """T2 test cases."""

    def test_hexagon_dimensions(self, hexagon_cone, hexagon_basis):
        """Test dim T2(-2R*) = 2 and dim T2(-kR*) = 0 for k >= 3."""
        assert t2_dimension(degree_data(hexagon_cone, hexagon_basis, (0, 0, 2))) == 2
        for k in (3, 4):
            dd = degree_data(hexagon_cone, hexagon_basis, (0, 0, k))
            assert t2_dimension(dd) == 0

    def test_piece(self, hexagon_cone, hexagon_basis):
        """Test the canonical basis of T2(-2R*)."""
        piece = t2_piece(degree_data(hexagon_cone, hexagon_basis, (0, 0, 2)))
        assert piece.dimension == 2
        assert piece.is_exact
        assert piece.label is T2Label.EXACT
        assert not any(b.is_zero() for b in piece.basis)

    def test_labels(self, square_cone, a3_cone):
        """Test the applicability labels."""
        assert t2_label(square_cone) is T2Label.EXACT
        assert t2_label(a3_cone) is T2Label.NOT_APPLICABLE

    def test_basis_is_canonical(self, hexagon_cone, hexagon_basis):
        """Test reducing a basis class leaves it unchanged."""
        dd = degree_data(hexagon_cone, hexagon_basis, (0, 0, 2))
        element = t2_piece(dd).basis[0]
        assert canonical_t2(dd, element.values) == element

    def test_coboundary_is_forgotten(self, hexagon_cone, hexagon_basis):
        """Test adding the restriction of a global functional keeps the class."""
        dd = degree_data(hexagon_cone, hexagon_basis, (0, 0, 2))
        element = t2_piece(dd).basis[0]
        shift = dd.restriction_space.rows[0]
        moved = [x + y for x, y in zip(element.flat, shift)]
        assert is_cocycle(dd, moved)
        assert canonical_t2(dd, dd.split(moved)) == element

    def test_cocycle_violation(self, hexagon_cone, hexagon_basis):
        """Test a tuple disagreeing on a 2-face is rejected."""
        dd = degree_data(hexagon_cone, hexagon_basis, (0, 0, 2))
        row = next(r for r in dd.cocycle_rows if any(r))
        with pytest.raises(CocycleViolationError):
            canonical_t2(dd, dd.split(row))

    def test_block_shape(self, hexagon_cone, hexagon_basis):
        """Test blocks must match the bases of the L(E_i^R)."""
        dd = degree_data(hexagon_cone, hexagon_basis, (0, 0, 2))
        with pytest.raises(DimensionMismatchError):
            canonical_t2(dd, [[Fraction(0)]])


class TestCharacterAction:
    """Multiplication by characters test cases."""

    def test_t1_to_degree_zero(self, hexagon_cone, hexagon_basis):
        """Test x^R* sends T1(-R*) to T1(0) = 0."""
        piece = t1_piece(degree_data(hexagon_cone, hexagon_basis, R_STAR))
        image = multiply_by_character(
            piece.basis[0], R_STAR, hexagon_cone, hexagon_basis
        )
        assert image.degree == (0, 0, 0)
        assert image.is_zero()

    def test_zero_shift_is_identity(self, hexagon_cone, hexagon_basis):
        """Test x^0 acts trivially on T2."""
        element = t2_piece(
            degree_data(hexagon_cone, hexagon_basis, (0, 0, 2))
        ).basis[1]
        image = multiply_by_character(
            element, (0, 0, 0), hexagon_cone, hexagon_basis
        )
        assert image == element

    def test_shift_outside_dual_cone(self, hexagon_cone, hexagon_basis):
        """Test s must lie in the dual cone."""
        piece = t1_piece(degree_data(hexagon_cone, hexagon_basis, R_STAR))
        with pytest.raises(SNotInDualConeError):
            multiply_by_character(
                piece.basis[0], (0, 0, -1), hexagon_cone, hexagon_basis
            )


class TestScan:
    """Degree scan test cases."""

    def test_scan_box(self, square_cone, square_basis):
        """Test the heuristic box bounds."""
        lower, upper = scan_box(square_cone, square_basis, 3)
        assert lower == [-3, -3, -3, -3]
        assert upper == [2, 2, 2, 2]

    def test_a3_scan(self, a3_cone, a3_basis):
        """Test xy = z^4: three deformations, T2 not applicable."""
        result = degree_scan(a3_cone, a3_basis)
        assert result.total_t1 == 3
        assert result.total_t2 == 0
        assert result.t2_label is T2Label.NOT_APPLICABLE
        assert result.heuristic_box

    @pytest.mark.slow
    def test_quadric_scan(self, square_cone, square_basis):
        """Test xy = zw: one deformation, no obstructions."""
        result = degree_scan(square_cone, square_basis)
        assert result.total_t1 == 1
        assert result.total_t2 == 0
        assert [e.degree for e in result.entries] == [R_STAR]

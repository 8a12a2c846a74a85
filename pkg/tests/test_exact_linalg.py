"""Exact linear algebra tests."""

from fractions import Fraction

import pytest
from sympy import Matrix

from toricdef.core.exceptions import NotSurjectiveError
from toricdef.domain.services.exact_linalg import (
    clear_denominators,
    dot,
    identity,
    integer_section,
    is_primitive,
    mat_vec,
    primitive,
    rank,
    rational_kernel_basis,
    row_space,
    smith_normal_form,
    solve_integer,
    solve_rational,
    sympy_invariant_factors,
)


def _product(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


class TestSmithNormalForm:
    """Smith normal form test cases."""

    def test_diagonal_two_three(self):
        """Test diag(2, 3) has invariant factors 1 and 6."""
        snf = smith_normal_form([[2, 0], [0, 3]])
        assert snf.invariant_factors == (1, 6)
        assert snf.rank == 2

    def test_identity(self):
        """Test the identity is its own Smith form."""
        snf = smith_normal_form(identity(3))
        assert snf.S == identity(3)

    def test_zero_matrix(self):
        """Test [[0]] stays [[0]] with rank 0."""
        snf = smith_normal_form([[0]])
        assert snf.S == ((0,),)
        assert snf.invariant_factors == ()
        assert snf.rank == 0

    def test_transforms(self):
        """Test U * A * V = S for a non-square matrix."""
        matrix = ((2, 4, 4), (-6, 6, 12), (10, -4, -16), (1, 0, 3))
        snf = smith_normal_form(matrix)
        assert _product(_product(snf.U, matrix), snf.V) == snf.S

    def test_divisibility_chain(self):
        """Test each invariant factor divides the next."""
        snf = smith_normal_form([[6, 4], [4, 6], [2, 2]])
        factors = snf.invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))

    @pytest.mark.parametrize(
        "matrix",
        [
            ((-2, 0), (0, 3)),
            ((1, 2), (2, 4)),
            ((0, 0, 5), (0, -7, 0)),
            ((4, -6, 2),),
        ],
    )
    def test_decomposition_is_unimodular(self, matrix):
        """Test S = U * A * V with det U, det V = +-1 and S >= 0 on the diagonal."""
        snf = smith_normal_form(matrix)
        assert _product(_product(snf.U, matrix), snf.V) == snf.S
        assert abs(Matrix(snf.U).det()) == 1
        assert abs(Matrix(snf.V).det()) == 1
        assert all(d >= 0 for d in snf.diagonal)
        off_diagonal = [
            x
            for i, row in enumerate(snf.S)
            for j, x in enumerate(row)
            if i != j
        ]
        assert not any(off_diagonal)

    def test_rank_deficient_factors(self):
        """Test a rank one matrix keeps a single invariant factor."""
        snf = smith_normal_form([[2, 4], [4, 8]])
        assert snf.invariant_factors == (2,)
        assert snf.rank == 1

    @pytest.mark.parametrize(
        "matrix",
        [
            [[2, 0], [0, 3]],
            [[1, 2, 3], [4, 5, 6]],
            [[6, 4], [4, 6], [2, 2]],
            [[1, 0, 1], [0, 4, -1]],
        ],
    )
    def test_agrees_with_sympy(self, matrix):
        """Test invariant factors against sympy."""
        assert smith_normal_form(matrix).invariant_factors == sympy_invariant_factors(
            matrix
        )


class TestKernelAndRank:
    """Rational kernel and rank test cases."""

    def test_kernel_of_single_row(self):
        """Test ker [1 1] is spanned by (-1, 1)."""
        kernel = rational_kernel_basis([[1, 1]], 2)
        assert kernel.vectors == ((Fraction(-1), Fraction(1)),)
        assert kernel.free_columns == (1,)

    def test_kernel_of_identity(self):
        """Test the identity has a trivial kernel."""
        assert rational_kernel_basis(identity(2), 2).dimension == 0

    def test_kernel_of_rank_one(self):
        """Test a rank one 2 x 3 matrix has a 2-dimensional kernel."""
        rows = [[1, 2, 3], [2, 4, 6]]
        kernel = rational_kernel_basis(rows, 3)
        assert kernel.dimension == 2
        for vector in kernel.vectors:
            assert mat_vec(rows, vector) == (0, 0)

    def test_kernel_coordinates(self):
        """Test coordinates are the entries at the free columns."""
        kernel = rational_kernel_basis([[1, 2, 3]], 3)
        v = kernel.combine([2, -1])
        assert kernel.coordinates(v) == (Fraction(2), Fraction(-1))

    def test_ranks(self):
        """Test rank of zero, identity and rank one matrices."""
        assert rank([[0, 0], [0, 0]]) == 0
        assert rank(identity(4)) == 4
        assert rank([[1, 2], [2, 4]]) == 1

    def test_rank_of_empty(self):
        """Test an empty list of rows has rank 0."""
        assert rank([], 3) == 0

    def test_row_space_reduce(self):
        """Test reduction modulo a row space is canonical."""
        space = row_space([[1, 1, 0]], 3)
        assert space.contains((2, 2, 0))
        assert not space.contains((1, 0, 0))
        assert space.reduce((1, 0, 5)) == space.reduce((0, -1, 5))


class TestIntegerSolving:
    """Integer solving test cases."""

    def test_solve_integer(self):
        """Test an integer solution is found when one exists."""
        assert solve_integer([[2, 0], [0, 3]], [4, 3]) == (2, 1)

    def test_solve_integer_none(self):
        """Test None when only rational solutions exist."""
        assert solve_integer([[2, 0], [0, 3]], [1, 0]) is None

    def test_solve_integer_underdetermined(self):
        """Test a solution of a wide system satisfies it."""
        matrix = [[2, 3, 5], [1, 1, 1]]
        x = solve_integer(matrix, [7, 3])
        assert x is not None
        assert mat_vec(matrix, x) == (7, 3)

    def test_solve_rational(self):
        """Test rational solution and inconsistency."""
        assert solve_rational([[2, 0]], [1], 2) == (Fraction(1, 2), Fraction(0))
        assert solve_rational([[1, 1], [1, 1]], [1, 2], 2) is None

    def test_integer_section(self):
        """Test A B = identity for a surjective map."""
        matrix = [[0, 1, 0, 1], [-1, 0, 1, 0], [1, 1, 0, 0]]
        section = integer_section(matrix)
        assert _product(matrix, section) == identity(3)

    def test_integer_section_not_surjective(self):
        """Test a map with cokernel Z/2 has no integer section."""
        with pytest.raises(NotSurjectiveError):
            integer_section([[2, 0], [0, 1]])


class TestVectors:
    """Small vector helper test cases."""

    def test_is_primitive(self):
        """Test primitivity of a few vectors."""
        assert is_primitive((2, 4)) is False
        assert is_primitive((1, 0, 1)) is True
        assert is_primitive((3, 5)) is True

    def test_is_primitive_zero(self):
        """Test the zero vector is rejected."""
        with pytest.raises(ValueError):
            is_primitive((0, 0))

    def test_primitive(self):
        """Test division by the gcd."""
        assert primitive((4, -6, 8)) == (2, -3, 4)

    def test_clear_denominators(self):
        """Test the least common denominator is used."""
        scaled, d = clear_denominators([Fraction(1, 2), Fraction(1, 3), 1])
        assert d == 6
        assert scaled == (3, 2, 6)

    def test_dot(self):
        """Test the integer pairing."""
        assert dot((1, 2), (3, 4)) == 11

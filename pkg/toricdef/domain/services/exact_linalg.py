"""Exact integer and rational linear algebra.

Everything downstream works with arbitrary precision ``int`` and
``fractions.Fraction`` values. Row reduction and rank go through sympy's
``DomainMatrix`` over ``QQ``; the Smith normal form and its transforms come
from sympy's ``smith_normal_decomp`` over ``ZZ``.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors, smith_normal_decomp
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from toricdef.core.exceptions import NotSurjectiveError

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]
IntMatrix = tuple[IntVector, ...]
RatMatrix = tuple[RatVector, ...]

Number = int | Fraction


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = S with U, V unimodular and S diagonal."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        size = min(len(self.S), len(self.S[0]) if self.S else 0)
        return tuple(self.S[i][i] for i in range(size))

    @property
    def invariant_factors(self) -> IntVector:
        """Nonzero diagonal entries of S."""
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class KernelBasis:
    """Basis of a kernel read off a reduced row echelon form.

    The vector attached to ``free_columns[k]`` has entry 1 there and 0 at the
    other free columns, so the coordinates of a kernel element are its
    entries at the free columns.
    """

    vectors: tuple[RatVector, ...]
    free_columns: IntVector
    length: int

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def coordinates(self, v: Sequence[Number]) -> RatVector:
        return tuple(Fraction(v[c]) for c in self.free_columns)

    def combine(self, coefficients: Sequence[Number]) -> RatVector:
        """Linear combination of the basis vectors."""
        out = [Fraction(0)] * self.length
        for coefficient, vector in zip(coefficients, self.vectors, strict=True):
            if coefficient:
                for k, x in enumerate(vector):
                    if x:
                        out[k] += coefficient * x
        return tuple(out)


@dataclass(frozen=True)
class RowSpace:
    """A subspace of Q^n stored as reduced row echelon rows."""

    rows: RatMatrix
    pivots: IntVector
    length: int

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def coordinates(self, v: Sequence[Number]) -> RatVector:
        """Coordinates of a member of the space in the row basis."""
        return tuple(Fraction(v[p]) for p in self.pivots)

    def reduce(self, v: Sequence[Number]) -> RatVector:
        """Canonical representative of ``v`` modulo the space."""
        return reduce_modulo(v, self)

    def contains(self, v: Sequence[Number]) -> bool:
        return not any(self.reduce(v))


def _to_domain_matrix(rows: Sequence[Sequence[Number]], ncols: int) -> DomainMatrix:
    converted = [
        [QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row]
        for row in rows
    ]
    return DomainMatrix(converted, (len(converted), ncols), QQ)


def _from_sympy(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def rref(rows: Sequence[Sequence[Number]], ncols: int) -> tuple[RatMatrix, IntVector]:
    """Reduced row echelon form; zero rows dropped."""
    if not rows or ncols == 0:
        return (), ()
    reduced, pivots = _to_domain_matrix(rows, ncols).rref()
    as_matrix = reduced.to_Matrix()
    out = tuple(
        tuple(_from_sympy(as_matrix[i, j]) for j in range(ncols))
        for i in range(len(pivots))
    )
    return out, tuple(int(p) for p in pivots)


def rank(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> int:
    """Rank over Q."""
    if not rows:
        return 0
    width = len(rows[0]) if ncols is None else ncols
    if width == 0:
        return 0
    return int(_to_domain_matrix(rows, width).rank())


def row_space(rows: Iterable[Sequence[Number]], ncols: int) -> RowSpace:
    """Row space of the given vectors."""
    reduced, pivots = rref(list(rows), ncols)
    return RowSpace(rows=reduced, pivots=pivots, length=ncols)


def rational_kernel_basis(
    rows: Sequence[Sequence[Number]], ncols: int
) -> KernelBasis:
    """Deterministic basis of {x : A x = 0}, free columns in index order."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = tuple(c for c in range(ncols) if c not in pivot_set)
    vectors = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for k, p in enumerate(pivots):
            x[p] = -reduced[k][f]
        vectors.append(tuple(x))
    return KernelBasis(vectors=tuple(vectors), free_columns=free, length=ncols)


def reduce_modulo(v: Sequence[Number], space: RowSpace) -> RatVector:
    """Subtract row multiples so ``v`` vanishes at every pivot column."""
    out = [Fraction(x) for x in v]
    for row, p in zip(space.rows, space.pivots, strict=True):
        factor = out[p]
        if factor:
            for k, x in enumerate(row):
                if x:
                    out[k] -= factor * x
    return tuple(out)


def solve_rational(
    rows: Sequence[Sequence[Number]], rhs: Sequence[Number], ncols: int
) -> RatVector | None:
    """One solution of A x = b (free variables zero), or None."""
    if not rows:
        return tuple(Fraction(0) for _ in range(ncols)) if not any(rhs) else None
    augmented = [list(row) + [b] for row, b in zip(rows, rhs, strict=True)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for k, p in enumerate(pivots):
        x[p] = reduced[k][ncols]
    return tuple(x)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with unimodular transforms, via sympy.

    The diagonal is made nonnegative by flipping rows of U.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if not any(x for row in matrix for x in row):
        zero = tuple(tuple(0 for _ in range(n)) for _ in range(m))
        return SmithDecomposition(U=identity(m), S=zero, V=identity(n))

    s, u, v = smith_normal_decomp(
        Matrix([[int(x) for x in row] for row in matrix]), domain=ZZ
    )
    diagonal = [[int(x) for x in row] for row in s.tolist()]
    left = [[int(x) for x in row] for row in u.tolist()]
    for i in range(min(m, n)):
        if diagonal[i][i] < 0:
            diagonal[i] = [-x for x in diagonal[i]]
            left[i] = [-x for x in left[i]]
    return SmithDecomposition(
        U=tuple(map(tuple, left)),
        S=tuple(map(tuple, diagonal)),
        V=tuple(tuple(int(x) for x in row) for row in v.tolist()),
    )


def sympy_invariant_factors(matrix: Sequence[Sequence[int]]) -> IntVector:
    """Invariant factors straight from sympy, without the transforms."""
    if not matrix or not matrix[0]:
        return ()
    factors = invariant_factors(Matrix([list(row) for row in matrix]), domain=ZZ)
    return tuple(abs(int(f)) for f in factors if f != 0)


def integer_section(matrix: Sequence[Sequence[int]]) -> IntMatrix:
    """Integer B with A B = identity for A surjective onto Z^k."""
    k = len(matrix)
    snf = smith_normal_form(matrix)
    if snf.rank < k or any(d != 1 for d in snf.invariant_factors):
        raise NotSurjectiveError(
            "matrix is not surjective onto the integer lattice",
            invariant_factors=snf.invariant_factors,
        )
    n = len(matrix[0])
    # B = V[:, :k] * U
    return tuple(
        tuple(sum(snf.V[r][c] * snf.U[c][j] for c in range(k)) for j in range(k))
        for r in range(n)
    )


def solve_integer(
    matrix: Sequence[Sequence[int]], rhs: Sequence[int]
) -> IntVector | None:
    """Integer solution of A x = b (or None) through the Smith form."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    snf = smith_normal_form(matrix)
    ub = [sum(snf.U[i][k] * rhs[k] for k in range(m)) for i in range(m)]
    diagonal = snf.diagonal
    y = [0] * n
    for i in range(m):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if ub[i] != 0:
                return None
            continue
        if ub[i] % d:
            return None
        y[i] = ub[i] // d
    return tuple(sum(snf.V[r][c] * y[c] for c in range(n)) for r in range(n))


def is_primitive(v: Sequence[int]) -> bool:
    """True iff the entries have gcd 1."""
    if not any(v):
        raise ValueError("zero vector has no primitivity")
    return vector_gcd(v) == 1


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence[int]) -> IntVector:
    g = vector_gcd(v)
    return tuple(int(x) // g for x in v) if g else tuple(v)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum((x * y for x, y in zip(u, v, strict=True)), 0)


def mat_vec(matrix: Sequence[Sequence[Number]], v: Sequence[Number]) -> tuple:
    return tuple(dot(row, v) for row in matrix)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def clear_denominators(v: Sequence[Number]) -> tuple[IntVector, int]:
    """Return (D * v, D) with D the least common denominator."""
    denominator = 1
    for x in v:
        q = Fraction(x).denominator
        denominator = denominator * q // gcd(denominator, q)
    return tuple(int(Fraction(x) * denominator) for x in v), denominator

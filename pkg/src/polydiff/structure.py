"""Structural facts shared by every differentiation matrix here.

Every basis this package handles spans the polynomials of some degree
n, so its differentiation matrix D is similar to the single nilpotent
Jordan block J of dimension n + 1: the similarity is carried by the
matrix V whose column k holds the coefficients of x^k / k! in the
basis.  From V one gets a structured generalized inverse
D+ = V J^T V^(-1), which satisfies D D+ D = D and D+ D D+ = D+ but is
not the Moore-Penrose pseudoinverse in general.

The same data yields an independent oracle for any differentiation
matrix: conjugate the (trivially correct) monomial matrix by the
basis-change matrix M whose columns are the monomial images x^k.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import (
    BernsteinBasis,
    CoeffVector,
    DegreeGradedBasis,
    DenseMatrix,
    Field,
    HermiteBasis,
    LagrangeBasis,
    SingularMatrixError,
    approx_equal,
    one_of,
    zero_of,
)
from .bernstein import monomial_in_bernstein
from .degree_graded import multiply_by_x


class MonomialImages:
    """Expansions of 1, x, ..., x^n in a basis, one coefficient column each."""

    __slots__ = ("basis", "columns")

    def __init__(self, basis, columns):
        self.basis = basis
        self.columns = tuple(CoeffVector(c, basis=basis) for c in columns)

    @property
    def ones(self) -> CoeffVector:
        """Expansion of the constant 1."""
        return self.columns[0]

    def __len__(self):
        return len(self.columns)


def monomial_images(basis, n: int | None = None) -> MonomialImages:
    """Expand x^0 .. x^n in the given basis (default: up to dimension - 1)."""
    dim = basis.dimension
    if n is None:
        n = dim - 1
    if not (0 <= n <= dim - 1):
        raise ValueError(f"need 0 <= n < dimension {dim}")
    cols = []
    if isinstance(basis, DegreeGradedBasis):
        rec = basis.recurrence
        zero = zero_of(basis.field)
        col = [one_of(basis.field)]
        cols.append(tuple(col) + (zero,) * (dim - 1))
        for _ in range(n):
            col = multiply_by_x(rec, col)
            cols.append(tuple(col) + (zero,) * (dim - len(col)))
    elif isinstance(basis, LagrangeBasis):
        ts = basis.nodes.nodes
        for k in range(n + 1):
            cols.append(tuple(t ** k for t in ts))
    elif isinstance(basis, HermiteBasis):
        nodes = basis.nodes
        for k in range(n + 1):
            col = []
            for t, s in zip(nodes.nodes, nodes.confluencies):
                for j in range(s):
                    col.append(math.comb(k, j) * t ** (k - j) if j <= k
                               else zero_of(basis.field))
            cols.append(tuple(col))
    elif isinstance(basis, BernsteinBasis):
        for k in range(n + 1):
            cols.append(monomial_in_bernstein(basis.degree, k))
    else:
        raise TypeError(f"unsupported basis: {basis!r}")
    return MonomialImages(basis, cols)


def build_V(images: MonomialImages) -> DenseMatrix:
    """Similarity matrix with column k holding the coefficients of x^k / k!."""
    dim = images.basis.dimension
    if len(images) != dim:
        raise ValueError("need monomial images up to the basis dimension")
    cols = []
    for k, col in enumerate(images.columns):
        fact = math.factorial(k)
        cols.append([c / fact for c in col])
    entries = [cols[k][r] for r in range(dim) for k in range(dim)]
    return DenseMatrix(dim, dim, entries)


def jordan_block(dim: int, field: Field = Field.RATIONAL) -> DenseMatrix:
    """Single nilpotent Jordan block: ones on the superdiagonal."""
    one, zero = one_of(field), zero_of(field)
    return DenseMatrix(dim, dim, [one if j == i + 1 else zero
                                  for i in range(dim) for j in range(dim)], field)


def invert_matrix(M: DenseMatrix) -> DenseMatrix:
    """Inverse by Gauss-Jordan elimination.

    Exact over rationals (first nonzero pivot); partial pivoting by
    magnitude over floating fields.
    """
    if M.rows != M.cols:
        raise ValueError("only square matrices invert")
    n = M.rows
    a = [list(M.row(i)) + list(DenseMatrix.identity(n, M.field).row(i)) for i in range(n)]
    exact = M.field is Field.RATIONAL
    for col in range(n):
        if exact:
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        else:
            piv = max(range(col, n), key=lambda r: abs(a[r][col]))
            piv = piv if a[piv][col] != 0 else None
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return DenseMatrix.from_rows([row[n:] for row in a], M.field)


def jordan_check(D: DenseMatrix, V: DenseMatrix, tol: float = 1e-10) -> bool:
    """Does D V = V J hold (exactly over rationals, to tol otherwise)?"""
    if D.rows != D.cols or (V.rows, V.cols) != (D.rows, D.cols):
        raise ValueError("dimension mismatch")
    J = jordan_block(D.rows, D.field)
    lhs, rhs = D * V, V * J
    if D.field is Field.RATIONAL and V.field is Field.RATIONAL:
        return lhs == rhs
    return approx_equal(lhs, rhs, tol)


def pseudo_inverse(D: DenseMatrix, V: DenseMatrix) -> DenseMatrix:
    """Structured generalized inverse V J^T V^(-1).

    Inverts differentiation up to the lost constant: D+ maps the
    coefficients of p' back to those of p minus its degree-0 Taylor
    part.  Not the Moore-Penrose pseudoinverse in general.
    """
    if D.rows != D.cols or (V.rows, V.cols) != (D.rows, D.cols):
        raise ValueError("dimension mismatch")
    Jt = jordan_block(D.rows, V.field).transpose()
    return V * Jt * invert_matrix(V)


def verify_generalized_inverse(D: DenseMatrix, Dp: DenseMatrix, tol: float = 1e-10) -> bool:
    """Check D D+ D = D and D+ D D+ = D+."""
    if (D.rows, D.cols) != (Dp.rows, Dp.cols):
        return False
    c1 = D * Dp * D
    c2 = Dp * D * Dp
    if D.field is Field.RATIONAL and Dp.field is Field.RATIONAL:
        return c1 == D and c2 == Dp
    return approx_equal(c1, D, tol) and approx_equal(c2, Dp, tol)


def nilpotency_index(D: DenseMatrix) -> int:
    """Smallest k with D^k = 0; requires the exact rational field."""
    if D.rows != D.cols:
        raise ValueError("nilpotency is a property of square matrices")
    if D.field is not Field.RATIONAL:
        raise ValueError("nilpotency index needs the exact rational field")
    zero = DenseMatrix.zeros(D.rows, D.cols)
    P = DenseMatrix.identity(D.rows)
    for k in range(D.rows + 1):
        if P == zero:
            return k
        P = P * D
    raise ArithmeticError("matrix is not nilpotent within its dimension")


def conjugation_oracle(basis) -> DenseMatrix:
    """Differentiation matrix built independently of any basis-specific rule.

    Conjugates the monomial differentiation matrix (superdiagonal
    1, 2, 3, ...) by the basis-change matrix of monomial images.
    Intended as a cross-check at small dimensions; the inversion makes
    it far more expensive than the direct constructors.
    """
    dim = basis.dimension
    images = monomial_images(basis)
    M = DenseMatrix(dim, dim,
                    [images.columns[k][r] for r in range(dim) for k in range(dim)])
    field = M.field
    zero, one = zero_of(field), one_of(field)
    d_mono = DenseMatrix(dim, dim, [(j * one if j == i + 1 else zero)
                                    for i in range(dim) for j in range(dim)], field)
    return M * d_mono * invert_matrix(M)

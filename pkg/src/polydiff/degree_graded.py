"""Differentiation matrices for degree-graded polynomial bases.

A degree-graded basis phi_0, phi_1, ... (deg phi_k = k, phi_0 = 1) is
described here by the coefficients of its multiplication-by-x rule

    x phi_j = alpha_j phi_{j+1} + beta_j phi_j + gamma_j phi_{j-1},

with every alpha_j nonzero.  The monomial, Chebyshev, Legendre, and
Newton bases are all instances.  Differentiation matrices produced by
this module are strictly upper triangular, and antidifferentiation
companions for Chebyshev and Legendre zero out the arbitrary-constant
slot (first row) by convention.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    CoeffVector,
    DenseMatrix,
    Field,
    NodeSet,
    as_node_set,
    coerce_scalar,
    field_of,
    join_fields,
    zero_of,
)


class RecurrenceSpec:
    """Multiplication-by-x coefficients for a degree-graded basis.

    Holds alpha_j, beta_j, gamma_j for j = 0 .. n-1; gamma_0 is kept for
    uniform indexing but never used (phi_{-1} is identically zero).
    """

    __slots__ = ("alpha", "beta", "gamma", "field")

    def __init__(self, alpha, beta=None, gamma=None):
        alpha = tuple(alpha)
        n = len(alpha)
        beta = tuple(beta) if beta is not None else (0,) * n
        gamma = tuple(gamma) if gamma is not None else (0,) * n
        if len(beta) != n or len(gamma) != n:
            raise ValueError("alpha, beta, gamma must have equal length")
        if any(a == 0 for a in alpha):
            raise ValueError("every alpha_j must be nonzero")
        field = join_fields(Field.RATIONAL,
                            *(field_of(x) for x in alpha + beta + gamma))
        self.alpha = tuple(coerce_scalar(a, field) for a in alpha)
        self.beta = tuple(coerce_scalar(b, field) for b in beta)
        self.gamma = tuple(coerce_scalar(g, field) for g in gamma)
        self.field = field

    def __len__(self):
        return len(self.alpha)

    def __repr__(self):
        return f"RecurrenceSpec(n={len(self.alpha)}, field={self.field.value})"


def monomial_recurrence(n: int) -> RecurrenceSpec:
    """x * x^j = x^(j+1): alpha = 1, beta = gamma = 0."""
    return RecurrenceSpec((Fraction(1),) * n)


def chebyshev_recurrence(n: int) -> RecurrenceSpec:
    """x T_j = (T_{j+1} + T_{j-1}) / 2 for j >= 1, and x T_0 = T_1."""
    half = Fraction(1, 2)
    alpha = (Fraction(1),) + (half,) * max(n - 1, 0)
    gamma = (Fraction(0),) + (half,) * max(n - 1, 0)
    return RecurrenceSpec(alpha[:n], None, gamma[:n])


def legendre_recurrence(n: int) -> RecurrenceSpec:
    """x P_j = ((j+1) P_{j+1} + j P_{j-1}) / (2j + 1)."""
    alpha = tuple(Fraction(j + 1, 2 * j + 1) for j in range(n))
    gamma = tuple(Fraction(j, 2 * j + 1) for j in range(n))
    return RecurrenceSpec(alpha, None, gamma)


def newton_recurrence(points) -> RecurrenceSpec:
    """x N_j = N_{j+1} + z_j N_j for the Newton basis on centers z_j."""
    points = tuple(points)
    field = join_fields(Field.RATIONAL, *(field_of(z) for z in points))
    one = coerce_scalar(1, field)
    return RecurrenceSpec((one,) * len(points), points, None)


def monomial_basis(n: int):
    from .core import DegreeGradedBasis
    return DegreeGradedBasis(monomial_recurrence(n), n, name="monomial")


def chebyshev_basis(n: int):
    from .core import DegreeGradedBasis
    return DegreeGradedBasis(chebyshev_recurrence(n), n, name="chebyshev")


def legendre_basis(n: int):
    from .core import DegreeGradedBasis
    return DegreeGradedBasis(legendre_recurrence(n), n, name="legendre")


def newton_basis(nodes):
    from .core import DegreeGradedBasis
    nodes = as_node_set(nodes)
    zs = nodes.flat_nodes()
    basis = DegreeGradedBasis(newton_recurrence(zs[:-1]), len(zs) - 1, name="newton")
    return basis


def multiply_by_x(rec: RecurrenceSpec, coeffs) -> list:
    """Coefficients of x * p given the coefficients of p.

    The output has one more entry than the input; the recurrence must be
    long enough to cover every nonzero input coefficient.
    """
    coeffs = list(coeffs)
    n = len(coeffs)
    if len(rec) < n:
        raise ValueError("recurrence too short for this coefficient vector")
    zero = zero_of(join_fields(rec.field, *(field_of(c) for c in coeffs)))
    out = [zero] * (n + 1)
    for j, c in enumerate(coeffs):
        if c == 0:
            continue
        out[j + 1] += rec.alpha[j] * c
        out[j] += rec.beta[j] * c
        if j >= 1:
            out[j - 1] += rec.gamma[j] * c
    return out


def diff_matrix_degree_graded(rec: RecurrenceSpec, n: int) -> DenseMatrix:
    """Differentiation matrix of dimension n + 1 for a degree-graded basis.

    Column k holds the coefficients of phi_k' in phi_0 .. phi_n.  The
    entries are filled by a second-order recurrence in the coefficients
    of the multiplication-by-x rule; each entry costs O(1), so the whole
    construction is O(n^2).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if len(rec) < n:
        raise ValueError(f"degree {n} needs {n} recurrence terms, got {len(rec)}")
    a, b, g = rec.alpha, rec.beta, rec.gamma
    zero = zero_of(rec.field)
    # Q[i][j] = coefficient of phi_{j-1} in phi_i', for 1 <= j <= i <= n.
    # Entries above the diagonal stay zero; index 0 rows/columns stay zero.
    Q = [[zero] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        Q[i][i] = i / a[i - 1]
        for j in range(i - 1, 0, -1):
            acc = (b[j - 1] - b[i - 1]) * Q[i - 1][j]
            if j >= 2:
                acc += a[j - 2] * Q[i - 1][j - 1]
            acc += g[j] * Q[i - 1][j + 1]
            if i >= 2:
                acc -= g[i - 1] * Q[i - 2][j]
            Q[i][j] = acc / a[i - 1]
    entries = []
    for r in range(n + 1):
        for k in range(n + 1):
            entries.append(Q[k][r + 1] if r < k else zero)
    return DenseMatrix(n + 1, n + 1, entries, rec.field)


def chebyshev_diff_matrix(n: int) -> DenseMatrix:
    """Chebyshev differentiation matrix from the closed-form coefficients.

    T_k' spreads 2k over T_{k-1}, T_{k-3}, ..., except that the T_0 slot
    receives k (odd k) or nothing (even k).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    D = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for k in range(1, n + 1):
        for j in range((k - 1) // 2 + 1):
            r = k - 1 - 2 * j
            D[r][k] = Fraction(2 * k) if r > 0 else Fraction(k)
    return DenseMatrix.from_rows(D, Field.RATIONAL)


def chebyshev_antideriv_matrix(n: int) -> DenseMatrix:
    """Antidifferentiation companion in the Chebyshev basis.

    Maps coefficients of p to coefficients of an antiderivative of p,
    with the free constant fixed by zeroing the T_0 slot of the output.
    The matrix is tridiagonal with zero main diagonal: integrating T_k
    gives T_{k+1} / (2(k+1)) - T_{k-1} / (2(k-1)) for k >= 2, T_2 / 4
    for k = 1, and T_1 for k = 0.
    """
    if n < 1:
        raise ValueError("need degree at least 1")
    D = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    D[1][0] = Fraction(1)
    for k in range(1, n + 1):
        if k + 1 <= n:
            D[k + 1][k] = Fraction(1, 2 * (k + 1))
        if k >= 2:
            D[k - 1][k] = Fraction(-1, 2 * (k - 1))
    return DenseMatrix.from_rows(D, Field.RATIONAL)


def legendre_antideriv_matrix(n: int) -> DenseMatrix:
    """Antidifferentiation companion in the Legendre basis.

    Integrating P_k gives (P_{k+1} - P_{k-1}) / (2k + 1); the P_0 slot of
    the output (the free constant) is zeroed by convention.
    """
    if n < 1:
        raise ValueError("need degree at least 1")
    D = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for r in range(1, n + 1):
        D[r][r - 1] = Fraction(1, 2 * r - 1)
        if r + 1 <= n:
            D[r][r + 1] = Fraction(-1, 2 * r + 3)
    return DenseMatrix.from_rows(D, Field.RATIONAL)


def newton_diff_matrix(nodes) -> DenseMatrix:
    """Differentiation matrix for the Newton basis on the given centers.

    ``nodes`` may be a NodeSet (confluencies expand to repeated centers,
    node-major) or a plain sequence of centers, repetitions allowed.
    With all centers equal the Newton basis degenerates to shifted
    monomials and the matrix to the monomial one.
    """
    zs = nodes.flat_nodes() if isinstance(nodes, NodeSet) else tuple(nodes)
    if not zs:
        raise ValueError("need at least one center")
    n = len(zs) - 1
    return diff_matrix_degree_graded(newton_recurrence(zs[:n]), n)


class DividedDifferenceTable:
    """Triangular table of (confluent) divided differences.

    ``levels[j][i]`` holds the order-j difference on positions i .. i+j
    of the flattened node list.  Repeated nodes take the scaled
    derivative directly instead of dividing by a zero spread.
    """

    __slots__ = ("nodes", "data", "levels")

    def __init__(self, nodes: NodeSet, data):
        nodes = as_node_set(nodes)
        data = tuple(data)
        dim = nodes.dimension
        if len(data) != dim:
            raise ValueError(f"expected {dim} data entries, got {len(data)}")
        flat = nodes.flat_nodes()
        owner = [i for i, s in enumerate(nodes.confluencies) for _ in range(s)]
        levels = [[data[nodes.slot(owner[t], 0)] for t in range(dim)]]
        for j in range(1, dim):
            prev = levels[j - 1]
            level = []
            for i in range(dim - j):
                if flat[i + j] == flat[i]:
                    # whole block at one node: order-j scaled derivative
                    level.append(data[nodes.slot(owner[i], j)])
                else:
                    level.append((prev[i + 1] - prev[i]) / (flat[i + j] - flat[i]))
            levels.append(level)
        self.nodes = nodes
        self.data = data
        self.levels = levels

    def newton_coefficients(self) -> tuple:
        return tuple(self.levels[j][0] for j in range(len(self.levels)))


def divided_differences(nodes, data) -> CoeffVector:
    """Newton coefficients of the interpolant of the given data.

    Data uses the node-major scaled-derivative layout: for node i of
    confluency s_i the entries are p(t_i), p'(t_i)/1!, ...,
    p^(s_i - 1)(t_i)/(s_i - 1)!.
    """
    nodes = as_node_set(nodes)
    table = DividedDifferenceTable(nodes, data)
    return CoeffVector(table.newton_coefficients(), basis=newton_basis(nodes))

"""Independent reference constructions used only by the tests.

Everything here goes the long way around on purpose: basis elements are
expanded into monomial coefficient lists with exact Fractions, derivatives
are taken coefficientwise, and expansions back into the basis under test
are obtained either from the defining data functionals (Lagrange, Hermite)
or by solving a linear system with a local Gaussian elimination.  None of
the package's matrix machinery is reused, so agreement with these oracles
is meaningful evidence.
"""

from fractions import Fraction
from math import comb


# ---------------------------------------------------------- polynomials
# a polynomial is a list of Fractions, index = power of x

def poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else Fraction(0)) + (q[i] if i < len(q) else Fraction(0))
            for i in range(n)]


def poly_scale(p, c):
    return [c * a for a in p]


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_deriv(p):
    return [Fraction(k) * p[k] for k in range(1, len(p))] or [Fraction(0)]


def poly_eval(p, x):
    acc = Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def poly_shifted_eval(p, x, order):
    """order-th derivative of p at x, divided by order!."""
    q = list(p)
    for _ in range(order):
        q = poly_deriv(q)
    return poly_eval(q, x) / (1 if order == 0 else _factorial(order))


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# ---------------------------------------------------------- linear solve

def solve_exact(A, bs):
    """Solve A X = B columnwise by Gaussian elimination over Fractions.

    A is a list of row lists, bs a list of right-hand-side columns.
    Returns the solution columns.  Raises on a singular system.
    """
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(b[i]) for b in bs]
         for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system in oracle")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [[M[r][n + k] for r in range(n)] for k in range(len(bs))]


# ---------------------------------------------------------- basis elements

def degree_graded_polys(alpha, beta, gamma, n):
    """phi_0 .. phi_n as monomial coefficient lists, from the x-multiplication rule."""
    polys = [[Fraction(1)]]
    for j in range(n):
        xp = [Fraction(0)] + polys[j]
        t = poly_add(xp, poly_scale(polys[j], -beta[j]))
        if j >= 1:
            t = poly_add(t, poly_scale(polys[j - 1], -gamma[j]))
        polys.append(poly_scale(t, 1 / Fraction(alpha[j])))
    return polys


def lagrange_polys(nodes):
    out = []
    for k, tk in enumerate(nodes):
        p = [Fraction(1)]
        for j, tj in enumerate(nodes):
            if j != k:
                p = poly_mul(p, [Fraction(-tj), Fraction(1)])
                p = poly_scale(p, 1 / (Fraction(tk) - Fraction(tj)))
        out.append(p)
    return out


def hermite_slots(nodes, confluencies):
    return [(i, j) for i, s in enumerate(confluencies) for j in range(s)]


def hermite_polys(nodes, confluencies):
    """Cardinal polynomials per slot, via the dual-functional linear system."""
    slots = hermite_slots(nodes, confluencies)
    dim = len(slots)
    # row s, column k: the slot-s functional applied to x^k
    A = [[Fraction(comb(k, m)) * Fraction(nodes[l]) ** (k - m) if k >= m else Fraction(0)
          for k in range(dim)]
         for (l, m) in slots]
    eyes = [[Fraction(1 if r == s else 0) for r in range(dim)] for s in range(dim)]
    return solve_exact(A, eyes)


def bernstein_polys(n):
    out = []
    for k in range(n + 1):
        p = [Fraction(comb(n, k))]
        for _ in range(k):
            p = poly_mul(p, [Fraction(0), Fraction(1)])
        for _ in range(n - k):
            p = poly_mul(p, [Fraction(1), Fraction(-1)])
        out.append(p)
    return out


# ---------------------------------------------------------- diff matrices

def _pad(p, n):
    return list(p) + [Fraction(0)] * (n - len(p))


def diff_matrix_by_expansion(polys):
    """Column k = coefficients of phi_k' re-expanded in phi, by linear solve."""
    dim = len(polys)
    A = [[_pad(polys[k], dim)[r] for k in range(dim)] for r in range(dim)]
    rhs = [_pad(poly_deriv(p), dim) for p in polys]
    cols = solve_exact(A, rhs)
    return [[cols[k][r] for k in range(dim)] for r in range(dim)]


def diff_matrix_by_values(polys, nodes):
    """Lagrange oracle: entry (i, k) = phi_k'(node_i)."""
    ders = [poly_deriv(p) for p in polys]
    return [[poly_eval(ders[k], Fraction(t)) for k in range(len(polys))]
            for t in nodes]


def diff_matrix_by_data(polys, nodes, confluencies):
    """Hermite oracle: row slot (l, m) takes the (l, m) data of each phi_k'."""
    slots = hermite_slots(nodes, confluencies)
    ders = [poly_deriv(p) for p in polys]
    return [[poly_shifted_eval(ders[k], Fraction(nodes[l]), m)
             for k in range(len(polys))]
            for (l, m) in slots]

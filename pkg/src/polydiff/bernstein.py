"""Bernstein basis on [0, 1]: differentiation matrix, evaluation, norms.

The degree-n Bernstein differentiation matrix is tridiagonal: row i
holds -i, 2i - n, n - i on columns i-1, i, i+1.  Its infinity norm is
2n, and the norm of its n-th power is 2^n n!, which grows much faster
than the n! of a nilpotent Jordan block; the norm table makes that
growth easy to inspect exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import DenseMatrix, Field, mat_inf_norm, mat_power


def diff_matrix_bernstein(n: int) -> DenseMatrix:
    """Tridiagonal differentiation matrix for the degree-n Bernstein basis."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        if i >= 1:
            rows[i][i - 1] = Fraction(-i)
        rows[i][i] = Fraction(2 * i - n)
        if i + 1 <= n:
            rows[i][i + 1] = Fraction(n - i)
    return DenseMatrix.from_rows(rows, Field.RATIONAL)


def bernstein_eval(coeffs, x):
    """de Casteljau evaluation of sum c_i B_i^n at x."""
    work = list(coeffs)
    if not work:
        raise ValueError("need at least one coefficient")
    one = x * 0 + 1
    while len(work) > 1:
        work = [(one - x) * a + x * b for a, b in zip(work, work[1:])]
    return work[0]


def monomial_in_bernstein(n: int, k: int) -> tuple:
    """Coefficients of x^k in the degree-n Bernstein basis.

    Entry i is C(i, k) / C(n, k); zero for i < k.
    """
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    cnk = math.comb(n, k)
    return tuple(Fraction(math.comb(i, k), cnk) for i in range(n + 1))


def bernstein_norm_table(n_max: int) -> list[tuple]:
    """Rows (n, norm of D, norm of D^n) for 1 <= n <= n_max, exactly.

    Also checks that D^(n+1) vanishes, which pins down the nilpotency
    index; a failure here would mean a broken construction.
    """
    table = []
    for n in range(1, n_max + 1):
        D = diff_matrix_bernstein(n)
        Dn = mat_power(D, n)
        if Dn * D != DenseMatrix.zeros(n + 1, n + 1):
            raise ArithmeticError(f"degree-{n} matrix is not nilpotent of index {n + 1}")
        table.append((n, mat_inf_norm(D), mat_inf_norm(Dn)))
    return table

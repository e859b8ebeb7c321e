"""Independent brute-force oracles used by the tests.

None of these import the code paths they check.
"""

import itertools
from fractions import Fraction
from math import factorial

import sympy


def finite_gl_counts(n, p, r):
    """Enumerate GL_n(Z/p^r) and count the reductions of K_n(p^r) and K'(p^r).

    Returns ``(|GL|, |K1|, |K'|)``.  Invertible mod p^r iff det is a unit mod p.
    """
    mod = p**r
    total = k1 = kp = 0
    for entries in itertools.product(range(mod), repeat=n * n):
        m = [entries[i * n:(i + 1) * n] for i in range(n)]
        if int(sympy.Matrix(m).det()) % p == 0:
            continue
        total += 1
        last = m[-1]
        if all(v == 0 for v in last[:-1]):
            kp += 1
            if last[-1] == 1:
                k1 += 1
    return total, k1, kp


def alternating_sum_by_derivative(n, k):
    """Value of the alternating sum via the (n-1)-th derivative of (x-1)^n x^(k-1) at x = 1.

    Only valid for k > 0, where the polynomial route applies.
    """
    x = sympy.Symbol("x")
    g = sympy.expand((x - 1) ** n * x ** (k - 1))
    return sympy.diff(g, x, n - 1).subs(x, 1) / factorial(n - 1)


def divisor_count_brute(m):
    m = abs(m)
    return sum(1 for d in range(1, m + 1) if m % d == 0)


def inverse(mat):
    """Exact inverse by Gauss-Jordan elimination over Fractions."""
    n = len(mat)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mul(a, b):
    return [[sum(Fraction(a[i][k]) * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def adjoint_by_conjugation(x):
    """Columns are x E_ij x^{-1} flattened row-major, computed one elementary matrix at a time."""
    n = len(x)
    xi = inverse(x)
    cols = []
    for i, j in itertools.product(range(n), repeat=2):
        e = [[int((a, b) == (i, j)) for b in range(n)] for a in range(n)]
        c = mul(mul(x, e), xi)
        cols.append([c[a][b] for a in range(n) for b in range(n)])
    m = n * n
    return [[cols[col][row] for col in range(m)] for row in range(m)]


def charpoly_faddeev(a):
    """Characteristic polynomial coefficients (leading first) by Faddeev-LeVerrier."""
    m = len(a)
    ident = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * m for _ in range(m)]
    for k in range(1, m + 1):
        am = mul(a, mk)
        mk = [[am[i][j] + coeffs[-1] * ident[i][j] for j in range(m)] for i in range(m)]
        amk = mul(a, mk)
        coeffs.append(-sum(amk[i][i] for i in range(m)) / k)
    return coeffs

"""Congruence depth of the adjoint action and the obstruction ideal of a matrix.

For an integral matrix ``x`` the adjoint operator ``M -> x M x^{-1}`` acts on
the ``n^2``-dimensional matrix algebra; we write it in the basis of elementary
matrices ``E_ij`` ordered row-major (``E_ij`` is basis vector ``i*n + j``).

``lambda_at(x, p)`` is the largest ``k`` with ``ad(x) = I mod p^k`` (entrywise),
and ``obstruction_ideal(g)`` is the content of ``charpoly(ad g) - (t-1)^{n^2}``,
the smallest ideal modulo which the characteristic polynomial looks central.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

from .combinatorics import p_valuation
from .errors import CentralElement, NotIntegralAtP, NotSemisimple, SingularMatrix

INF = math.inf

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    """Normalize nested rows or a flat row-major list into a square tuple matrix."""
    rows = list(rows)
    if rows and not isinstance(rows[0], (list, tuple)):
        n = math.isqrt(len(rows))
        if n * n != len(rows):
            raise ValueError(f"flat matrix literal of length {len(rows)} is not square")
        rows = [rows[i * n:(i + 1) * n] for i in range(n)]
    n = len(rows)
    if n < 2 or any(len(r) != n for r in rows):
        raise ValueError("expected a square matrix of size >= 2")
    return tuple(tuple(int(v) for v in r) for r in rows)


def _sym(x) -> sympy.Matrix:
    return sympy.Matrix(x)


def matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def det(x) -> int:
    return int(_sym(x).det())


def is_scalar(x) -> bool:
    n = len(x)
    return all(x[i][j] == (x[0][0] if i == j else 0) for i in range(n) for j in range(n))


@dataclass(frozen=True)
class AdjointOperator:
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def is_identity(self) -> bool:
        return all(v == (1 if i == j else 0) for i, row in enumerate(self.matrix) for j, v in enumerate(row))

    def __matmul__(self, other: AdjointOperator) -> AdjointOperator:
        a, b = self.matrix, other.matrix
        m = len(a)
        return AdjointOperator(tuple(tuple(sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0))
                                           for j in range(m)) for i in range(m)))


def adjoint(x) -> AdjointOperator:
    """Matrix of ``M -> x M x^{-1}``; row-major vectorization gives ``x (kron) x^{-T}``."""
    x = as_matrix(x)
    sx = _sym(x)
    if sx.det() == 0:
        raise SingularMatrix("adjoint needs an invertible matrix")
    ad = sympy.kronecker_product(sx, sx.inv().T)
    m = ad.shape[0]
    return AdjointOperator(tuple(tuple(Fraction(int(ad[i, j].p), int(ad[i, j].q)) for j in range(m))
                                 for i in range(m)))


def lambda_at(x, p: int):
    """Congruence depth of ``ad(x)`` to the identity at the prime ``p``; ``inf`` iff x is scalar."""
    x = as_matrix(x)
    d = det(x)
    if d == 0 or d % p == 0:
        raise NotIntegralAtP(f"det {d} is not a unit at {p}")
    ad = adjoint(x).matrix
    depth = INF
    for i, row in enumerate(ad):
        for j, v in enumerate(row):
            depth = min(depth, p_valuation(v - (1 if i == j else 0), p))
    return depth


_t = sympy.Symbol("t")


def adjoint_charpoly(x) -> list[Fraction]:
    """Coefficients (highest degree first) of the characteristic polynomial of ``ad(x)``."""
    ad = adjoint(x).matrix
    coeffs = sympy.Matrix(ad).charpoly(_t).all_coeffs()
    return [Fraction(int(c.p), int(c.q)) for c in coeffs]


def _is_semisimple(x) -> bool:
    """``ad(x)`` is semisimple iff the radical of its characteristic polynomial kills it."""
    ad = sympy.Matrix(adjoint(x).matrix)
    f = ad.charpoly(_t).as_expr()
    radical = sympy.quo(f, sympy.gcd(f, sympy.diff(f, _t)), _t)
    value = sympy.zeros(*ad.shape)
    for c in sympy.Poly(radical, _t).all_coeffs():
        value = value * ad + c * sympy.eye(ad.shape[0])
    return value.is_zero_matrix


def obstruction_ideal(gamma) -> int:
    """Positive generator of the content of ``charpoly(ad gamma) - (t - 1)^{n^2}``.

    ``gamma`` must be non-scalar, have determinant ``+-1`` (so it lies in the
    maximal compact at every finite place) and semisimple adjoint action.
    """
    gamma = as_matrix(gamma)
    if is_scalar(gamma):
        raise CentralElement("scalar matrices have trivial adjoint action")
    if abs(det(gamma)) != 1:
        raise NotIntegralAtP(f"obstruction ideal needs det = +-1, got {det(gamma)}")
    if not _is_semisimple(gamma):
        raise NotSemisimple("adjoint action is not semisimple")
    f = adjoint_charpoly(gamma)
    m = len(f) - 1
    unipotent = [(-1) ** k * math.comb(m, k) for k in range(m + 1)]
    diff = [a - b for a, b in zip(f, unipotent)]
    assert all(c.denominator == 1 for c in diff)
    content = math.gcd(*(int(c) for c in diff))
    if content == 0:
        raise NotSemisimple("characteristic polynomial equals (t-1)^{n^2}")
    return content


def random_unimodular(n: int, rng: random.Random, max_word: int = 8, step: int = 1) -> Matrix:
    """Product of up to ``max_word`` elementary matrices ``I + a E_ij``, ``a`` in ``step * {+-1, +-2}``.

    With ``step = p^k`` the product lies in the full level subgroup mod ``p^k``.
    """
    g = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(1, max_word)):
        i, j = rng.sample(range(n), 2)
        a = step * rng.choice((-2, -1, 1, 2))
        for col in range(n):
            g[i][col] += a * g[j][col]
    return as_matrix(g)


def inverse_unimodular(g) -> Matrix:
    inv = _sym(g).inv()
    return as_matrix([[int(inv[i, j]) for j in range(len(g))] for i in range(len(g))])


def conjugate(g, x) -> Matrix:
    return matmul(matmul(g, x), inverse_unimodular(g))


def _first_primes_not_dividing(m: int, count: int) -> list[int]:
    out = []
    p = 2
    while len(out) < count:
        if m % p:
            out.append(p)
        p = int(sympy.nextprime(p))
    return out


@dataclass
class ConjugationReport:
    gamma: Matrix
    obstruction: int
    seed: int
    samples: int
    dividing_primes: list[int]
    other_primes: list[int]
    max_lambda: dict[int, float] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def conjugation_divisibility_test(gamma, samples: int = 100, seed: int = 0, max_word: int = 8,
                                  extra_primes: int = 3) -> ConjugationReport:
    """Check ``p^{lambda_p(g gamma g^{-1})} | n(gamma)`` on seeded unimodular conjugates.

    At primes not dividing ``n(gamma)`` the depth must be exactly 0.  The first
    sample is always ``g = I``.
    """
    gamma = as_matrix(gamma)
    content = obstruction_ideal(gamma)
    dividing = sorted(int(p) for p in sympy.factorint(content))
    others = _first_primes_not_dividing(content, extra_primes)
    rng = random.Random(seed)
    report = ConjugationReport(gamma, content, seed, samples, dividing, others)
    n = len(gamma)
    for k in range(samples):
        g = as_matrix([[int(i == j) for j in range(n)] for i in range(n)]) if k == 0 else random_unimodular(n, rng, max_word)
        conj = conjugate(g, gamma)
        for p in dividing + others:
            lam = lambda_at(conj, p)
            report.max_lambda[p] = max(report.max_lambda.get(p, 0), lam)
            allowed = p_valuation(content, p)
            if lam > allowed:
                report.failures.append({"sample": k, "g": g, "p": p, "lambda": lam, "allowed": allowed})
    return report


def seeded_semisimple_gammas(count: int, seed: int, sizes: Sequence[int] = (2, 3),
                             steps: Sequence[int] = (1, 2, 4)) -> list[Matrix]:
    """Deterministic list of non-scalar unimodular matrices with semisimple adjoint action.

    Candidates cycle through ``steps`` so some of them are congruent to the
    identity modulo 2 or 4 and have positive depth at 2.
    """
    rng = random.Random(seed)
    out: list[Matrix] = []
    k = 0
    while len(out) < count:
        n = sizes[k % len(sizes)]
        g = random_unimodular(n, rng, max_word=4, step=steps[k % len(steps)])
        if not is_scalar(g) and g not in out and _is_semisimple(g):
            out.append(g)
            k += 1
    return out

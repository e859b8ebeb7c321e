"""
Conjugates cannot get too close to the centre
==============================================

The congruence depth of ad(g gamma g^-1) at p is capped by the p-part of
the obstruction ideal, a gcd of characteristic-polynomial coefficients.
"""

import random

from newvector import conjugation as cj

gamma = ((0, -1), (1, 0))
print("obstruction of the rotation:", cj.obstruction_ideal(gamma))

rng = random.Random(0)
for _ in range(5):
    g = cj.random_unimodular(2, rng)
    x = cj.conjugate(g, gamma)
    print(x, {p: cj.lambda_at(x, p) for p in (2, 3, 5)})

# a matrix congruent to 1 mod 4 has larger obstruction and positive depth
for gamma in cj.seeded_semisimple_gammas(6, 0):
    rep = cj.conjugation_divisibility_test(gamma, samples=50, seed=1)
    print(gamma, rep.obstruction, rep.max_lambda, "ok" if rep.passed else "FAILED")

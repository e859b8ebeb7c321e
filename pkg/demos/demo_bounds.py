"""
How large is the normalizing constant?
======================================

The value at the identity stays within a factor 3 (or 6 with a fixed
central character) of the subgroup index.  The pointwise bound on h that
drops the binomial weights is too optimistic; the termwise one is not.
"""

from fractions import Fraction

from newvector import local
from newvector.ideals import PrimePlace

p = PrimePlace(2)
for r in range(5):
    b = local.check_bound_unfixed(p, 2, r)
    print(f"r={r}  e(1)={b.lhs}  index/3={b.rhs}  ratio={b.ratio}")

# the fixed-character values at q = n = 2
print([str(local.eval_at_one(local.build_averaged_newvector(p, 2, r))) for r in range(4)])

# h at an element of K outside K_1(p), for n = q = 2, r = 1
e = local.build_newvector(p, 2, 1)
h = abs(local.eval_at_central(e, 0)) / local.eval_at_one(e)
literal = local.eval_bound_at_level(local.dominating_bound_local(p, 2, 1), 0)
termwise = local.eval_bound_at_level(local.termwise_bound_local(p, 2, 1), 0)
print("h =", h, " unweighted bound =", literal, " termwise bound =", termwise)
assert h > literal and h <= termwise

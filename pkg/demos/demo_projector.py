"""
The new-vector element is an exact projector
=============================================

Build the alternating combination of congruence-subgroup idempotents and
check that it sees exactly one generic representation: the one whose
conductor equals the level.
"""

from newvector import local
from newvector.combinatorics import alternating_sum
from newvector.ideals import PrimePlace

# the binomial identity doing all the work
print([alternating_sum(3, k) for k in range(-2, 6)])

# the element for GL_2 at level 2 over a place of norm 2
p = PrimePlace(2)
e = local.build_newvector(p, 2, 2)
print(e)
print("e(1) =", local.eval_at_one(e))

# traces against generic representations of conductor 0..4
print([str(local.trace(e, local.Generic(c))) for c in range(5)])

# genericity matters: the trivial representation leaks for r < n
for r in range(4):
    print(r, local.trace(local.build_newvector(p, 3, r), local.Trivial()))

"""
Central terms decay with the level
==================================

For F = Q, evaluate h at a central element z (an S-unit) and compare with
d(z-1) N(z-1) / N(n), with and without the 3^P safety factor.
"""

from fractions import Fraction

from newvector.globalvec import assemble, central_decay_check
from newvector.ideals import parse_ideal

for text in ["2^2", "2^4", "5^1", "5^3 * 7^1"]:
    G = assemble(parse_ideal(text), 2)
    for z, S in [(-1, [3]), (Fraction(1, 3), [3]), (-3, [3])]:
        if any(p in {pl.p for pl in G.ideal.places} for p in S):
            continue
        res = central_decay_check(G, z, S)
        print(f"{text:10} z={str(z):5} lhs={res.lhs}  rhs={res.rhs_literal}  with 3^P={res.rhs_with_factor}")

"""Exact construction and verification of new-vector Hecke projectors for GL_n.

Modules:

* ``combinatorics``: binomials with the vanishing convention, the alternating-sum identity
* ``ideals``: places, ideals and divisor lattices
* ``local``: local new-vector elements, volumes, traces and bounds
* ``globalvec``: global assembly, membership profiles, dominating bounds, central decay
* ``conjugation``: adjoint congruence depth and the obstruction ideal
* ``census``: synthetic spectra and the classical / refined counts
* ``suites``, ``reports``, ``cli``: verification grids, report rendering, command line
"""

from .combinatorics import alternating_sum, binom, divisor_count, odd_binomial_tail
from .globalvec import (GlobalNewVector, MembershipProfile, SpectrumEntry, assemble, bound_at_profile,
                        central_decay_check, dominating_expansion, eval_h_at_profile, global_eval_at_one,
                        global_trace)
from .ideals import Ideal, PrimePlace, parse_ideal, place
from .local import Generic, Trivial, build_averaged_newvector, build_newvector, eval_at_one, trace

__version__ = "0.1.0"

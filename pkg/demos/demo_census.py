"""
Counting representations instead of fixed vectors
=================================================

On a synthetic spectrum the refined count at n returns exactly the number
of generic entries with conductor n, while the classical count weights
old forms by their fixed-vector dimension.
"""

from fractions import Fraction

from newvector.census import CensusConfig, census_row, generate_spectrum
from newvector.ideals import PrimePlace

cfg = CensusConfig(rank=2, places=(PrimePlace(2), PrimePlace(3)), r_max=2, entries=80,
                   generic_fraction=Fraction(3, 4), seed=3)
spectrum = generate_spectrum(cfg)
print(len(spectrum), "entries,", sum(not e.generic for e in spectrum), "non-generic")

print(f"{'ideal':12} {'tally':>5} {'refined':>8} {'classical':>9} {'leak':>5}")
for ideal in cfg.tested_ideals():
    row = census_row(spectrum, ideal, cfg.rank, None)
    print(f"{row['ideal']:12} {row['tally']:5} {row['refined_count']:>8} {row['classical_count']:>9} "
          f"{row['nongeneric_leakage']:>5}")

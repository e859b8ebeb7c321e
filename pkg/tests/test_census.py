from fractions import Fraction as F

import pytest

from newvector.census import (CensusConfig, census_row, classical_count, conductor_tally, dump_spectrum,
                              generate_spectrum, inversion_check, load_spectrum, refined_count,
                              trivial_leakage)
from newvector.globalvec import SpectrumEntry
from newvector.ideals import Ideal, PrimePlace

P2, P3 = PrimePlace(2), PrimePlace(3)


def cfg(**kw):
    base = dict(rank=2, places=(P2,), r_max=2, entries=10, seed=1)
    base.update(kw)
    return CensusConfig(**base)


def test_generation_deterministic():
    assert generate_spectrum(cfg()) == generate_spectrum(cfg())
    assert generate_spectrum(cfg()) != generate_spectrum(cfg(seed=2))


def test_generic_fraction_extremes():
    assert all(not e.generic for e in generate_spectrum(cfg(generic_fraction=F(0))))
    spec = generate_spectrum(cfg(entries=50))
    lattice = Ideal({P2: 2}).divisors()
    assert len(lattice) == 3
    assert all(e.generic and e.conductor in lattice for e in spec)


def test_config_validation():
    with pytest.raises(ValueError):
        cfg(entries=0)
    with pytest.raises(ValueError):
        cfg(generic_fraction=F(3, 2))
    with pytest.raises(ValueError):
        cfg(mode="fixed", chi_conductor=Ideal({P3: 1}))


def test_config_roundtrip():
    c = CensusConfig.from_dict({"rank": 3, "places": [{"q": 2}, {"q": 3, "f": 2, "label": "x"}], "r_max": 2,
                                "entries": 5, "generic_fraction": "1/2", "seed": 4})
    assert c.places[1].q == 9
    assert CensusConfig.from_dict(c.to_dict()) == c


def test_refined_examples():
    n22 = Ideal({P2: 2})
    spec = [SpectrumEntry(n22)] * 3
    assert refined_count(spec, n22, 2).generic == 3
    assert refined_count(spec, Ideal({P2: 1}), 2).generic == 0
    leak = refined_count([SpectrumEntry(Ideal(), generic=False)], Ideal({P2: 1}), 2)
    assert leak.nongeneric == -1 == trivial_leakage(Ideal({P2: 1}), 2)


def test_classical_examples():
    n22 = Ideal({P2: 2})
    assert classical_count([SpectrumEntry(n22)], n22, 2) == 1
    assert classical_count([SpectrumEntry(Ideal({P2: 1}))], n22, 2) == 2
    assert classical_count([SpectrumEntry(Ideal({P3: 1}))], n22, 2) == 0


def test_inversion():
    assert inversion_check([], Ideal({P2: 2}), 2)
    spec = generate_spectrum(cfg(entries=40, places=(P2, P3)))
    for ideal in Ideal({P2: 2, P3: 2}).divisors():
        assert inversion_check(spec, ideal, 3)
    one = [SpectrumEntry(Ideal())]
    assert classical_count(one, Ideal({P2: 1}), 3) == 3 == refined_count(one, Ideal(), 3).generic * 3
    with pytest.raises(ValueError):
        inversion_check([SpectrumEntry(Ideal(), generic=False)], Ideal(), 2)


def test_trivial_leakage_formula():
    assert trivial_leakage(Ideal({P2: 1, P3: 2}), 3) == (-1) * 2 * 1
    assert trivial_leakage(Ideal({P2: 2}), 2) == 0


def test_census_rows_pass_with_mixed_spectrum():
    c = cfg(entries=60, places=(P2, P3), generic_fraction=F(2, 3))
    spec = generate_spectrum(c)
    for ideal in c.tested_ideals():
        row = census_row(spec, ideal, c.rank, None)
        assert row["pass"], row
        assert row["tally"] == conductor_tally(spec, ideal)


def test_fixed_mode():
    chi = Ideal({P2: 1})
    c = cfg(mode="fixed", chi_conductor=chi, entries=30)
    assert all(chi.divides(i) for i in c.tested_ideals())
    spec = generate_spectrum(c)
    for ideal in c.tested_ideals():
        assert census_row(spec, ideal, 2, chi)["pass"]


def test_spectrum_file_roundtrip():
    spec = generate_spectrum(cfg(entries=20, places=(P2, PrimePlace(5, "a")), generic_fraction=F(1, 2)))
    assert load_spectrum(dump_spectrum(spec)) == spec
    assert load_spectrum('[{"conductor": "2^2"}]') == [SpectrumEntry(Ideal({P2: 2}))]
    with pytest.raises(ValueError):
        load_spectrum('{"conductor": "2"}')

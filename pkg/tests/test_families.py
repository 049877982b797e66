"""Equienergetic families, cospectrality search, extremal energies."""

import pytest

from icgraph.families import (
    bipartite_extremal_spectrum,
    cospectral,
    equienergetic_family,
    equienergetic_family_second,
    min_energy_search,
    predicted_min_energy_set,
    second_spectral_value,
    so_conjecture_check,
)
from icgraph.graphs import IcgSpec, spectrum
from icgraph.sweep import BudgetExceeded


def test_first_family_n30():
    r = equienergetic_family(30)
    assert [m.canonical() for m in r.members] == ["30:1", "30:2,3", "30:2,5", "30:3,5"]
    assert r.common_energy == 64
    assert r.all_hyperenergetic
    # symmetric matrix, true diagonal, false everywhere else
    for i, row in enumerate(r.pairwise_cospectral):
        for j, flag in enumerate(row):
            assert flag == (i == j)


def test_first_family_n15():
    r = equienergetic_family(15)
    assert [m.canonical() for m in r.members] == ["15:1", "15:3,5"]
    assert r.common_energy == 32
    assert r.all_hyperenergetic  # 32 > 2*15 - 2


def test_first_family_rejects():
    for n in (4, 9, 8, 49):
        with pytest.raises(ValueError):
            equienergetic_family(n)


def test_second_family():
    r = equienergetic_family_second(450)
    assert [m.canonical() for m in r.members] == ["450:2,3", "450:2,5"]
    assert r.common_energy == 1440
    # independent route to one member's energy
    assert sum(abs(v) for v in spectrum(IcgSpec(450, (2, 3))).values) == 1440
    with pytest.raises(ValueError):
        equienergetic_family_second(18)  # only one square prime
    with pytest.raises(ValueError):
        equienergetic_family_second(12)  # 12 = 0 mod 4
    with pytest.raises(ValueError):
        equienergetic_family_second(90)  # 2*3^2*5: only 3 qualifies


def test_second_family_another_instance():
    r = equienergetic_family_second(882)  # 2 * 3^2 * 7^2
    assert r.common_energy == 3024
    assert len(r.members) == 2


def test_second_spectral_value_anchors():
    assert second_spectral_value(30, 2, 3) == 8
    assert second_spectral_value(30, 3, 5) == 6
    assert second_spectral_value(105, 3, 5) == 18


def test_second_spectral_value_matches_brute_force():
    from icgraph.arith import prime_factors

    for n in (30, 42, 66, 70, 105):
        primes = prime_factors(n)
        for i, p in enumerate(primes):
            for q in primes[i + 1 :]:
                vals = spectrum(IcgSpec(n, (p, q))).values
                brute = max(abs(v) for v in vals[1:])
                assert second_spectral_value(n, p, q) == brute, (n, p, q)


def test_second_spectral_value_rejects():
    with pytest.raises(ValueError):
        second_spectral_value(12, 2, 3)  # not square-free
    with pytest.raises(ValueError):
        second_spectral_value(15, 3, 5)  # only two primes
    with pytest.raises(ValueError):
        second_spectral_value(30, 2, 7)  # 7 does not divide 30


def test_cospectral():
    a, b = IcgSpec(6, (1,)), IcgSpec(6, (1, 3))
    assert cospectral(a, a)
    assert not cospectral(a, b)
    assert not cospectral(IcgSpec(30, (2, 3)), IcgSpec(30, (2, 5)))
    with pytest.raises(ValueError):
        cospectral(IcgSpec(6, (1,)), IcgSpec(12, (1,)))


def test_so_check():
    r = so_conjecture_check(12)
    assert (r.n, r.sets, r.collisions) == (12, 31, ())
    assert r.verified
    assert so_conjecture_check(2).sets == 1
    assert so_conjecture_check(48).sets == 511
    with pytest.raises(BudgetExceeded):
        so_conjecture_check(48, budget=500)
    assert r.to_json_dict() == {"n": 12, "sets": 31, "collisions": []}


def test_min_energy_examples():
    r = min_energy_search(6)
    assert r.min_energy == 6 and (1, 3) in r.argmin_sets
    assert r.conjecture_value == 6 and r.conjecture_holds
    r = min_energy_search(4)
    assert r.min_energy == 4 and (1,) in r.argmin_sets and r.conjecture_holds
    r = min_energy_search(9)
    assert r.min_energy == 12 and r.conjecture_value == 12 and (1,) in r.argmin_sets


def test_min_energy_all_sets_mode():
    r = min_energy_search(6, connected_only=False)
    assert r.min_energy == 6
    assert r.argmin_sets == ((1, 3), (3,))  # the matching 3*K_2 ties K_{3,3}
    assert r.conjecture_value is None and r.conjecture_holds is None
    d = r.to_json_dict()
    assert "conjecture_value" not in d


def test_predicted_min_energy_set():
    assert predicted_min_energy_set(12) == (1, 3)
    assert predicted_min_energy_set(15) == (1, 5)
    assert predicted_min_energy_set(9) == (1,)
    assert predicted_min_energy_set(2) == (1,)


def test_bipartite_extremal_spectrum():
    assert bipartite_extremal_spectrum(2).values == (1, -1)
    assert bipartite_extremal_spectrum(6).values == (3, 0, 0, -3, 0, 0)
    s = bipartite_extremal_spectrum(12)
    assert s[0] == 6 and s[6] == -6 and sum(v != 0 for v in s.values) == 2
    with pytest.raises(ValueError):
        bipartite_extremal_spectrum(9)

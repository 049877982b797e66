"""Closed-form energies and their dispatch, checked against exact spectra."""

import pytest

from icgraph.closed_forms import (
    CSV_HEADER,
    Family,
    classify_case,
    cross_validate,
    energy_one_prime_power,
    energy_two_primes,
)
from icgraph.energy import energy
from icgraph.graphs import IcgSpec


def test_one_prime_power_anchors():
    assert energy_one_prime_power(6, 2, 1) == 8
    assert energy_one_prime_power(4, 2, 1) == 6
    assert energy_one_prime_power(9, 3, 1) == 16
    # gamma >= 2 cases (the totient argument is n/p^gamma here)
    assert energy_one_prime_power(8, 2, 2) == 14 == energy(IcgSpec(8, (1, 4)))
    assert energy_one_prime_power(18, 3, 2) == 34 == energy(IcgSpec(18, (1, 9)))
    assert energy_one_prime_power(16, 2, 3) == 30 == energy(IcgSpec(16, (1, 8)))
    assert energy_one_prime_power(24, 2, 3) == 56 == energy(IcgSpec(24, (1, 8)))


def test_two_primes_anchors():
    assert energy_two_primes(15, 3, 5) == 32
    assert energy_two_primes(18, 2, 3) == 36
    assert energy_two_primes(36, 2, 3) == 76
    # one branch instance each for the remaining cases
    assert energy_two_primes(75, 3, 5) == 224 == energy(IcgSpec(75, (3, 5)))
    assert energy_two_primes(45, 3, 5) == 128 == energy(IcgSpec(45, (3, 5)))
    assert energy_two_primes(12, 2, 3) == 20 == energy(IcgSpec(12, (2, 3)))
    assert energy_two_primes(30, 2, 3) == 64


def test_classify_case():
    case = classify_case(36, Family.TWO_PRIMES, (2, 3))
    assert case.case_tag == 5 and case.parameters == (36, 2, 3)
    assert classify_case(18, Family.TWO_PRIMES, (2, 3)).case_tag == 2
    assert classify_case(75, Family.TWO_PRIMES, (3, 5)).case_tag == 3
    assert classify_case(45, Family.TWO_PRIMES, (3, 5)).case_tag == 4
    assert classify_case(15, Family.TWO_PRIMES, (3, 5)).case_tag == 1
    assert classify_case(6, Family.ONE_AND_PRIME_POWER, (2, 1)).case_tag == 1
    assert classify_case(4, Family.ONE_AND_PRIME_POWER, (2, 1)).case_tag == 3
    assert classify_case(18, Family.ONE_AND_PRIME_POWER, (3, 2)).case_tag == 2


def test_one_prime_power_rejects():
    with pytest.raises(ValueError):
        energy_one_prime_power(6, 4, 1)  # not prime
    with pytest.raises(ValueError):
        energy_one_prime_power(6, 5, 1)  # does not divide
    with pytest.raises(ValueError):
        energy_one_prime_power(12, 2, 3)  # gamma beyond alpha
    with pytest.raises(ValueError):
        energy_one_prime_power(8, 2, 3)  # p^gamma = n is not proper
    with pytest.raises(ValueError):
        energy_one_prime_power(3, 3, 1)  # below the theorem's range


def test_two_primes_rejects():
    with pytest.raises(ValueError):
        energy_two_primes(12, 2, 2)
    with pytest.raises(ValueError):
        energy_two_primes(15, 5, 3)  # wrong order
    with pytest.raises(ValueError):
        energy_two_primes(15, 2, 5)  # 2 does not divide 15
    with pytest.raises(ValueError):
        energy_two_primes(12, 3, 4)  # 4 is not prime


def test_cross_validate_small():
    rows = cross_validate(120)
    assert rows and all(r.match for r in rows)
    # deterministic ordering by n
    assert [r.n for r in rows] == sorted(r.n for r in rows)
    assert rows[0].csv_fields()[0] == rows[0].n
    assert CSV_HEADER == ("n", "family", "parameters", "branch", "formula", "direct", "match")
    covered = {(r.family, r.branch) for r in rows}
    assert len(covered) == 8  # all three + five branches show up by n = 120


def test_pair_energy_choice_independence():
    # on square-free n every prime pair gives the same value 2^k phi(n)
    from icgraph.arith import euler_phi, prime_factors

    for n in (30, 105, 210):
        primes = prime_factors(n)
        k = len(primes)
        values = {
            energy_two_primes(n, p, q)
            for i, p in enumerate(primes)
            for q in primes[i + 1 :]
        }
        assert values == {2 ** k * euler_phi(n)}, n

"""Equienergetic families, cospectrality checks, and extremal-energy searches.

Highlights:

* two constructions of pairwise non-cospectral ICGs on n vertices sharing
  one energy value (the first needs two primes dividing n exactly once,
  the second needs n == 2 (mod 4) and two primes whose square divides n);
* an exact formula for the second-largest |eigenvalue| of ICG_n({p_i,p_j})
  on square-free n;
* exhaustive support for the conjecture that distinct divisor sets are
  never cospectral;
* exhaustive minimum-energy search with the known/conjectured extremal
  values attached (even n: minimum n, attained by the all-odd-divisors
  set, which is a complete bipartite K_{n/2,n/2}; odd n: conjectured
  minimum 2n(1 - 1/p) for the smallest prime p, attained by the divisors
  coprime to p).

All searches run over every nonempty divisor subset (within the sweep
budget) and are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import euler_phi, factorize, prime_factors
from .graphs import IcgSpec, Spectrum, spectrum
from .sweep import (
    DEFAULT_BUDGET,
    check_budget,
    iter_subset_spectra,
    mask_divisors,
    proper_divisors,
    subset_gcd_table,
)


@dataclass(frozen=True)
class FamilyReport:
    """A set of same-order, same-energy, pairwise non-cospectral graphs."""

    n: int
    members: tuple[IcgSpec, ...]
    common_energy: int
    pairwise_cospectral: tuple[tuple[bool, ...], ...]
    all_hyperenergetic: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "members": [m.canonical() for m in self.members],
            "common_energy": self.common_energy,
            "pairwise_cospectral": [list(row) for row in self.pairwise_cospectral],
            "all_hyperenergetic": self.all_hyperenergetic,
        }


def cospectral(a: IcgSpec, b: IcgSpec) -> bool:
    """True iff the two graphs have identical eigenvalue multisets."""
    if a.n != b.n:
        raise ValueError(f"cospectrality needs equal orders, got {a.n} and {b.n}")
    return spectrum(a).sorted_values() == spectrum(b).sorted_values()


def _family_report(n: int, members: list[IcgSpec]) -> FamilyReport:
    energies = [sum(abs(v) for v in spectrum(m).values) for m in members]
    if len(set(energies)) != 1:
        raise ArithmeticError(
            "family members disagree on energy: "
            + ", ".join(f"{m}={e}" for m, e in zip(members, energies))
        )
    sorted_specs = [spectrum(m).sorted_values() for m in members]
    matrix = tuple(
        tuple(sorted_specs[i] == sorted_specs[j] for j in range(len(members)))
        for i in range(len(members))
    )
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if matrix[i][j]:
                raise ArithmeticError(f"members {members[i]} and {members[j]} are cospectral")
    e = energies[0]
    return FamilyReport(n, tuple(members), e, matrix, all(e > 2 * m.n - 2 for m in members))


def equienergetic_family(n: int) -> FamilyReport:
    """X_n(1) together with ICG_n({p, q}) for every pair of primes p || n.

    All members share the energy 2^k phi(n) (k = number of distinct primes
    of n) yet no two are cospectral.  Needs at least two primes dividing n
    exactly once; the shared energy and the non-cospectrality are recomputed
    from the spectra on every call rather than assumed.
    """
    single = [p for p, a in factorize(n) if a == 1]
    if len(single) < 2:
        raise ValueError(
            f"n={n} has {len(single)} prime(s) dividing it exactly once; need at least 2"
        )
    members = [IcgSpec(n, (1,))]
    for i, p in enumerate(single):
        for q in single[i + 1 :]:
            members.append(IcgSpec(n, (p, q)))
    report = _family_report(n, members)
    expected = 2 ** len(prime_factors(n)) * euler_phi(n)
    if report.common_energy != expected:
        raise ArithmeticError(
            f"family energy {report.common_energy} != 2^k*phi(n) = {expected}"
        )
    return report


def equienergetic_family_second(n: int) -> FamilyReport:
    """ICG_n({2, q}) for every prime q with q^2 | n, on n == 2 (mod 4).

    All members share the energy 3 * 2^(k-1) * phi(n); needs at least two
    qualifying primes.  Everything is verified from the spectra per call.
    """
    if n % 4 != 2:
        raise ValueError(f"construction needs n == 2 (mod 4), got n={n}")
    squared = [p for p, a in factorize(n) if p != 2 and a >= 2]
    if len(squared) < 2:
        raise ValueError(
            f"n={n} has {len(squared)} odd prime(s) with square dividing it; need at least 2"
        )
    members = [IcgSpec(n, (2, q)) for q in squared]
    report = _family_report(n, members)
    expected = 3 * 2 ** (len(prime_factors(n)) - 1) * euler_phi(n)
    if report.common_energy != expected:
        raise ArithmeticError(
            f"family energy {report.common_energy} != 3*2^(k-1)*phi(n) = {expected}"
        )
    return report


def second_spectral_value(n: int, p_i: int, p_j: int) -> int:
    """Second-largest |eigenvalue| of ICG_n({p_i, p_j}) for square-free n.

    "Second largest" means the largest |lambda_t| over t = 1..n-1, i.e.
    ignoring position 0 only (the value may tie lambda_0).  The closed form

        phi(n / (p_i p_j)) * max{(p_i + p_j - 2)/phi(p_ij), p_i - 2, p_j - 2, 2}

    uses p_ij, the smallest prime dividing n/(p_i p_j); the max is taken in
    exact rational arithmetic.
    """
    fac = factorize(n)
    if any(a >= 2 for _, a in fac):
        raise ValueError(f"n={n} is not square-free")
    primes = tuple(p for p, _ in fac)
    if len(primes) < 3:
        raise ValueError(f"n={n} has {len(primes)} prime factors; need at least 3")
    if p_i == p_j or p_i not in primes or p_j not in primes:
        raise ValueError(f"{p_i}, {p_j} must be distinct primes dividing {n}")
    m = n // (p_i * p_j)
    if m == 1:
        raise ValueError("n/(p_i*p_j) = 1: no third prime to anchor the formula")
    p_ij = prime_factors(m)[0]
    best = max(
        Fraction(p_i + p_j - 2, euler_phi(p_ij)),
        Fraction(p_i - 2),
        Fraction(p_j - 2),
        Fraction(2),
    )
    value = euler_phi(m) * best
    if value.denominator != 1:
        raise ArithmeticError(f"formula value {value} is not an integer")
    return int(value)


@dataclass(frozen=True)
class SoReport:
    """Outcome of the cospectrality search over all divisor sets of one n."""

    n: int
    sets: int
    collisions: tuple[tuple[str, ...], ...]

    @property
    def verified(self) -> bool:
        return not self.collisions

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "sets": self.sets,
            "collisions": [list(group) for group in self.collisions],
        }


def so_conjecture_check(n: int, budget: int = DEFAULT_BUDGET) -> SoReport:
    """Group every divisor set of n by spectrum multiset; report any clash.

    The conjecture being probed says distinct divisor sets are never
    cospectral, so `collisions` is expected to stay empty.
    """
    sets = check_budget(n, budget)
    divs = proper_divisors(n)
    groups: dict[bytes, list[int]] = {}
    for mask, vec in iter_subset_spectra(n, budget):
        groups.setdefault(np.sort(vec).tobytes(), []).append(mask)
    collisions = []
    for key in sorted(groups):
        masks = groups[key]
        if len(masks) > 1:
            collisions.append(
                tuple(IcgSpec(n, mask_divisors(m, divs)).canonical() for m in sorted(masks))
            )
    return SoReport(n, sets, tuple(collisions))


@dataclass(frozen=True)
class ExtremalReport:
    """Minimum energy over the divisor sets of n, with the predicted value."""

    n: int
    connected_only: bool
    min_energy: int
    argmin_sets: tuple[tuple[int, ...], ...]
    conjecture_value: int | None
    conjecture_holds: bool | None

    def to_json_dict(self) -> dict:
        d = {
            "n": self.n,
            "connected_only": self.connected_only,
            "min_energy": self.min_energy,
            "argmin_sets": [list(ds) for ds in self.argmin_sets],
        }
        if self.conjecture_value is not None:
            d["conjecture_value"] = self.conjecture_value
            d["conjecture_holds"] = self.conjecture_holds
        return d


def predicted_min_energy_set(n: int) -> tuple[int, ...]:
    """The divisor set predicted to minimize energy among connected ICGs.

    Even n: all odd proper divisors (giving K_{n/2,n/2}).  Odd n: all proper
    divisors not divisible by the smallest prime factor.
    """
    if n % 2 == 0:
        return tuple(d for d in proper_divisors(n) if d % 2)
    p = prime_factors(n)[0]
    return tuple(d for d in proper_divisors(n) if d % p)


def min_energy_search(
    n: int, connected_only: bool = True, budget: int = DEFAULT_BUDGET
) -> ExtremalReport:
    """Exhaustive minimum of E(ICG_n(D)) over divisor sets D.

    With connected_only (the default) only sets with gcd(D) = 1 compete,
    and the report carries the predicted minimum for comparison: n itself
    for even n, 2n(1 - 1/p) for odd n with smallest prime p.
    """
    check_budget(n, budget)
    divs = proper_divisors(n)
    gcds = subset_gcd_table(divs) if connected_only else None
    best = None
    argmin: list[int] = []
    buf = np.empty(n, dtype=np.int64)
    for mask, vec in iter_subset_spectra(n, budget):
        if gcds is not None and gcds[mask] != 1:
            continue
        np.abs(vec, out=buf)
        e = int(buf.sum())
        if best is None or e < best:
            best, argmin = e, [mask]
        elif e == best:
            argmin.append(mask)
    sets = [mask_divisors(m, divs) for m in argmin]
    sets.sort(key=lambda ds: ",".join(str(d) for d in ds))
    value = holds = None
    if connected_only:
        if n % 2 == 0:
            value = n
        else:
            value = 2 * n - 2 * (n // prime_factors(n)[0])
        holds = best == value and predicted_min_energy_set(n) in sets
    return ExtremalReport(n, connected_only, best, tuple(sets), value, holds)


def bipartite_extremal_spectrum(n: int) -> Spectrum:
    """Spectrum of ICG_n(all odd proper divisors) for even n.

    The graph is the complete bipartite K_{n/2,n/2} (even vertices vs odd),
    so the spectrum must be n/2 at position 0, -n/2 at position n/2 and 0
    elsewhere; that shape is asserted before returning.
    """
    if n % 2:
        raise ValueError(f"even n required, got {n}")
    spec = IcgSpec(n, tuple(d for d in proper_divisors(n) if d % 2))
    s = spectrum(spec)
    expected = tuple(
        n // 2 if j == 0 else -(n // 2) if j == n // 2 else 0 for j in range(n)
    )
    if s.values != expected:
        raise ArithmeticError(f"unexpected spectrum for {spec}: {s.values}")
    return s

"""Closed-form energies for the two solved divisor-set shapes.

Two families of ICGs have fully worked-out energy formulas, with the branch
depending on how the chosen primes sit inside the factorization of n
(throughout, k is the number of distinct primes of n and p^alpha_p || n):

* X_n(1, p^gamma), the divisor set {1, p^gamma}:
    branch 1  p || n:                 2^(k-1) * (phi(n) + phi(n/p))
    branch 2  gamma = alpha_p >= 2:   2^(k-1) * (2 phi(n) + (p^gamma - 2p + 2) phi(n/p^gamma))
    branch 3  gamma < alpha_p:        2^k     * (phi(n) + (p^gamma - p + 1) phi(n/p^gamma))

  (In branches 2 and 3 the totient argument really is n/p^gamma; the
  gamma = 1 special case is where the familiar phi(n/p) form comes from.
  E(ICG_8({1,4})) = 14 and E(ICG_18({1,9})) = 34 pin this down.)

* X_n(p, q), the divisor set {p, q} with primes p < q:
    branch 1  p || n, q || n:         2^k * phi(n)
    branch 2  p = 2 || n, q^2 | n:    3 * 2^(k-1) * phi(n)
    branch 3  p || n, q^2 | n, p odd: 2^(k-1) * (2 phi(n) + phi(n/q) phi(q))
    branch 4  p^2 | n, q || n:        2^(k-1) * (2 phi(n) + phi(n/p) phi(p))
    branch 5  p^2 | n, q^2 | n:       2^(k-1) * (2 phi(n) + phi(n/p) phi(p) + phi(n/q) phi(q))

`cross_validate` re-derives every admissible instance from the exact
spectrum and confirms the formulas match, which is how the branch table
above was itself vetted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import euler_phi, factorize, is_prime, prime_factors
from .energy import energy
from .graphs import IcgSpec


class Family(enum.Enum):
    ONE_AND_PRIME_POWER = "one-and-prime-power"
    TWO_PRIMES = "two-primes"


@dataclass(frozen=True)
class ClosedFormCase:
    family: Family
    case_tag: int
    parameters: tuple[int, ...]


def _multiplicity(n: int, p: int) -> int:
    for prime, alpha in factorize(n):
        if prime == p:
            return alpha
    return 0


def _check_one_prime_power(n: int, p: int, gamma: int) -> int:
    """Validate (n, p, gamma) and return alpha_p."""
    if n < 4:
        raise ValueError(f"closed forms need n >= 4, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    alpha = _multiplicity(n, p)
    if alpha == 0:
        raise ValueError(f"{p} does not divide {n}")
    if not 1 <= gamma <= alpha:
        raise ValueError(f"gamma={gamma} outside 1..{alpha} for p={p}, n={n}")
    if p ** gamma == n:
        raise ValueError(f"p^gamma = {n} is not a proper divisor of n")
    return alpha


def classify_case(n: int, family: Family, parameters: tuple[int, ...]) -> ClosedFormCase:
    """Resolve which theorem branch applies; exactly one always does."""
    if family is Family.ONE_AND_PRIME_POWER:
        p, gamma = parameters
        alpha = _check_one_prime_power(n, p, gamma)
        if alpha == 1:
            tag = 1
        elif gamma == alpha:
            tag = 2
        else:
            tag = 3
        return ClosedFormCase(family, tag, (n, p, gamma))
    if family is Family.TWO_PRIMES:
        p, q = parameters
        _check_two_primes(n, p, q)
        ap, aq = _multiplicity(n, p), _multiplicity(n, q)
        if ap == 1 and aq == 1:
            tag = 1
        elif ap == 1 and p == 2:
            tag = 2
        elif ap == 1:
            tag = 3
        elif aq == 1:
            tag = 4
        else:
            tag = 5
        return ClosedFormCase(family, tag, (n, p, q))
    raise ValueError(f"unknown family {family!r}")


def energy_one_prime_power(n: int, p: int, gamma: int) -> int:
    """E(ICG_n({1, p^gamma})) by formula, without touching the spectrum."""
    case = classify_case(n, Family.ONE_AND_PRIME_POWER, (p, gamma))
    k = len(prime_factors(n))
    phi_n = euler_phi(n)
    if case.case_tag == 1:
        return 2 ** (k - 1) * (phi_n + euler_phi(n // p))
    phi_npg = euler_phi(n // p ** gamma)
    if case.case_tag == 2:
        return 2 ** (k - 1) * (2 * phi_n + (p ** gamma - 2 * p + 2) * phi_npg)
    return 2 ** k * (phi_n + (p ** gamma - p + 1) * phi_npg)


def _check_two_primes(n: int, p: int, q: int) -> None:
    if n < 4:
        raise ValueError(f"closed forms need n >= 4, got {n}")
    if p == q:
        raise ValueError("p and q must be distinct")
    if p > q:
        raise ValueError(f"primes must be given in order p < q, got {p} > {q}")
    for x in (p, q):
        if not is_prime(x):
            raise ValueError(f"{x} is not prime")
        if n % x:
            raise ValueError(f"{x} does not divide {n}")
        if x == n:
            raise ValueError(f"{x} is not a proper divisor of n")


def energy_two_primes(n: int, p: int, q: int) -> int:
    """E(ICG_n({p, q})) by formula, for primes p < q dividing n."""
    case = classify_case(n, Family.TWO_PRIMES, (p, q))
    k = len(prime_factors(n))
    phi_n = euler_phi(n)
    if case.case_tag == 1:
        return 2 ** k * phi_n
    if case.case_tag == 2:
        return 3 * 2 ** (k - 1) * phi_n
    if case.case_tag == 3:
        return 2 ** (k - 1) * (2 * phi_n + euler_phi(n // q) * euler_phi(q))
    if case.case_tag == 4:
        return 2 ** (k - 1) * (2 * phi_n + euler_phi(n // p) * euler_phi(p))
    return 2 ** (k - 1) * (
        2 * phi_n + euler_phi(n // p) * euler_phi(p) + euler_phi(n // q) * euler_phi(q)
    )


@dataclass(frozen=True)
class CrossValidationRow:
    n: int
    family: Family
    parameters: tuple[int, ...]
    branch: int
    formula: int
    direct: int

    @property
    def match(self) -> bool:
        return self.formula == self.direct

    def csv_fields(self) -> tuple:
        if self.family is Family.ONE_AND_PRIME_POWER:
            params = f"p={self.parameters[0]};gamma={self.parameters[1]}"
        else:
            params = f"p={self.parameters[0]};q={self.parameters[1]}"
        return (
            self.n,
            self.family.value,
            params,
            self.branch,
            self.formula,
            self.direct,
            self.match,
        )


CSV_HEADER = ("n", "family", "parameters", "branch", "formula", "direct", "match")


def iter_admissible(n: int):
    """All (family, parameters) pairs the theorems cover for this n."""
    primes = prime_factors(n)
    for p, alpha in factorize(n):
        for gamma in range(1, alpha + 1):
            if p ** gamma != n:
                yield Family.ONE_AND_PRIME_POWER, (p, gamma)
    for i, p in enumerate(primes):
        for q in primes[i + 1 :]:
            yield Family.TWO_PRIMES, (p, q)


def cross_validate(n_max: int) -> list[CrossValidationRow]:
    """Formula vs direct spectral energy for every admissible case, n <= n_max.

    Deterministic row order: ascending n, prime-power cases before pairs,
    parameters ascending within each family.
    """
    if n_max < 4:
        raise ValueError(f"need n_max >= 4, got {n_max}")
    rows = []
    for n in range(4, n_max + 1):
        for family, params in iter_admissible(n):
            case = classify_case(n, family, params)
            if family is Family.ONE_AND_PRIME_POWER:
                p, gamma = params
                formula = energy_one_prime_power(n, p, gamma)
                direct = energy(IcgSpec(n, (1, p ** gamma)))
            else:
                p, q = params
                formula = energy_two_primes(n, p, q)
                direct = energy(IcgSpec(n, (p, q)))
            rows.append(CrossValidationRow(n, family, params, case.case_tag, formula, direct))
    return rows

"""Integral circulant graphs and their exact integer spectra.

ICG_n(D) is the graph on vertices 0..n-1 where a ~ b iff gcd(a - b, n) lies
in D, a set of proper divisors of n.  Its connection (symbol) set is the
union of the gcd classes G_n(d) = {k : gcd(k, n) = d}, and its eigenvalues
are integers given by Ramanujan sums:

    lambda_k = sum_{d in D} c(k, n/d),   k = 0..n-1.

The spectrum is kept in index order because positional identities matter
(lambda_0 is the degree, lambda_{n/2} drives the mod-4 energy rule); sorted
views are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .arith import euler_phi, ramanujan

ADJACENCY_MAX_N = 20000


@dataclass(frozen=True)
class IcgSpec:
    """A validated pair (n, divisors) naming the graph ICG_n(D).

    The divisor tuple is canonicalized to ascending order; two specs are
    equal exactly when their (n, divisors) pairs are.
    """

    n: int
    divisors: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"n must be an integer >= 2, got {n!r}")
        ds = tuple(self.divisors)
        if not ds:
            raise ValueError("divisor set must be nonempty")
        if len(set(ds)) != len(ds):
            raise ValueError(f"duplicate divisors in {ds}")
        for d in ds:
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"divisor {d!r} must be a positive integer")
            if d >= n:
                raise ValueError(f"divisor {d} must be a proper divisor (< {n})")
            if n % d != 0:
                raise ValueError(f"{d} does not divide {n}")
        object.__setattr__(self, "divisors", tuple(sorted(ds)))

    def canonical(self) -> str:
        """Canonical text form "n:d1,d2,...,dk" with ascending divisors."""
        return f"{self.n}:{','.join(str(d) for d in self.divisors)}"

    def __str__(self) -> str:
        return self.canonical()


def validate(n: int, divisor_set) -> IcgSpec:
    """Validate (n, D) and return the canonical IcgSpec."""
    return IcgSpec(n, tuple(divisor_set))


def parse_spec(text: str) -> IcgSpec:
    """Parse the canonical form "n:d1,d2,...,dk" (strictly ascending divisors)."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"malformed spec {text!r}: expected 'n:d1,d2,...'")
    try:
        n = int(head)
        ds = tuple(int(part) for part in tail.split(","))
    except ValueError:
        raise ValueError(f"malformed spec {text!r}: non-integer field") from None
    if any(a >= b for a, b in zip(ds, ds[1:])):
        raise ValueError(f"malformed spec {text!r}: divisors must be strictly ascending")
    return IcgSpec(n, ds)


@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalues of an ICG in index order (lambda_0 .. lambda_{n-1})."""

    n: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def sorted_values(self) -> tuple[int, ...]:
        """Eigenvalues as a sorted tuple; the multiset key for cospectrality."""
        return tuple(sorted(self.values))


@lru_cache(maxsize=None)
def _divisor_eigenrow(n: int, d: int) -> np.ndarray:
    """c(k, n/d) for k = 0..n-1 as an int64 row (periodic with period n/d)."""
    m = n // d
    period = np.array([ramanujan(k, m) for k in range(m)], dtype=np.int64)
    row = np.tile(period, d)
    row.setflags(write=False)
    return row


def spectrum(spec: IcgSpec) -> Spectrum:
    """Exact integer spectrum via the Ramanujan-sum formula."""
    acc = np.zeros(spec.n, dtype=np.int64)
    for d in spec.divisors:
        acc += _divisor_eigenrow(spec.n, d)
    return Spectrum(spec.n, tuple(int(v) for v in acc))


def symbol_set(spec: IcgSpec) -> set[int]:
    """Connection set S = {k in [1, n-1] : gcd(k, n) in D}."""
    dset = set(spec.divisors)
    return {k for k in range(1, spec.n) if gcd(k, spec.n) in dset}


def degree(spec: IcgSpec) -> int:
    """Common vertex degree |S| = sum of phi(n/d) over d in D (equals lambda_0)."""
    return sum(euler_phi(spec.n // d) for d in spec.divisors)


def adjacency(spec: IcgSpec) -> np.ndarray:
    """Dense symmetric 0/1 adjacency matrix; guarded to n <= 20000."""
    n = spec.n
    if n > ADJACENCY_MAX_N:
        raise ValueError(f"adjacency matrix limited to n <= {ADJACENCY_MAX_N}, got {n}")
    indicator = np.zeros(n, dtype=np.uint8)
    indicator[sorted(symbol_set(spec))] = 1
    A = np.empty((n, n), dtype=np.uint8)
    for i in range(n):
        A[i] = np.roll(indicator, i)
    return A


def connectivity(spec: IcgSpec) -> int:
    """Number of connected components, which equals gcd of the divisor set."""
    g = 0
    for d in spec.divisors:
        g = gcd(g, d)
    return g


def component_decomposition(spec: IcgSpec) -> tuple[int, IcgSpec]:
    """Split ICG_n(D) into d = gcd(D) isomorphic copies of ICG_{n/d}(D/d).

    Returns (d, quotient spec); for a connected graph this is (1, spec).
    """
    d = connectivity(spec)
    if d == 1:
        return 1, spec
    if spec.n // d < 2:
        raise ValueError(f"degenerate quotient: n/d = {spec.n // d}")
    quotient = IcgSpec(spec.n // d, tuple(x // d for x in spec.divisors))
    return d, quotient

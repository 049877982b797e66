"""Exhaustive enumeration of divisor subsets with incremental spectra.

Desk-scale checks (mod-4 sweeps, cospectrality searches, minimum-energy
scans) all walk every nonempty subset of the proper divisors of n.  Doing
that naively costs |D| spectrum builds per subset; here we exploit the fact
that spectra are additive over divisors.  Walking masks in increasing order,
mask m differs from m-1 by a suffix of toggled bits (binary counter), so the
running spectrum vector is maintained with about two row updates per subset
on average.

Everything is deterministic: masks ascend 1, 2, 3, ..., and bit i of a mask
refers to the i-th smallest proper divisor.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .arith import divisors
from .graphs import _divisor_eigenrow

DEFAULT_BUDGET = 1 << 20


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive sweep would enumerate more subsets than allowed."""


def proper_divisors(n: int) -> tuple[int, ...]:
    """Divisors d of n with 1 <= d < n, ascending."""
    return divisors(n)[:-1]


def subset_count(n: int) -> int:
    """Number of nonempty divisor subsets, i.e. 2^tau'(n) - 1."""
    return (1 << len(proper_divisors(n))) - 1


def check_budget(n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Return subset_count(n), raising BudgetExceeded if it is over budget."""
    count = subset_count(n)
    if count > budget:
        raise BudgetExceeded(
            f"n={n} has {count} divisor subsets, over the budget of {budget}"
        )
    return count


def mask_divisors(mask: int, divs: tuple[int, ...]) -> tuple[int, ...]:
    """Decode a bitmask into the divisor subset it names."""
    return tuple(d for i, d in enumerate(divs) if mask >> i & 1)


def iter_subset_spectra(n: int, budget: int = DEFAULT_BUDGET):
    """Yield (mask, spectrum_vector) for every nonempty divisor subset of n.

    The vector is an int64 array of length n holding the index-ordered
    spectrum of ICG_n(D) for D = mask_divisors(mask, proper_divisors(n)).
    It is reused between yields; callers must copy it to keep it.
    """
    check_budget(n, budget)
    divs = proper_divisors(n)
    rows = [_divisor_eigenrow(n, d) for d in divs]
    acc = np.zeros(n, dtype=np.int64)
    prev = 0
    for mask in range(1, (1 << len(divs))):
        flipped = prev ^ mask
        i = 0
        while flipped:
            if flipped & 1:
                if mask >> i & 1:
                    acc += rows[i]
                else:
                    acc -= rows[i]
            flipped >>= 1
            i += 1
        prev = mask
        yield mask, acc


def subset_gcd_table(divs: tuple[int, ...]) -> list[int]:
    """gcds of all divisor subsets, indexed by mask (entry 0 is 0).

    table[m] = gcd of the divisors selected by m; a subset is connected as
    an ICG divisor set exactly when its entry is 1.
    """
    table = [0] * (1 << len(divs))
    for mask in range(1, len(table)):
        low = mask & -mask
        table[mask] = gcd(table[mask ^ low], divs[low.bit_length() - 1])
    return table

"""Band Cayley continuant polynomials and permutation cycle statistics.

The polynomial family V(r, n) generalizes the classical Cayley continuants:
V(r, n) is the determinant of an n x n (1, r-1) band matrix (see bandmatrix),
satisfies an r-term recurrence, and equals the joint distribution polynomial
of r-regular and r-singular cycle counts over the symmetric group S_n.  This
module computes the family by the recurrence and, independently, by exhaustive
permutation enumeration; the two must agree, which is what the verification
harness checks.

A cycle of a permutation is r-regular when its length is not divisible by r
and r-singular when it is.  Permutations are written in one-line notation,
1-based: ``(2, 3, 1)`` maps 1 to 2, 2 to 3, 3 to 1.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from typing import NamedTuple

from .algebra import ONE, X, Y, ZERO, BiPoly

# Guard on n! enumeration; 10! = 3,628,800 keeps a full scan in the seconds.
BRUTE_FORCE_LIMIT = 10

# One-line notation, 1-based images.
Permutation = tuple[int, ...]


class CycleStats(NamedTuple):
    """Counts of r-regular and r-singular cycles of one permutation."""

    regular: int
    singular: int


def _require_band_parameter(r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"band parameter r must be an integer >= 2, got {r!r}")


def _require_enumerable(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute-force enumeration is limited to n <= {BRUTE_FORCE_LIMIT}, got {n}")


def rising_factorial(n: int) -> BiPoly:
    """x(x+1)...(x+n-1) as a polynomial in x; the empty product is 1."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    product = ONE
    for k in range(n):
        product = product * (X + k)
    return product


def falling_factorial(m: int, k: int) -> int:
    """m(m-1)...(m-k+1); the empty product is 1, and k > m gives 0."""
    if not isinstance(m, int) or m < 0 or not isinstance(k, int) or k < 0:
        raise ValueError("falling_factorial needs nonnegative integers")
    return math.prod(range(m, m - k, -1))


def band_continuants(r: int, n_max: int) -> list[BiPoly]:
    """The polynomials V(r, 0) .. V(r, n_max), computed bottom-up.

    For n < r the value is the rising factorial x^(n).  From n = r on:

        V(r, n) = x * sum_{i=1..r-1} (n-1)_{i-1} V(r, n-i)
                  + (y + n - r) (n-1)_{r-1} V(r, n-r)
    """
    _require_band_parameter(r)
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError(f"n_max must be a nonnegative integer, got {n_max!r}")
    table = [rising_factorial(n) for n in range(min(n_max, r - 1) + 1)]
    for n in range(r, n_max + 1):
        head = ZERO
        for i in range(1, r):
            head = head + falling_factorial(n - 1, i - 1) * table[n - i]
        tail = (Y + (n - r)) * falling_factorial(n - 1, r - 1) * table[n - r]
        table.append(X * head + tail)
    return table


def band_continuant(r: int, n: int) -> BiPoly:
    """V(r, n) by the r-term recurrence."""
    return band_continuants(r, n)[n]


def cayley_continuant(n: int) -> BiPoly:
    """The classical tridiagonal continuant U_n.

    U_0 = 1, U_1 = x, and U_n = x U_{n-1} - (n-1)(y-n+2) U_{n-2}.
    Substituting y -> -y turns U_n into V(2, n).
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if n == 0:
        return ONE
    previous, current = ONE, X
    for k in range(2, n + 1):
        previous, current = current, X * current - (k - 1) * (Y + (2 - k)) * previous
    return current


def as_permutation(images: Sequence[int]) -> Permutation:
    """Validate one-line notation (a bijection on 1..n) and return a tuple."""
    perm = tuple(images)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {images!r}")
    return perm


def _cycle_lengths(perm: Permutation) -> list[int]:
    # perm is validated, 1-based.
    n = len(perm)
    seen = bytearray(n)
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = perm[j] - 1
            length += 1
        lengths.append(length)
    return lengths


def cycle_type(images: Sequence[int]) -> tuple[int, ...]:
    """Multiset of cycle lengths, as a sorted tuple; the lengths sum to n."""
    return tuple(sorted(_cycle_lengths(as_permutation(images))))


def cycle_stats(images: Sequence[int], r: int) -> CycleStats:
    """Count the r-regular and r-singular cycles of a permutation."""
    _require_band_parameter(r)
    lengths = _cycle_lengths(as_permutation(images))
    singular = sum(1 for length in lengths if length % r == 0)
    return CycleStats(regular=len(lengths) - singular, singular=singular)


def cycle_distribution_bruteforce(r: int, n: int) -> BiPoly:
    """Sum of x^(#r-regular cycles) y^(#r-singular cycles) over all of S_n.

    A full scan of all n! permutations in lexicographic one-line order; this
    is the combinatorial oracle the other three computations are checked
    against.  The empty permutation contributes 1, so n = 0 gives 1.
    """
    _require_band_parameter(r)
    _require_enumerable(n)
    counts: dict[tuple[int, int], int] = {}
    for perm in itertools.permutations(range(n)):
        seen = bytearray(n)
        regular = 0
        singular = 0
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
                length += 1
            if length % r:
                regular += 1
            else:
                singular += 1
        key = (regular, singular)
        counts[key] = counts.get(key, 0) + 1
    return BiPoly(counts)


def count_regular_permutations(r: int, n: int) -> int:
    """Number of permutations of [n] whose cycles are all r-regular.

    Computed as V(r, n) evaluated at x = 1, y = 0, which scales to any n.
    """
    value = band_continuant(r, n).evaluate(1, 0)
    return int(value)


def count_singular_permutations(r: int, n: int) -> int:
    """Number of permutations of [n] whose cycle lengths are all divisible
    by r; zero unless r divides n (or n = 0).

    Computed as V(r, n) evaluated at x = 0, y = 1.
    """
    value = band_continuant(r, n).evaluate(0, 1)
    return int(value)


def count_regular_permutations_bruteforce(r: int, n: int) -> int:
    """Direct scan counterpart of count_regular_permutations (n <= 10)."""
    _require_band_parameter(r)
    _require_enumerable(n)
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = bytearray(n)
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
                length += 1
            if length % r == 0:
                break
        else:
            total += 1
    return total


def count_singular_permutations_bruteforce(r: int, n: int) -> int:
    """Direct scan counterpart of count_singular_permutations (n <= 10)."""
    _require_band_parameter(r)
    _require_enumerable(n)
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = bytearray(n)
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
                length += 1
            if length % r:
                break
        else:
            total += 1
    return total

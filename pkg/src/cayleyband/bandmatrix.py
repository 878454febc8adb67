"""The (1, r-1) band matrix whose determinant is the band continuant V(r, n),
with two independent exact determinant algorithms.

Writing entries 1-indexed, the matrix has

* first superdiagonal -1, -2, ..., -(n-1),
* the main diagonal and the r-2 subdiagonals below it all equal to x,
* the (r-1)-st subdiagonal equal to y, y+1, ..., y+n-r (absent when n < r),
* zero everywhere else.

The subdiagonal runs upward (entry (i, i-r+1) is y + i - r): that is the only
sign convention consistent with both the r-term recurrence and the cycle
statistics of S_n, which the regression tests pin down at r = 3, n = 4.

``det_leibniz`` is the small-n oracle (signed permutation expansion);
``det_bareiss`` is the scalable fraction-free elimination whose pivot
divisions are exact in the polynomial ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import ONE, X, Y, ZERO, BiPoly

# n! products stop being "instant" beyond 8; Bareiss covers larger n.
LEIBNIZ_LIMIT = 8


class ZeroPivotError(RuntimeError):
    """A diagonal pivot vanished during elimination.

    The canonical band matrices cannot trigger this (their leading principal
    minors are nonzero polynomials), so it indicates a corrupted matrix or an
    implementation bug.
    """


@dataclass(frozen=True)
class BandMatrix:
    """Immutable n x n matrix of polynomials with band parameter r."""

    r: int
    n: int
    entries: tuple[tuple[BiPoly, ...], ...]


def band_matrix(r: int, n: int) -> BandMatrix:
    """Build the canonical band matrix for parameters r >= 2 and n >= 0.

    For n < r the y-subdiagonal rule never fires and the result is the
    truncated all-x lower triangle whose determinant is the rising
    factorial x^(n).
    """
    return _band_matrix_with_step(r, n, 1)


def _band_matrix_with_step(r: int, n: int, step: int) -> BandMatrix:
    # step = +1 is the canonical convention; -1 builds the decreasing
    # variant (y, y-1, ...) that regression tests prove wrong.
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"band parameter r must be an integer >= 2, got {r!r}")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"matrix dimension n must be a nonnegative integer, got {n!r}")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j == i + 1:
                entry = BiPoly.constant(-i)
            elif 0 <= i - j <= r - 2:
                entry = X
            elif i - j == r - 1:
                entry = Y + step * (i - r)
            else:
                entry = ZERO
            row.append(entry)
        rows.append(tuple(row))
    return BandMatrix(r=r, n=n, entries=tuple(rows))


def _permutation_sign(perm: tuple[int, ...]) -> int:
    inversions = 0
    for a in range(len(perm)):
        pa = perm[a]
        for b in range(a + 1, len(perm)):
            if pa > perm[b]:
                inversions += 1
    return -1 if inversions & 1 else 1


def det_leibniz(matrix: BandMatrix) -> BiPoly:
    """Determinant by signed permutation expansion (oracle, n <= 8).

    Permutations touching a structural zero are skipped before any
    polynomial work happens.  The empty matrix has determinant 1.
    """
    n = matrix.n
    if n > LEIBNIZ_LIMIT:
        raise ValueError(f"permutation expansion is limited to n <= {LEIBNIZ_LIMIT}, got {n}")
    if n == 0:
        return ONE
    entries = matrix.entries
    total = ZERO
    for perm in itertools.permutations(range(n)):
        for i, j in enumerate(perm):
            if entries[i][j].is_zero:
                break
        else:
            term = ONE
            for i, j in enumerate(perm):
                term = term * entries[i][j]
            if _permutation_sign(perm) < 0:
                term = -term
            total = total + term
    return total


def det_bareiss(matrix: BandMatrix) -> BiPoly:
    """Determinant by fraction-free Bareiss elimination.

    Each update divides by the previous pivot; by Sylvester's identity the
    division is exact in the polynomial ring, which exact_div enforces.  No
    pivoting is performed: the diagonal of the canonical matrices is built
    from x and stays nonzero, and a vanishing pivot raises ZeroPivotError.
    """
    n = matrix.n
    if n == 0:
        return ONE
    grid = [list(row) for row in matrix.entries]
    previous_pivot = ONE
    for k in range(n - 1):
        pivot = grid[k][k]
        if pivot.is_zero:
            raise ZeroPivotError(f"zero pivot at elimination step {k + 1}")
        row_k = grid[k]
        for i in range(k + 1, n):
            row_i = grid[i]
            lower = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lower * row_k[j]).exact_div(previous_pivot)
        previous_pivot = pivot
    return grid[n - 1][n - 1]


def render_matrix(matrix: BandMatrix) -> str:
    """Tab-separated text rendering, one row per line, zeros shown as '.'."""
    return "\n".join(
        "\t".join("." if entry.is_zero else str(entry) for entry in row)
        for row in matrix.entries
    )

"""Cross-verification of the four independent computation routes.

Each check family sweeps a parameter range and reports a single result:
pass, or the first failing parameter point with a human-readable detail
line.  The families are deliberately redundant.  The recurrence, the two
determinant algorithms, the permutation enumeration, and the generating
function share no code beyond the polynomial arithmetic, so agreement
across all of them is strong evidence that each one is right.

``run_verification`` also carries two undocumented fault-injection knobs
used by the test suite: ``corrupt`` bumps one matrix entry by 1, and
``subdiagonal_step=-1`` builds every matrix with the decreasing variant of
the y-subdiagonal.  Both must make the determinant checks fail; if they do
not, the checks themselves are broken.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .algebra import ONE, X, Y
from .bandmatrix import (
    LEIBNIZ_LIMIT,
    BandMatrix,
    _band_matrix_with_step,
    det_bareiss,
    det_leibniz,
)
from .continuants import (
    BRUTE_FORCE_LIMIT,
    band_continuants,
    cayley_continuant,
    cycle_distribution_bruteforce,
    rising_factorial,
)
from .egf import egf_coefficients, factorization_check, ode_residual


@dataclass(frozen=True)
class CheckResult:
    name: str
    params: str
    status: str  # "pass" or "fail"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "elapsed_ms": round(self.elapsed_ms),
            "checks": [
                {
                    "name": check.name,
                    "params": check.params,
                    "status": check.status,
                    "detail": check.detail,
                }
                for check in self.checks
            ],
        }


def _corrupted(matrix: BandMatrix, i: int, j: int) -> BandMatrix:
    rows = [list(row) for row in matrix.entries]
    rows[i - 1][j - 1] = rows[i - 1][j - 1] + ONE
    return BandMatrix(r=matrix.r, n=matrix.n, entries=tuple(tuple(row) for row in rows))


def run_verification(
    r_max: int = 5,
    n_max: int = 9,
    order: int = 30,
    corrupt: tuple[int, int, int, int] | None = None,
    subdiagonal_step: int = 1,
) -> VerifyReport:
    """Run every check family and collect the results.

    r_max bounds the band parameter sweep (inclusive, from 2), n_max the
    matrix dimension sweep, and order the series truncation used for the
    ODE residual.  corrupt=(r, n, i, j) adds 1 to the (i, j) entry of the
    matrix built for that single parameter point, 1-indexed.
    """
    if not isinstance(r_max, int) or r_max < 2:
        raise ValueError(f"r_max must be an integer >= 2, got {r_max!r}")
    if not isinstance(n_max, int) or n_max < 0:
        raise ValueError(f"n_max must be a nonnegative integer, got {n_max!r}")
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be an integer >= 1, got {order!r}")
    if subdiagonal_step not in (1, -1):
        raise ValueError(f"subdiagonal_step must be 1 or -1, got {subdiagonal_step!r}")

    def make_matrix(r: int, n: int) -> BandMatrix:
        matrix = _band_matrix_with_step(r, n, subdiagonal_step)
        if corrupt is not None:
            target_r, target_n, i, j = corrupt
            if (r, n) == (target_r, target_n) and 1 <= i <= n and 1 <= j <= n:
                matrix = _corrupted(matrix, i, j)
        return matrix

    started = time.perf_counter()
    tables = {r: band_continuants(r, n_max) for r in range(2, r_max + 1)}
    checks = (
        _check_base_cases(r_max, n_max, tables, make_matrix),
        _check_four_way(r_max, n_max, tables, make_matrix),
        _check_factorial_specialization(r_max, n_max, tables),
        _check_stirling_specialization(r_max, n_max, tables),
        _check_cayley_sign_relation(n_max, tables),
        _check_ode_residual(r_max, order),
        _check_factorization(r_max, n_max),
    )
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return VerifyReport(checks=checks, elapsed_ms=elapsed_ms)


def _check_base_cases(r_max, n_max, tables, make_matrix) -> CheckResult:
    """Below the bandwidth the polynomial must be the rising factorial."""
    name = "base_cases"
    for r in range(2, r_max + 1):
        for n in range(min(r - 1, n_max) + 1):
            expected = rising_factorial(n)
            if tables[r][n] != expected:
                return CheckResult(
                    name, f"r={r} n={n}", "fail",
                    f"recurrence gives {tables[r][n]}, rising factorial is {expected}",
                )
            determinant = det_bareiss(make_matrix(r, n))
            if determinant != expected:
                return CheckResult(
                    name, f"r={r} n={n}", "fail",
                    f"determinant gives {determinant}, rising factorial is {expected}",
                )
    return CheckResult(name, f"r=2..{r_max} n<r", "pass")


def _check_four_way(r_max, n_max, tables, make_matrix) -> CheckResult:
    """All four computation routes must produce the same polynomial."""
    name = "four_way"
    for r in range(2, r_max + 1):
        egf_table = egf_coefficients(r, n_max)
        for n in range(n_max + 1):
            expected = tables[r][n]
            matrix = make_matrix(r, n)
            candidates = [
                ("bareiss determinant", det_bareiss(matrix)),
                ("egf coefficient", egf_table[n]),
            ]
            if n <= LEIBNIZ_LIMIT:
                candidates.append(("leibniz determinant", det_leibniz(matrix)))
            if n <= BRUTE_FORCE_LIMIT:
                candidates.append(("cycle enumeration", cycle_distribution_bruteforce(r, n)))
            for label, value in candidates:
                if value != expected:
                    return CheckResult(
                        name, f"r={r} n={n}", "fail",
                        f"{label} gives {value}, recurrence gives {expected}",
                    )
    return CheckResult(name, f"r=2..{r_max} n=0..{n_max}", "pass")


def _check_factorial_specialization(r_max, n_max, tables) -> CheckResult:
    """At x=1, y=1 every permutation counts once, so the value is n!."""
    name = "factorial_specialization"
    for r in range(2, r_max + 1):
        for n in range(n_max + 1):
            value = tables[r][n].evaluate(1, 1)
            if value != math.factorial(n):
                return CheckResult(
                    name, f"r={r} n={n}", "fail",
                    f"value at x=1 y=1 is {value}, expected {math.factorial(n)}",
                )
    return CheckResult(name, f"r=2..{r_max} n=0..{n_max} at x=1 y=1", "pass")


def _check_stirling_specialization(r_max, n_max, tables) -> CheckResult:
    """Setting y=x merges the two statistics into the total cycle count,
    whose distribution over S_n is the rising factorial."""
    name = "stirling_specialization"
    expected = [rising_factorial(n) for n in range(n_max + 1)]
    for r in range(2, r_max + 1):
        for n in range(n_max + 1):
            merged = tables[r][n].substitute(X, X)
            if merged != expected[n]:
                return CheckResult(
                    name, f"r={r} n={n}", "fail",
                    f"value at y=x is {merged}, expected {expected[n]}",
                )
    return CheckResult(name, f"r=2..{r_max} n=0..{n_max} at y=x", "pass")


def _check_cayley_sign_relation(n_max, tables) -> CheckResult:
    """The classical three-term continuant matches r=2 after y -> -y."""
    name = "cayley_sign_relation"
    for n in range(n_max + 1):
        flipped = cayley_continuant(n).substitute(X, -Y)
        if flipped != tables[2][n]:
            return CheckResult(
                name, f"n={n}", "fail",
                f"classical continuant at -y is {flipped}, band polynomial is {tables[2][n]}",
            )
    return CheckResult(name, f"n=0..{n_max}", "pass")


def _check_ode_residual(r_max, order) -> CheckResult:
    name = "ode_residual"
    for r in range(2, r_max + 1):
        residual = ode_residual(r, order)
        if not residual.is_zero:
            first_bad = next(k for k in range(residual.order + 1) if not residual.coefficient(k).is_zero)
            return CheckResult(
                name, f"r={r} order={order}", "fail",
                f"residual coefficient of t^{first_bad} is {residual.coefficient(first_bad)}",
            )
    return CheckResult(name, f"r=2..{r_max} order={order}", "pass")


def _check_factorization(r_max, n_max) -> CheckResult:
    name = "regular_singular_factorization"
    for r in range(2, r_max + 1):
        if not factorization_check(r, n_max):
            return CheckResult(
                name, f"r={r} n=0..{n_max}", "fail",
                "pure-class counts from exp of a single logarithm piece disagree",
            )
    return CheckResult(name, f"r=2..{r_max} n=0..{n_max}", "pass")


def render_report_text(report: VerifyReport) -> str:
    """Plain-text rendering: one line per check, verdict line last."""
    lines = []
    for check in report.checks:
        line = f"{check.status:>4}  {check.name}  [{check.params}]"
        if check.detail:
            line += f"  {check.detail}"
        lines.append(line)
    verdict = "PASS" if report.ok else "FAIL"
    lines.append(f"verification {verdict} ({len(report.checks)} checks, {report.elapsed_ms:.1f} ms)")
    return "\n".join(lines)

"""Exact arithmetic substrate: rationals, sparse bivariate polynomials, and
truncated formal power series.

Everything in this package is computed exactly.  Coefficients are
``fractions.Fraction`` values (arbitrary precision, always reduced, with a
positive denominator), polynomials in the two variables x and y are stored
sparsely as a mapping from exponent pairs to nonzero coefficients, and formal
power series in t carry an explicit truncation order with one polynomial per
coefficient.

The canonical term order, used both for printing and for the exact-division
algorithm, is graded: descending total degree, ties broken by descending
x-exponent.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

# Arbitrary-precision rational scalar used for every coefficient.  Fraction
# guarantees the canonical-form invariants (positive denominator, lowest
# terms, zero stored as 0/1).
Rational = Fraction

Exponents = tuple[int, int]
CoeffLike = int | Fraction

_ZERO_FRACTION = Fraction(0)


class NonExactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where exactness was required."""


def _term_key(exponents: Exponents) -> tuple[int, int]:
    """Sort key realizing the graded order (total degree, then x degree)."""
    return (exponents[0] + exponents[1], exponents[0])


def _coerce_coefficient(value: CoeffLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be an int or Fraction, got {type(value).__name__}")


class BiPoly:
    """Sparse polynomial in x and y with exact rational coefficients.

    Terms live in a private dict keyed by ``(x_exponent, y_exponent)``; a zero
    coefficient is never stored, so dict equality is polynomial equality.
    Instances are immutable: every operation returns a new polynomial.

    Arithmetic accepts plain ints and Fractions on either side, so things
    like ``X + 3`` and ``2 * Y`` work as expected.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, CoeffLike] | Iterable[tuple[Exponents, CoeffLike]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: dict[Exponents, Fraction] = {}
        for exponents, coefficient in items:
            dx, dy = exponents
            if not (isinstance(dx, int) and isinstance(dy, int)) or dx < 0 or dy < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {exponents!r}")
            value = canonical.get((dx, dy), _ZERO_FRACTION) + _coerce_coefficient(coefficient)
            if value:
                canonical[(dx, dy)] = value
            else:
                canonical.pop((dx, dy), None)
        self._terms = canonical

    @classmethod
    def _raw(cls, terms: dict[Exponents, Fraction]) -> BiPoly:
        # Internal fast path: terms must already be canonical.
        poly = object.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def constant(cls, value: CoeffLike) -> BiPoly:
        coefficient = _coerce_coefficient(value)
        return cls._raw({(0, 0): coefficient} if coefficient else {})

    @classmethod
    def monomial(cls, dx: int, dy: int, coefficient: CoeffLike = 1) -> BiPoly:
        return cls({(dx, dy): coefficient})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        """True if every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._terms.values())

    def total_degree(self) -> int:
        """Maximum of dx + dy over the terms; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(dx + dy for dx, dy in self._terms)

    def coefficient(self, dx: int, dy: int) -> Fraction:
        return self._terms.get((dx, dy), _ZERO_FRACTION)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in canonical order (graded, descending)."""
        return sorted(self._terms.items(), key=lambda item: _term_key(item[0]), reverse=True)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.constant(other)._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]  # mutable-dict backed

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __pos__(self) -> BiPoly:
        return self

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other: BiPoly | CoeffLike) -> BiPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            value = out.get(exponents, _ZERO_FRACTION) + coefficient
            if value:
                out[exponents] = value
            else:
                out.pop(exponents, None)
        return BiPoly._raw(out)

    def __radd__(self, other: CoeffLike) -> BiPoly:
        return self.__add__(other)

    def __sub__(self, other: BiPoly | CoeffLike) -> BiPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other: CoeffLike) -> BiPoly:
        return (-self).__add__(other)

    def __mul__(self, other: BiPoly | CoeffLike) -> BiPoly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict[Exponents, Fraction] = {}
        for (ax, ay), ac in self._terms.items():
            for (bx, by), bc in other._terms.items():
                key = (ax + bx, ay + by)
                value = out.get(key, _ZERO_FRACTION) + ac * bc
                if value:
                    out[key] = value
                else:
                    out.pop(key, None)
        return BiPoly._raw(out)

    def __rmul__(self, other: CoeffLike) -> BiPoly:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> BiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x_value: CoeffLike, y_value: CoeffLike) -> Fraction:
        """Exact value of the polynomial at a rational point."""
        x0 = _coerce_coefficient(x_value)
        y0 = _coerce_coefficient(y_value)
        total = _ZERO_FRACTION
        for (dx, dy), coefficient in self._terms.items():
            total += coefficient * x0**dx * y0**dy
        return total

    def substitute(self, x_poly: BiPoly, y_poly: BiPoly) -> BiPoly:
        """Polynomial obtained by substituting polynomials for x and y."""
        x_powers: list[BiPoly] = [ONE]
        y_powers: list[BiPoly] = [ONE]
        result = ZERO
        for (dx, dy), coefficient in self._terms.items():
            while len(x_powers) <= dx:
                x_powers.append(x_powers[-1] * x_poly)
            while len(y_powers) <= dy:
                y_powers.append(y_powers[-1] * y_poly)
            result = result + x_powers[dx] * y_powers[dy] * coefficient
        return result

    def exact_div(self, divisor: BiPoly) -> BiPoly:
        """Exact quotient self / divisor in the polynomial ring.

        Raises NonExactDivisionError if the divisor does not divide exactly.
        Uses lead-term reduction in the graded order; when the dividend is a
        true multiple, every intermediate remainder is one too, so the lead
        term is always reducible until the remainder vanishes.
        """
        if not divisor._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return ZERO
        lead = max(divisor._terms, key=_term_key)
        lead_coefficient = divisor._terms[lead]
        remainder = dict(self._terms)
        quotient: dict[Exponents, Fraction] = {}
        while remainder:
            top = max(remainder, key=_term_key)
            dx = top[0] - lead[0]
            dy = top[1] - lead[1]
            if dx < 0 or dy < 0:
                raise NonExactDivisionError(
                    f"({self}) is not divisible by ({divisor}): stuck at term {top}"
                )
            factor = remainder[top] / lead_coefficient
            quotient[(dx, dy)] = factor
            for (ex, ey), coefficient in divisor._terms.items():
                key = (ex + dx, ey + dy)
                value = remainder.get(key, _ZERO_FRACTION) - factor * coefficient
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return BiPoly._raw(quotient)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (dx, dy), coefficient in self.sorted_terms():
            factors: list[str] = []
            magnitude = abs(coefficient)
            if magnitude != 1 or (dx == 0 and dy == 0):
                factors.append(str(magnitude))
            if dx:
                factors.append("x" if dx == 1 else f"x^{dx}")
            if dy:
                factors.append("y" if dy == 1 else f"y^{dy}")
            body = "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def _as_poly(value: BiPoly | CoeffLike) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.constant(value)
    return NotImplemented  # type: ignore[return-value]


ZERO = BiPoly._raw({})
ONE = BiPoly._raw({(0, 0): Fraction(1)})
X = BiPoly._raw({(1, 0): Fraction(1)})
Y = BiPoly._raw({(0, 1): Fraction(1)})


class TruncSeries:
    """Formal power series in t, truncated at an explicit order.

    A series of order N stores the N+1 polynomial coefficients of
    t^0 .. t^N.  Binary operations on series of different orders truncate
    to the smaller order instead of raising, so differentiation (which
    shortens a series by one) composes cleanly with multiplication.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[BiPoly | CoeffLike]) -> None:
        coeffs = tuple(c if isinstance(c, BiPoly) else BiPoly.constant(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        self._coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls([ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls([ONE] + [ZERO] * order)

    @classmethod
    def from_terms(cls, order: int, entries: Mapping[int, BiPoly | CoeffLike]) -> TruncSeries:
        """Series with the given t-power coefficients; powers beyond the
        order are silently truncated away."""
        coeffs: list[BiPoly] = [ZERO] * (order + 1)
        for power, value in entries.items():
            if not isinstance(power, int) or power < 0:
                raise ValueError(f"t-power must be a nonnegative integer, got {power!r}")
            if power <= order:
                coeffs[power] = value if isinstance(value, BiPoly) else BiPoly.constant(value)
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[BiPoly, ...]:
        return self._coeffs

    def coefficient(self, power: int) -> BiPoly:
        return self._coeffs[power]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self._coeffs])

    def __add__(self, other: TruncSeries) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self._coeffs[k] - other._coeffs[k] for k in range(n + 1)])

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        """Cauchy product, truncated at the smaller order."""
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            a = self._coeffs[i]
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncSeries(out)

    def scale(self, factor: BiPoly | CoeffLike) -> TruncSeries:
        """Multiply every coefficient by a polynomial or scalar."""
        return TruncSeries([c * factor for c in self._coeffs])

    def derivative(self) -> TruncSeries:
        """Formal d/dt; the order drops by one."""
        if self.order < 1:
            raise ValueError("cannot differentiate a series of order 0")
        return TruncSeries([(k + 1) * self._coeffs[k + 1] for k in range(self.order)])

    def exp(self) -> TruncSeries:
        """Formal exponential of a series with zero constant term.

        Coefficient k of E = exp(A) comes from E' = A'E:
        k*e_k = sum_{j=1..k} j*a_j*e_{k-j}.
        """
        if not self._coeffs[0].is_zero:
            raise ValueError("series exponential requires a zero constant term")
        weighted = [j * a for j, a in enumerate(self._coeffs)]
        out = [ONE]
        for k in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, k + 1):
                a = weighted[j]
                if a.is_zero:
                    continue
                acc = acc + a * out[k - j]
            out.append(acc * Fraction(1, k))
        return TruncSeries(out)

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"TruncSeries([{inner}])"

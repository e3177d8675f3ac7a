"""Exact truncated power series in the factorial coefficient convention.

A series is stored as the coefficients c_0, ..., c_N of

    f(t) = sum_{k=0}^{N} c_k * t**k / k!

with every c_k an exact rational.  This convention makes number sequences
defined through exponential generating functions (Bernoulli, Euler,
Genocchi, probabilists' Hermite, ...) directly readable off the
coefficient list, and it turns multiplication into a binomial
convolution:

    (f * g)_n = sum_k C(n, k) f_k g_{n-k}

Truncation is explicit.  Every series carries its order N, binary
operations return a series truncated to the minimum order of the two
operands, and differentiation shifts indices down (losing one order).
Division cancels a shared power of t when the denominator vanishes at
the origin, so quotients like t / (e^t - 1) stay exact; a numerator
that vanishes to lower order than the denominator is a genuine pole
and is rejected.

Coefficients are `fractions.Fraction` values throughout.  Floats are
refused everywhere so exactness can never silently degrade.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

Rational = Fraction


class DivisionByZeroSeries(ZeroDivisionError):
    """Denominator is identically zero at its truncation order."""


class PoleAtOrigin(ZeroDivisionError):
    """Quotient would need negative powers of t."""


class OrderUnderflow(ValueError):
    """Operation would drop below truncation order zero."""


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to an exact rational."""
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an exact rational")
    return Fraction(value)


def binomial_convolution(xs: Sequence, ys: Sequence, order: int, zero):
    """Product coefficients in the t^k/k! convention, generic over the
    coefficient ring (rationals, polynomials, ...).

    Returns the list [sum_k C(n,k) xs[k]*ys[n-k] for n <= order].
    """
    out = []
    for n in range(order + 1):
        acc = zero
        for k in range(n + 1):
            acc = acc + comb(n, k) * (xs[k] * ys[n - k])
        out.append(acc)
    return out


class PowerSeries:
    """Truncated series sum c_k t^k/k! with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = cs

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> PowerSeries:
        return cls([value] + [0] * order)

    @classmethod
    def t_monomial(cls, order: int) -> PowerSeries:
        """The series of plain t; needs order >= 1 to be representable."""
        if order < 1:
            raise OrderUnderflow("t does not fit in a series of order 0")
        return cls([0, 1] + [0] * (order - 1))

    @classmethod
    def exp(cls, order: int, factor=1) -> PowerSeries:
        """e^{factor*t}: the coefficient of t^k/k! is factor^k."""
        f = as_rational(factor)
        return cls([f**k for k in range(order + 1)])

    # ------------------------------------------------------------------
    # structure

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"PowerSeries([{body}])"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> PowerSeries:
        if order < 0:
            raise OrderUnderflow("cannot truncate below order 0")
        if order >= self.order:
            return self
        return PowerSeries(self._coeffs[: order + 1])

    # ------------------------------------------------------------------
    # arithmetic (binary ops truncate to the minimum operand order)

    def __add__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)])

    def __sub__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return PowerSeries([self._coeffs[k] - other._coeffs[k] for k in range(n + 1)])

    def __neg__(self) -> PowerSeries:
        return PowerSeries([-c for c in self._coeffs])

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(
                binomial_convolution(self._coeffs, other._coeffs, n, Fraction(0))
            )
        scalar = as_rational(other)
        return PowerSeries([scalar * c for c in self._coeffs])

    def __rmul__(self, other) -> PowerSeries:
        return self.__mul__(other)

    def _shift_down(self, v: int) -> PowerSeries:
        # divide by t^v in the /k! convention: c'_j = c_{j+v} * j!/(j+v)!
        if v == 0:
            return self
        if v > self.order:
            raise OrderUnderflow(f"cannot shift a series of order {self.order} down by {v}")
        out = []
        for j in range(self.order - v + 1):
            fall = 1
            for i in range(1, v + 1):
                fall *= j + i
            out.append(self._coeffs[j + v] / fall)
        return PowerSeries(out)

    def __truediv__(self, other) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            other = PowerSeries.constant(other, self.order)
        vden = other.valuation()
        if vden is None:
            raise DivisionByZeroSeries("denominator is identically zero")
        vnum = self.valuation()
        if vnum is not None and vnum < vden:
            raise PoleAtOrigin(
                f"numerator vanishes to order {vnum} < denominator order {vden}"
            )
        target = min(self.order, other.order) - vden
        if target < 0:
            raise OrderUnderflow("cancelling the shared power of t leaves no order")
        num = self._shift_down(vden).truncate(target).coeffs
        den = other._shift_down(vden).truncate(target).coeffs
        # forward substitution against the binomial convolution
        q: list[Fraction] = []
        for n in range(target + 1):
            acc = num[n]
            for k in range(n):
                acc -= comb(n, k) * q[k] * den[n - k]
            q.append(acc / den[0])
        return PowerSeries(q)

    def derivative(self) -> PowerSeries:
        """d/dt, an index shift in this convention; loses one order."""
        if self.order == 0:
            raise OrderUnderflow("cannot differentiate an order-0 series")
        return PowerSeries(self._coeffs[1:])


def exp_neg_half_t_squared(order: int) -> PowerSeries:
    """e^{-t^2/2}: coefficient of t^{2m}/(2m)! is (2m)! (-1/2)^m / m!, odd ones zero."""
    if order < 0:
        raise ValueError("order must be >= 0")
    cs = [Fraction(0)] * (order + 1)
    for m in range(order // 2 + 1):
        cs[2 * m] = Fraction(factorial(2 * m) * (-1) ** m, 2**m * factorial(m))
    return PowerSeries(cs)

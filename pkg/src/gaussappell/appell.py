"""Appell families: the generating series A(t), its number sequence A_n,
and the logarithmic-derivative coefficients used by recurrences.

A family is just a rule producing A(t) to any requested order.  Four
classical families are built in:

    bernoulli   t / (e^t - 1)
    euler       'series' convention 2 / (e^t + 1), or 'integer'
                convention sech t = 2 e^t / (e^{2t} + 1) whose numbers
                are the integer secant values 1, 0, -1, 0, 5, 0, -61
    genocchi    2t / (e^t + 1)          (A_0 = 0, not strict)
    hermite     e^{-t^2/2}              (probabilists' normalization)

The beta coefficients are those of A'(t)/A(t); they need A_0 != 0, which
genocchi violates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import PowerSeries, as_rational, exp_neg_half_t_squared


class UnknownFamily(ValueError):
    """Family name (or euler convention) not recognized."""


class NotStrictAppell(ValueError):
    """A_0 = 0, so A'(t)/A(t) has a pole at t = 0."""


@dataclass(frozen=True)
class AppellFamily:
    name: str
    series_gen: Callable[[int], PowerSeries]
    euler_convention: str | None = None

    def series(self, order: int) -> PowerSeries:
        """A(t) truncated at the given order."""
        return self.series_gen(order)

    def label(self) -> str:
        if self.euler_convention:
            return f"{self.name}/{self.euler_convention}"
        return self.name


def _bernoulli(order: int) -> PowerSeries:
    # one order of headroom pays for the t that cancels at the origin
    t = PowerSeries.t_monomial(order + 1)
    den = PowerSeries.exp(order + 1) - PowerSeries.constant(1, order + 1)
    return t / den


def _euler_series(order: int) -> PowerSeries:
    den = PowerSeries.exp(order) + PowerSeries.constant(1, order)
    return PowerSeries.constant(2, order) / den


def _euler_integer(order: int) -> PowerSeries:
    # sech t written exponentially: 2 e^t / (e^{2t} + 1)
    den = PowerSeries.exp(order, factor=2) + PowerSeries.constant(1, order)
    return (2 * PowerSeries.exp(order)) / den


def _genocchi(order: int) -> PowerSeries:
    if order == 0:
        return PowerSeries.zero(0)
    den = PowerSeries.exp(order) + PowerSeries.constant(1, order)
    return (2 * PowerSeries.t_monomial(order)) / den


def _hermite(order: int) -> PowerSeries:
    return exp_neg_half_t_squared(order)


_EULER_CONVENTIONS = {"integer": _euler_integer, "series": _euler_series}


def builtin_family(name: str, euler_convention: str = "integer") -> AppellFamily:
    """Look up a built-in family by name.

    The euler_convention argument is meaningful only for 'euler' and
    selects which number sequence the name denotes.
    """
    if name == "bernoulli":
        return AppellFamily("bernoulli", _bernoulli)
    if name == "euler":
        gen = _EULER_CONVENTIONS.get(euler_convention)
        if gen is None:
            raise UnknownFamily(f"unknown euler convention {euler_convention!r}")
        return AppellFamily("euler", gen, euler_convention)
    if name == "genocchi":
        return AppellFamily("genocchi", _genocchi)
    if name == "hermite":
        return AppellFamily("hermite", _hermite)
    raise UnknownFamily(f"unknown family {name!r}")


def custom_family(coeffs: Sequence) -> AppellFamily:
    """Family from an explicit coefficient list for A(t), zero-padded past
    the end of the list.  The leading coefficient must be nonzero."""
    cs = tuple(as_rational(c) for c in coeffs)
    if not cs or cs[0] == 0:
        raise NotStrictAppell("a custom family needs A_0 != 0")

    def gen(order: int) -> PowerSeries:
        padded = cs[: order + 1] + (Fraction(0),) * max(0, order + 1 - len(cs))
        return PowerSeries(padded)

    return AppellFamily("custom", gen)


@dataclass(frozen=True)
class AppellNumbers:
    family: AppellFamily
    order: int
    values: tuple


def appell_numbers(family: AppellFamily, order: int) -> AppellNumbers:
    """A_0 .. A_order, read directly off A(t) in the /k! convention."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return AppellNumbers(family, order, family.series_gen(order).coeffs)


def beta_coefficients(family: AppellFamily, order: int) -> tuple:
    """Coefficients beta_0 .. beta_order of A'(t)/A(t)."""
    a = family.series_gen(order + 1)
    if a.coeffs[0] == 0:
        raise NotStrictAppell(
            f"{family.name}: A_0 = 0, logarithmic derivative undefined at t = 0"
        )
    return (a.derivative() / a).coeffs

"""Pochhammer symbols and truncated Gauss hypergeometric coefficient streams.

The ratios phi_k = (a)_k (b)_k / (c)_k drive everything downstream.  They
exist as long as no factor (c + k - 1) hits zero before the working
order, so validity is checked lazily against the order actually
requested rather than globally.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import PowerSeries, Rational, as_rational


class InvalidParameterC(ValueError):
    """The lower parameter c makes (c)_k vanish within the working order."""


@dataclass(frozen=True)
class HypergeomParams:
    a: Rational
    b: Rational
    c: Rational

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        object.__setattr__(self, "c", as_rational(self.c))

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.c})"


def pochhammer(r, k: int) -> Fraction:
    """Rising factorial r(r+1)...(r+k-1); the empty product is 1."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    r = as_rational(r)
    out = Fraction(1)
    for i in range(k):
        out *= r + i
    return out


@dataclass(frozen=True)
class GaussCoefficients:
    """phi[k] = (a)_k (b)_k / (c)_k for k = 0..order."""

    params: HypergeomParams
    order: int
    phi: tuple


def gauss_coefficients(params: HypergeomParams, order: int) -> GaussCoefficients:
    if order < 0:
        raise ValueError("order must be >= 0")
    a, b, c = params.a, params.b, params.c
    phi = [Fraction(1)]
    num = Fraction(1)
    den = Fraction(1)
    for k in range(order):
        cf = c + k
        if cf == 0:
            raise InvalidParameterC(f"(c)_{k + 1} vanishes for c = {c}")
        num *= (a + k) * (b + k)
        den *= cf
        phi.append(num / den)
    return GaussCoefficients(params, order, tuple(phi))


def shift_params(params: HypergeomParams, m: int) -> HypergeomParams:
    """All three parameters shifted up by m >= 0.

    Only the order-independent obstruction (shifted c exactly zero) is
    rejected here; anything else surfaces lazily when coefficients are
    actually computed.
    """
    if m < 0:
        raise ValueError("shift needs m >= 0")
    shifted_c = params.c + m
    if shifted_c == 0:
        raise InvalidParameterC(f"c + {m} = 0 for c = {params.c}")
    return HypergeomParams(params.a + m, params.b + m, shifted_c)


def gauss_2f1_series_in_t(params: HypergeomParams, x, order: int) -> PowerSeries:
    """2F1(a,b;c; x*t) as a series in t: the t^k/k! coefficient is phi_k x^k."""
    x = as_rational(x)
    phi = gauss_coefficients(params, order).phi
    return PowerSeries([phi[k] * x**k for k in range(order + 1)])


def sample_parameter_triples(seed: int, count: int) -> list[HypergeomParams]:
    """Deterministic stream of generic rational parameter triples.

    c is drawn positive so every (c)_k is nonzero, and a, b are rejected
    when they are non-positive integers, keeping phi_k nonzero at all
    orders (polynomial degrees then behave generically).
    """
    rng = random.Random(seed)
    out: list[HypergeomParams] = []
    while len(out) < count:
        a = Fraction(rng.randint(-6, 8), rng.randint(1, 4))
        b = Fraction(rng.randint(-6, 8), rng.randint(1, 4))
        c = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        if a.denominator == 1 and a <= 0:
            continue
        if b.denominator == 1 and b <= 0:
            continue
        out.append(HypergeomParams(a, b, c))
    return out

"""Gauss-Appell polynomials by three independent routes, plus the exact
identity checks that tie the routes together.

The polynomial family attached to an Appell family A and parameters
(a, b; c) has the generating relation

    A(t) * 2F1(a, b; c; x t)  =  sum_n  P_n(x) t^n / n!

so P_n(x) = sum_k C(n,k) phi_k A_{n-k} x^k with phi_k = (a)_k(b)_k/(c)_k.
The three constructions implemented here are the explicit double sum
(in both summation orders), coefficient extraction from the generating
product with x kept formal, and the logarithmic-derivative recurrence.
All three must agree coefficientwise; the verification suites and the
check helpers below test exactly that.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .appell import AppellFamily, appell_numbers, beta_coefficients
from .exact import as_rational, binomial_convolution
from .hypergeom import HypergeomParams, gauss_coefficients, shift_params


class ZeroShiftBase(ValueError):
    """The argument-shift expansion divides by its base point y."""


class Polynomial:
    """Exact univariate polynomial, coefficients ascending in x.

    Trailing zeros are trimmed; the zero polynomial has the empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, coeff, power: int) -> Polynomial:
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"Polynomial([{body}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                term = str(c)
            else:
                mag = c if c > 0 else -c
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}x" if k == 1 else f"{head}x^{k}"
                if c < 0:
                    term = "-" + term
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append("- " + term[1:])
            else:
                parts.append("+ " + term)
        return " ".join(parts)

    def __add__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    def __sub__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self._coeffs or not other._coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, ci in enumerate(self._coeffs):
                if not ci:
                    continue
                for j, cj in enumerate(other._coeffs):
                    out[i + j] += ci * cj
            return Polynomial(out)
        scalar = as_rational(other)
        return Polynomial([scalar * c for c in self._coeffs])

    def __rmul__(self, other) -> Polynomial:
        return self.__mul__(other)

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([k * c for k, c in enumerate(self._coeffs)][1:])


class BivariatePolynomial:
    """Exact polynomial in x and y, stored sparsely as (i, j) -> coefficient
    of x^i y^j with no zero entries."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        tidy = {}
        for (i, j), c in (terms or {}).items():
            c = as_rational(c)
            if c:
                tidy[(int(i), int(j))] = c
        self._terms = tidy

    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        body = ", ".join(
            f"({i},{j}): {c}" for (i, j), c in sorted(self._terms.items())
        )
        return f"BivariatePolynomial({{{body}}})"

    def __add__(self, other) -> BivariatePolynomial:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivariatePolynomial(out)

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BivariatePolynomial:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> BivariatePolynomial:
        if isinstance(other, BivariatePolynomial):
            out: dict = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    key = (i1 + i2, j1 + j2)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return BivariatePolynomial(out)
        scalar = as_rational(other)
        return BivariatePolynomial({k: scalar * c for k, c in self._terms.items()})

    def __rmul__(self, other) -> BivariatePolynomial:
        return self.__mul__(other)

    def __call__(self, x, y) -> Fraction:
        x = as_rational(x)
        y = as_rational(y)
        return sum(
            (c * x**i * y**j for (i, j), c in self._terms.items()), Fraction(0)
        )

    def substitute_y(self, y) -> Polynomial:
        """Collapse to a polynomial in x by fixing y."""
        y = as_rational(y)
        out: dict = {}
        for (i, j), c in self._terms.items():
            out[i] = out.get(i, Fraction(0)) + c * y**j
        if not out:
            return Polynomial()
        size = max(out) + 1
        return Polynomial([out.get(i, Fraction(0)) for i in range(size)])


# ----------------------------------------------------------------------
# the three construction routes


def gap_explicit(family: AppellFamily, params: HypergeomParams, n: int) -> Polynomial:
    """Explicit double sum: the x^k coefficient is C(n,k) phi_k A_{n-k}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    phi = gauss_coefficients(params, n).phi
    numbers = appell_numbers(family, n).values
    return Polynomial([comb(n, k) * phi[k] * numbers[n - k] for k in range(n + 1)])


def gap_explicit_flipped(
    family: AppellFamily, params: HypergeomParams, n: int
) -> Polynomial:
    """The same sum with the summation index running over the Appell factor:
    the x^{n-k} coefficient picks up C(n,k) phi_{n-k} A_k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    phi = gauss_coefficients(params, n).phi
    numbers = appell_numbers(family, n).values
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] += comb(n, k) * phi[n - k] * numbers[k]
    return Polynomial(coeffs)


def gap_from_generating(
    family: AppellFamily, params: HypergeomParams, n: int
) -> Polynomial:
    """Coefficient extraction: multiply A(t) by 2F1(a,b;c;xt) as series in t
    with polynomial coefficients (x formal) and take the t^n/n! entry."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a_coeffs = [Polynomial([c]) for c in family.series_gen(n).coeffs]
    phi = gauss_coefficients(params, n).phi
    f_coeffs = [Polynomial.monomial(phi[k], k) for k in range(n + 1)]
    product = binomial_convolution(a_coeffs, f_coeffs, n, Polynomial())
    return product[n]


def gap_by_recurrence(
    family: AppellFamily, params: HypergeomParams, n: int
) -> Polynomial:
    """Raise from P_0 = A_0 using

        P_{j+1}(x) = (a b / c) x P_j^{(+1)}(x) + sum_k C(j,k) beta_k P_{j-k}(x)

    where P^{(+1)} is the family at parameters shifted by one and beta
    are the coefficients of A'(t)/A(t).  Fails for families with
    A_0 = 0, where the recurrence has no starting point.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    betas = beta_coefficients(family, max(n - 1, 0))
    a0 = appell_numbers(family, 0).values[0]
    shifted = shift_params(params, 1)
    prefactor = params.a * params.b / params.c
    table = [Polynomial([a0])]
    for j in range(n):
        bump = Polynomial.monomial(prefactor, 1) * gap_explicit(family, shifted, j)
        tail = Polynomial()
        for k in range(j + 1):
            tail = tail + comb(j, k) * betas[k] * table[j - k]
        table.append(bump + tail)
    return table[n]


# ----------------------------------------------------------------------
# evaluation and calculus


def gap_evaluate(polynomial: Polynomial, x) -> Fraction:
    """Exact value at a rational point."""
    return polynomial(x)


def gap_x_derivative(polynomial: Polynomial) -> Polynomial:
    return polynomial.derivative()


def derivative_identity_check(
    family: AppellFamily, params: HypergeomParams, n: int
) -> bool:
    """d/dx P_n == n (a b / c) P_{n-1} at parameters shifted by one."""
    if n < 1:
        raise ValueError("the derivative identity needs n >= 1")
    lhs = gap_explicit(family, params, n).derivative()
    prefactor = n * params.a * params.b / params.c
    rhs = prefactor * gap_explicit(family, shift_params(params, 1), n - 1)
    return lhs == rhs


def gap_argument_shift_check(
    family: AppellFamily, params: HypergeomParams, n: int, x, y
) -> bool:
    """P_n(x + y) against its expansion around the base point y:

        P_n(x+y) = sum_k C(n,k) (1 + x/y)^k phi_k y^k A_{n-k}
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x = as_rational(x)
    y = as_rational(y)
    if y == 0:
        raise ZeroShiftBase("the expansion base point y must be nonzero")
    lhs = gap_explicit(family, params, n)(x + y)
    phi = gauss_coefficients(params, n).phi
    numbers = appell_numbers(family, n).values
    ratio = 1 + x / y
    rhs = sum(
        (
            comb(n, k) * ratio**k * phi[k] * y**k * numbers[n - k]
            for k in range(n + 1)
        ),
        Fraction(0),
    )
    return lhs == rhs


def chi_shift_identity_check(
    family: AppellFamily, params: HypergeomParams, n: int, m: int
) -> bool:
    """The index-shifted sum collapses to phi_m times the polynomial at
    parameters shifted by m:

        sum_k C(n,k) phi_{k+m} A_{n-k} x^k  ==  phi_m P_n^{(+m)}(x)
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    phi = gauss_coefficients(params, n + m).phi
    numbers = appell_numbers(family, n).values
    lhs = Polynomial(
        [comb(n, k) * phi[k + m] * numbers[n - k] for k in range(n + 1)]
    )
    rhs = phi[m] * gap_explicit(family, shift_params(params, m), n)
    return lhs == rhs


# ----------------------------------------------------------------------
# the bivariate extension


def bivariate_gap(
    family: AppellFamily, params: HypergeomParams, n: int
) -> BivariatePolynomial:
    """t^n/n! coefficient of A(t) e^{xt} 2F1(a,b;c; y t^2), x and y formal.

    The hypergeometric factor contributes only even powers of t, with
    the t^{2j}/(2j)! coefficient equal to (2j)!/j! phi_j y^j; the closed
    form of the result is

        sum_{i + 2j <= n} n!/(i! j! (n-i-2j)!) phi_j A_{n-i-2j} x^i y^j.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    zero = BivariatePolynomial()
    a_coeffs = [BivariatePolynomial({(0, 0): c}) for c in family.series_gen(n).coeffs]
    x_coeffs = [BivariatePolynomial({(k, 0): 1}) for k in range(n + 1)]
    phi = gauss_coefficients(params, n // 2).phi
    y_coeffs = []
    for k in range(n + 1):
        if k % 2 == 0:
            j = k // 2
            y_coeffs.append(
                BivariatePolynomial(
                    {(0, j): Fraction(factorial(k), factorial(j)) * phi[j]}
                )
            )
        else:
            y_coeffs.append(zero)
    partial = binomial_convolution(a_coeffs, x_coeffs, n, zero)
    product = binomial_convolution(partial, y_coeffs, n, zero)
    return product[n]

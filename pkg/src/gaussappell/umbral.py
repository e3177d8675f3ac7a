"""Finite model of the two-umbra calculus behind the Gauss-Appell family.

A state is a finite rational linear combination of monomials

    chi^p u^j v^m        (all exponents >= 0)

where u stands for the product of x with the hypergeometric umbra chi,
v for the Appell umbra, and the loose chi^p factor records extra
evaluation shifts.  States are kept symbolic; `project` applies both
vacuum rules

    chi^{total} -> phi_{total} = (a)_t (b)_t / (c)_t   (total = p + j)
    v^m         -> A_m

and returns an honest polynomial in x (one x per u factor).

Operators act termwise and are all linear: formal partial derivatives
in u and v, multiplication by u, and chi-power bumps.  The binomial
state (u + v)^n projects to the n-th Gauss-Appell polynomial, and the
raising/lowering combinations and differential-equation residuals
below are finite operator polynomials acting on such states.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .appell import AppellFamily, appell_numbers, beta_coefficients
from .exact import as_rational
from .gauss_appell import Polynomial
from .hypergeom import HypergeomParams, gauss_coefficients


class OrderExceeded(ValueError):
    """A projected term needs phi or A beyond the context's max order."""


class UmbralState:
    """Sparse map (p, j, m) -> coefficient; zero terms are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        tidy = {}
        for key, q in (terms or {}).items():
            p, j, m = key
            if p < 0 or j < 0 or m < 0:
                raise ValueError(f"negative exponent in {key}")
            q = as_rational(q)
            if q:
                tidy[(int(p), int(j), int(m))] = q
        self._terms = tidy

    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UmbralState):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        body = ", ".join(
            f"({p},{j},{m}): {q}" for (p, j, m), q in sorted(self._terms.items())
        )
        return f"UmbralState({{{body}}})"

    def __add__(self, other) -> UmbralState:
        if not isinstance(other, UmbralState):
            return NotImplemented
        out = dict(self._terms)
        for key, q in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + q
        return UmbralState(out)

    def __neg__(self) -> UmbralState:
        return UmbralState({k: -q for k, q in self._terms.items()})

    def __sub__(self, other) -> UmbralState:
        if not isinstance(other, UmbralState):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> UmbralState:
        scalar = as_rational(other)
        return UmbralState({k: scalar * q for k, q in self._terms.items()})

    def __rmul__(self, other) -> UmbralState:
        return self.__mul__(other)


def binomial_state(n: int) -> UmbralState:
    """(u + v)^n expanded binomially: sum_k C(n,k) u^k v^{n-k}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return UmbralState({(0, k, n - k): comb(n, k) for k in range(n + 1)})


class ProjectionContext:
    """Precomputed phi and A tables for projecting states of bounded order."""

    def __init__(self, family: AppellFamily, params: HypergeomParams, max_order: int):
        if max_order < 0:
            raise ValueError("max_order must be >= 0")
        self.family = family
        self.params = params
        self.max_order = max_order
        self.phi = gauss_coefficients(params, max_order).phi
        self.numbers = appell_numbers(family, max_order).values


def project(state: UmbralState, ctx: ProjectionContext) -> Polynomial:
    """Apply both vacuum rules, returning a polynomial in x."""
    acc: dict = {}
    for (p, j, m), q in state.items():
        if p + j > ctx.max_order or m > ctx.max_order:
            raise OrderExceeded(
                f"term chi^{p} u^{j} v^{m} exceeds context order {ctx.max_order}"
            )
        acc[j] = acc.get(j, Fraction(0)) + q * ctx.phi[p + j] * ctx.numbers[m]
    if not acc:
        return Polynomial()
    size = max(acc) + 1
    return Polynomial([acc.get(j, Fraction(0)) for j in range(size)])


# ----------------------------------------------------------------------
# elementary operators (all linear, acting termwise)


def op_D_u(state: UmbralState) -> UmbralState:
    """Formal partial derivative in u."""
    out: dict = {}
    for (p, j, m), q in state.items():
        if j:
            key = (p, j - 1, m)
            out[key] = out.get(key, Fraction(0)) + j * q
    return UmbralState(out)


def op_D_v(state: UmbralState) -> UmbralState:
    """Formal partial derivative in v."""
    out: dict = {}
    for (p, j, m), q in state.items():
        if m:
            key = (p, j, m - 1)
            out[key] = out.get(key, Fraction(0)) + m * q
    return UmbralState(out)


def op_mul_u(state: UmbralState) -> UmbralState:
    """Multiplication by u."""
    return UmbralState({(p, j + 1, m): q for (p, j, m), q in state.items()})


def op_chi(state: UmbralState, m: int) -> UmbralState:
    """Multiplication by chi^m (a loose shift power, no x attached)."""
    if m < 0:
        raise ValueError("chi power must be >= 0")
    return UmbralState({(p + m, j, k): q for (p, j, k), q in state.items()})


def _op_power(op, state: UmbralState, k: int) -> UmbralState:
    for _ in range(k):
        state = op(state)
    return state


# ----------------------------------------------------------------------
# raising operators and differential-equation residuals


def raising_u(state: UmbralState, family: AppellFamily, order_n: int) -> UmbralState:
    """u + sum_k (beta_k / k!) D_u^k, the step operator along the u leg.

    Applied to the binomial state of order n (with order_n >= n) it
    yields a state projecting to the (n+1)-st polynomial.
    """
    betas = beta_coefficients(family, order_n)
    out = op_mul_u(state)
    d = state
    for k in range(order_n + 1):
        if k:
            d = op_D_u(d)
        out = out + (betas[k] / factorial(k)) * d
    return out


def raising_v(state: UmbralState, family: AppellFamily, order_n: int) -> UmbralState:
    """u + sum_k (beta_k / k!) D_v^k, the step operator along the v leg."""
    betas = beta_coefficients(family, order_n)
    out = op_mul_u(state)
    d = state
    for k in range(order_n + 1):
        if k:
            d = op_D_v(d)
        out = out + (betas[k] / factorial(k)) * d
    return out


_EQUATION_KINDS = ("ode_u", "ode_v", "pde_uv", "pde_vu")


def ode_residual(
    kind: str,
    family: AppellFamily,
    params: HypergeomParams,
    n: int,
    constant,
) -> Polynomial:
    """Projected residual of one of the four operator equations on the
    binomial state of order n, minus `constant` times the state itself.

    Kinds (composition applies the rightmost factor first):

        ode_u    1 + u D_u + sum_k (beta_k/k!) D_u^{k+1}
        ode_v        u D_v + sum_k (beta_k/k!) D_v^{k+1}
        pde_uv   1 + u D_u + sum_k (beta_k/k!) D_u D_v^k
        pde_vu       u D_v + sum_k (beta_k/k!) D_v D_u^k

    The two kinds carrying the leading 1 vanish at constant n+1 and
    leave exactly the n-th polynomial at constant n; the other two
    vanish at constant n.
    """
    if kind not in _EQUATION_KINDS:
        raise ValueError(f"unknown equation kind {kind!r}")
    if n < 1:
        raise ValueError("the operator equations need n >= 1")
    betas = beta_coefficients(family, n)
    s = binomial_state(n)
    if kind == "ode_u":
        out = s + op_mul_u(op_D_u(s))
        for k in range(n + 1):
            out = out + (betas[k] / factorial(k)) * _op_power(op_D_u, s, k + 1)
    elif kind == "ode_v":
        out = op_mul_u(op_D_v(s))
        for k in range(n + 1):
            out = out + (betas[k] / factorial(k)) * _op_power(op_D_v, s, k + 1)
    elif kind == "pde_uv":
        out = s + op_mul_u(op_D_u(s))
        for k in range(n + 1):
            out = out + (betas[k] / factorial(k)) * op_D_u(_op_power(op_D_v, s, k))
    else:
        out = op_mul_u(op_D_v(s))
        for k in range(n + 1):
            out = out + (betas[k] / factorial(k)) * op_D_v(_op_power(op_D_u, s, k))
    out = out - as_rational(constant) * s
    ctx = ProjectionContext(family, params, n + 1)
    return project(out, ctx)

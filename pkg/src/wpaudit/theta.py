"""Jacobi theta series with the unit-period argument convention.

theta(j, v, tau) uses nome q = exp(i*pi*tau) and quasi-period 1 in v:

    theta1(v) = 2 sum_{k>=0} (-1)^k q^{(k+1/2)^2} sin((2k+1) pi v)
    theta2(v) = 2 sum_{k>=0} q^{(k+1/2)^2} cos((2k+1) pi v)
    theta3(v) = 1 + 2 sum_{k>=1} q^{k^2} cos(2 k pi v)
    theta4(v) = 1 + 2 sum_{k>=1} (-1)^k q^{k^2} cos(2 k pi v)

Terms are assembled from exponentials so large |Im v| cannot overflow the
trig factor before the nome decay cancels it.  The adaptive stop rule bounds
the tail by |q|^{(K+1/2)^2} e^{2 pi K |Im v|} (half-integer characteristics)
or |q|^{K^2} e^{2 pi K |Im v|} (integer ones), with at least `guard` terms
and a hard cap of `k_max`.

theta1_prime_zero uses its own series; it is never taken from a product
identity, so product-form checks elsewhere stay independent of it.
"""
from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .core import (
    DEFAULT_POLICY,
    DomainError,
    TruncationOverflowError,
    TruncationPolicy,
    neumaier_sum,
    require_upper_half,
)

__all__ = [
    "nome",
    "theta",
    "theta_dv",
    "theta_nulls",
    "theta1_prime_zero",
    "theta1_triple_prime_zero",
]

_PI = math.pi


def nome(tau: complex) -> complex:
    """q = exp(i*pi*tau)."""
    tau = require_upper_half(tau)
    return cmath.exp(1j * _PI * tau)


def _check_index(j: int) -> None:
    if j not in (1, 2, 3, 4):
        raise DomainError(f"theta index must be 1..4, got {j!r}")


def _theta_sum(
    j: int,
    v: complex,
    tau: complex,
    policy: TruncationPolicy,
    order: int,
) -> complex:
    """Sum the series for theta_j or its order-th v-derivative."""
    tau = require_upper_half(tau)
    v = complex(v)
    L = 1j * _PI * tau  # q^x computed as exp(x*L); avoids log branch cuts
    q_abs = math.exp(-_PI * tau.imag)
    im_v = abs(v.imag)
    half = j in (1, 2)

    terms: list[complex] = []
    k = 0
    k_cap = policy.k_fixed if policy.k_fixed is not None else policy.k_max
    while True:
        if half:
            m = 2 * k + 1
            expo = (k + 0.5) * (k + 0.5) * L
        else:
            m = 2 * k
            expo = float(k * k) * L
        ang = 1j * _PI * m * v
        e_plus = cmath.exp(expo + ang)
        e_minus = cmath.exp(expo - ang)
        pair_sin = (e_plus - e_minus) / 2j  # q^{...} sin(m pi v)
        pair_cos = (e_plus + e_minus) / 2.0  # q^{...} cos(m pi v)
        if j == 1:
            cycle = (pair_sin, pair_cos, -pair_sin, -pair_cos)
            sign = -1.0 if (k % 2) else 1.0
        else:
            cycle = (pair_cos, -pair_sin, -pair_cos, pair_sin)
            sign = -1.0 if (j == 4 and k % 2) else 1.0
        base = cycle[order % 4]
        if order:
            base *= (m * _PI) ** order
        terms.append(sign * base)

        kk = k + 1
        if half:
            bound = q_abs ** ((kk + 0.5) * (kk + 0.5))
        else:
            bound = q_abs ** (kk * kk)
        bound *= math.exp(2.0 * _PI * kk * im_v)
        if order:
            bound *= ((2 * kk + 1) * _PI) ** order
        if policy.k_fixed is not None:
            if kk >= policy.k_fixed:
                break
        elif bound < policy.eps and kk >= policy.guard:
            break
        k += 1
        if k > k_cap:
            raise TruncationOverflowError(
                f"theta{j} series needs more than {k_cap} terms at "
                f"tau={tau!r}, v={v!r}"
            )

    total = neumaier_sum(terms)
    if half:
        return 2.0 * total
    if order == 0:
        # the k=0 constant entered `terms` once but the 2x applies to k>=1
        return 2.0 * total - 1.0
    return 2.0 * total


def theta(
    j: int, v: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """theta_j(v, tau) under the unit-period convention."""
    _check_index(j)
    return _theta_sum(j, v, tau, policy, order=0)


def theta_dv(
    j: int,
    v: complex,
    tau: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
    order: int = 1,
) -> complex:
    """order-th derivative of theta_j with respect to v."""
    _check_index(j)
    if order < 1:
        raise DomainError("order must be >= 1; use theta() for order 0")
    return _theta_sum(j, v, tau, policy, order=order)


@lru_cache(maxsize=4096)
def theta_nulls(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[complex, complex, complex]:
    """(theta2(0), theta3(0), theta4(0)).

    Summed as dedicated null series rather than theta(j, 0, ...): the v=0
    cosine factors are exact here, which keeps the nulls correctly rounded.
    """
    tau = require_upper_half(tau)
    L = 1j * _PI * tau
    q_abs = math.exp(-_PI * tau.imag)
    n_terms = policy.terms_for(q_abs)
    th2 = 2.0 * neumaier_sum(
        [cmath.exp((n + 0.5) * (n + 0.5) * L) for n in range(n_terms + 1)]
    )
    th3 = 1.0 + 2.0 * neumaier_sum(
        [cmath.exp(n * n * L) for n in range(1, n_terms + 1)]
    )
    th4 = 1.0 + 2.0 * neumaier_sum(
        [(-1.0) ** n * cmath.exp(n * n * L) for n in range(1, n_terms + 1)]
    )
    return th2, th3, th4


@lru_cache(maxsize=4096)
def theta1_prime_zero(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """theta1'(0) = 2 pi sum (-1)^k (2k+1) q^{(k+1/2)^2}, summed directly."""
    tau = require_upper_half(tau)
    L = 1j * _PI * tau
    q_abs = math.exp(-_PI * tau.imag)
    terms = []
    k = 0
    while True:
        coeff = (2 * k + 1) * (-1.0 if (k % 2) else 1.0)
        terms.append(coeff * cmath.exp((k + 0.5) * (k + 0.5) * L))
        kk = k + 1
        tail = q_abs ** ((kk + 0.5) * (kk + 0.5)) * (2 * kk + 1)
        if tail < policy.eps and kk >= policy.guard:
            break
        k += 1
        if k > policy.k_max:
            raise TruncationOverflowError("theta1' series exceeded the term cap")
    return 2.0 * _PI * neumaier_sum(terms)


@lru_cache(maxsize=4096)
def theta1_triple_prime_zero(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """theta1'''(0) = -2 pi^3 sum (-1)^k (2k+1)^3 q^{(k+1/2)^2}."""
    tau = require_upper_half(tau)
    L = 1j * _PI * tau
    q_abs = math.exp(-_PI * tau.imag)
    terms = []
    k = 0
    while True:
        coeff = (2 * k + 1) ** 3 * (-1.0 if (k % 2) else 1.0)
        terms.append(coeff * cmath.exp((k + 0.5) * (k + 0.5) * L))
        kk = k + 1
        tail = q_abs ** ((kk + 0.5) * (kk + 0.5)) * (2 * kk + 1) ** 3
        if tail < policy.eps and kk >= policy.guard:
            break
        k += 1
        if k > policy.k_max:
            raise TruncationOverflowError("theta1''' series exceeded the term cap")
    return -2.0 * _PI**3 * neumaier_sum(terms)

"""Infinite-product representations of wp, wp', theta and sigma.

Every product runs over k >= 1 with the shared truncation allocation.
Factors tend to 1 at the geometric rate e^{-2 pi k Im tau}, so partial
products are well conditioned; stable_product rescales if a prefactor
pushes intermediate magnitudes toward the overflow band.

Each docstring states the exact formula the function evaluates,
constants included.  Where an audited display differs from the working
form, the audit catalog carries the display; this module carries only
forms that reproduce the reference implementations at solver precision.
"""
from __future__ import annotations

import cmath
import math

from .core import (
    DEFAULT_POLICY,
    DomainError,
    TruncationPolicy,
    require_upper_half,
    stable_product,
)
from .theta import theta_nulls, theta1_prime_zero
from .trigsums import series_terms
from .weierstrass import lattice_constants

__all__ = [
    "cot_ratio_quartic_product",
    "one_minus_sin_ratio_product",
    "sigma_trig_product",
    "sigma1_trig_product",
    "sigma2_trig_product",
    "sigma3_trig_product",
    "tan_power_product",
    "theta1_trig_product",
    "theta2_trig_product",
    "wp_minus_e1_cot_product",
    "wp_minus_e1_null_product",
    "wp_minus_e2_product",
    "wp_minus_e3_product",
    "wp_prime_sine_product",
    "wp_prime_sine_product_raw",
    "wp_shift1_tan_product",
]

_PI = math.pi


def _cot(w: complex) -> complex:
    return cmath.cos(w) / cmath.sin(w)


def wp_minus_e1_cot_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """(pi cot(pi z/2))^2/4 * prod_k [cot(k pi tau - pi z/2) cot(k pi tau + pi z/2) / cot^2(k pi tau)]^2."""
    tau = require_upper_half(tau)
    z = complex(z)
    hv = 0.5 * _PI * z
    kmax = series_terms(tau, policy)
    pref = (_PI * _cot(hv)) ** 2 / 4.0

    def factors():
        yield pref
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield (_cot(w - hv) * _cot(w + hv) / _cot(w) ** 2) ** 2

    return stable_product(factors())


def wp_minus_e1_null_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """(pi theta3(0) theta4(0) cot(pi z/2))^2/4 * prod_k [cot(k pi tau - pi z/2) cot(k pi tau + pi z/2)]^2."""
    tau = require_upper_half(tau)
    z = complex(z)
    hv = 0.5 * _PI * z
    _, t3, t4 = theta_nulls(tau, policy)
    kmax = series_terms(tau, policy)
    pref = (_PI * t3 * t4 * _cot(hv)) ** 2 / 4.0

    def factors():
        yield pref
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield (_cot(w - hv) * _cot(w + hv)) ** 2

    return stable_product(factors())


def wp_minus_e3_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """pi^2/(2 sin(pi z/2))^2 times the sin((k-1/2) pi tau +- pi z/2) ratio product.

    Factor k is [sin((k-1/2)pt - hv)/sin(k pt - hv) * sin((k-1/2)pt + hv)/sin(k pt + hv)]^2
    * [sin(k pt)/sin((k-1/2)pt)]^4 with pt = pi tau, hv = pi z/2.
    """
    tau = require_upper_half(tau)
    z = complex(z)
    hv = 0.5 * _PI * z
    kmax = series_terms(tau, policy)
    pref = _PI**2 / (2.0 * cmath.sin(hv)) ** 2

    def factors():
        yield pref
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            h = (k - 0.5) * _PI * tau
            ratio = (
                cmath.sin(h - hv)
                / cmath.sin(w - hv)
                * cmath.sin(h + hv)
                / cmath.sin(w + hv)
            )
            yield ratio**2 * (cmath.sin(w) / cmath.sin(h)) ** 4

    return stable_product(factors())


def wp_minus_e2_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """Same shape as wp_minus_e3_product with cos((k-1/2) pi tau +- pi z/2) on top."""
    tau = require_upper_half(tau)
    z = complex(z)
    hv = 0.5 * _PI * z
    kmax = series_terms(tau, policy)
    pref = _PI**2 / (2.0 * cmath.sin(hv)) ** 2

    def factors():
        yield pref
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            h = (k - 0.5) * _PI * tau
            ratio = (
                cmath.cos(h - hv)
                / cmath.sin(w - hv)
                * cmath.cos(h + hv)
                / cmath.sin(w + hv)
            )
            yield ratio**2 * (cmath.sin(w) / cmath.cos(h)) ** 4

    return stable_product(factors())


def one_minus_sin_ratio_product(
    v: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """prod_k [1 - (sin(pi v)/sin(k pi tau))^2]; equals pi theta1(v)/(theta1'(0) sin(pi v))."""
    tau = require_upper_half(tau)
    s = cmath.sin(_PI * complex(v))
    kmax = series_terms(tau, policy)
    return stable_product(
        1.0 - (s / cmath.sin(k * _PI * tau)) ** 2 for k in range(1, kmax + 1)
    )


def theta1_trig_product(
    v: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """theta1(v) = (theta1'(0)/pi) sin(pi v) prod_k sin(k pi tau - pi v) sin(k pi tau + pi v)/sin^2(k pi tau)."""
    tau = require_upper_half(tau)
    v = complex(v)
    pv = _PI * v
    th1p = theta1_prime_zero(tau, policy)
    kmax = series_terms(tau, policy)

    def factors():
        yield th1p / _PI * cmath.sin(pv)
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield cmath.sin(w - pv) * cmath.sin(w + pv) / cmath.sin(w) ** 2

    return stable_product(factors())


def theta2_trig_product(
    v: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """theta2(v) = theta2(0) cos(pi v) prod_k cos(k pi tau - pi v) cos(k pi tau + pi v)/cos^2(k pi tau)."""
    tau = require_upper_half(tau)
    v = complex(v)
    pv = _PI * v
    t2, _, _ = theta_nulls(tau, policy)
    kmax = series_terms(tau, policy)

    def factors():
        yield t2 * cmath.cos(pv)
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield cmath.cos(w - pv) * cmath.cos(w + pv) / cmath.cos(w) ** 2

    return stable_product(factors())


def sigma_trig_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma(z) = e^{2 eta v^2} (2/pi) sin(pi v) prod_k sin ratios, v = z/2."""
    tau = require_upper_half(tau)
    v = 0.5 * complex(z)
    pv = _PI * v
    eta = lattice_constants(tau, policy).eta1
    kmax = series_terms(tau, policy)

    def factors():
        yield cmath.exp(2.0 * eta * v * v) * (2.0 / _PI) * cmath.sin(pv)
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield cmath.sin(w - pv) * cmath.sin(w + pv) / cmath.sin(w) ** 2

    return stable_product(factors())


def sigma1_trig_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_1(z) = e^{2 eta v^2} cos(pi v) prod_k cos ratios, v = z/2."""
    tau = require_upper_half(tau)
    v = 0.5 * complex(z)
    pv = _PI * v
    eta = lattice_constants(tau, policy).eta1
    kmax = series_terms(tau, policy)

    def factors():
        yield cmath.exp(2.0 * eta * v * v) * cmath.cos(pv)
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield cmath.cos(w - pv) * cmath.cos(w + pv) / cmath.cos(w) ** 2

    return stable_product(factors())


def sigma2_trig_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_2(z) = e^{2 eta v^2} prod_{k>=1} cos((k-1/2) pi tau -+ pi v) / cos^2((k-1/2) pi tau)."""
    tau = require_upper_half(tau)
    v = 0.5 * complex(z)
    pv = _PI * v
    eta = lattice_constants(tau, policy).eta1
    kmax = series_terms(tau, policy)

    def factors():
        yield cmath.exp(2.0 * eta * v * v)
        for k in range(1, kmax + 1):
            h = (k - 0.5) * _PI * tau
            yield cmath.cos(h - pv) * cmath.cos(h + pv) / cmath.cos(h) ** 2

    return stable_product(factors())


def sigma3_trig_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_3(z) = e^{2 eta v^2} prod_{k>=1} sin((k-1/2) pi tau -+ pi v) / sin^2((k-1/2) pi tau)."""
    tau = require_upper_half(tau)
    v = 0.5 * complex(z)
    pv = _PI * v
    eta = lattice_constants(tau, policy).eta1
    kmax = series_terms(tau, policy)

    def factors():
        yield cmath.exp(2.0 * eta * v * v)
        for k in range(1, kmax + 1):
            h = (k - 0.5) * _PI * tau
            yield cmath.sin(h - pv) * cmath.sin(h + pv) / cmath.sin(h) ** 2

    return stable_product(factors())


def wp_shift1_tan_product(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """wp(z+1) = e1 + (pi tan(pi z/2))^2/4 * prod_{k!=0} [tan(k pi tau - pi z/2)/cot(k pi tau)]^2.

    The two-sided product is folded into k >= 1 by pairing k with -k,
    which turns each pair into [tan(w - hv) tan(w + hv) tan^2(w)]^2.
    """
    tau = require_upper_half(tau)
    z = complex(z)
    hv = 0.5 * _PI * z
    c = lattice_constants(tau, policy)
    kmax = series_terms(tau, policy)

    def factors():
        yield (_PI * cmath.tan(hv)) ** 2 / 4.0
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield (cmath.tan(w - hv) * cmath.tan(w + hv) * cmath.tan(w) ** 2) ** 2

    return c.e1 + stable_product(factors())


def tan_power_product(
    T: complex, power: int, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """prod_{k>=1} tan^power(k pi T).

    Converges for Im T != 0 when 4 | power (tan(k pi T) tends to -+i).
    With T = tau: power 4 gives (theta3 theta4)^2(0), power 8 its square.
    """
    T = complex(T)
    if T.imag == 0.0:
        raise DomainError("tan product needs a period off the real axis")
    if power % 4 != 0:
        raise DomainError("tan product converges only for powers divisible by 4")
    kmax = series_terms(T, policy)
    return stable_product(
        cmath.tan(k * _PI * T) ** power for k in range(1, kmax + 1)
    )


def cot_ratio_quartic_product(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """prod_{k>=1} [cot^n(k pi tau)/cot(k n pi tau)]^4 for odd order n."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"order must be a positive odd integer, got {n!r}")
    tau = require_upper_half(tau)
    kmax = series_terms(tau, policy)
    return stable_product(
        (_cot(k * _PI * tau) ** n / _cot(k * n * _PI * tau)) ** 4
        for k in range(1, kmax + 1)
    )


def wp_prime_sine_product_raw(
    u: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """-sin(2 pi v)/sin^4(pi v) * prod_k sin(k pt + 2pv) sin(k pt - 2pv) sin^6(k pt) / [sin(k pt + pv) sin(k pt - pv)]^4.

    v = u/2.  Scaled by pi^3/8 this is wp'(u); see wp_prime_sine_product.
    """
    tau = require_upper_half(tau)
    v = 0.5 * complex(u)
    pv = _PI * v
    kmax = series_terms(tau, policy)

    def factors():
        yield -cmath.sin(2.0 * pv) / cmath.sin(pv) ** 4
        for k in range(1, kmax + 1):
            w = k * _PI * tau
            yield (
                cmath.sin(w + 2.0 * pv)
                * cmath.sin(w - 2.0 * pv)
                * cmath.sin(w) ** 6
                / (cmath.sin(w + pv) * cmath.sin(w - pv)) ** 4
            )

    return stable_product(factors())


def wp_prime_sine_product(
    u: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """wp'(u) = (pi^3/8) * wp_prime_sine_product_raw(u, tau)."""
    return (_PI**3 / 8.0) * wp_prime_sine_product_raw(u, tau, policy)

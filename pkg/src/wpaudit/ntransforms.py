"""Odd-order transformations between the lattices (2, 2 tau) and (2, 2 n tau).

Everything here evaluates the (n z, n tau) side purely from tau-lattice
data: finite products over the division points 2m/n, plus the constants
(theta-null ratios, cotangent products, gauge exponents) that tie the
two lattices together.  Cross-checking these against direct evaluation
at (n z, n tau) is what the n-transform audit records do.

Order n must be odd; the cap keeps the finite products cheap and the
division points clear of the pole guard.
"""
from __future__ import annotations

import cmath
import math

from .core import DEFAULT_POLICY, DomainError, TruncationPolicy
from .products import cot_ratio_quartic_product
from .theta import theta_nulls, theta1_prime_zero
from .weierstrass import (
    half_period,
    lattice_constants,
    sigma,
    sigma_b,
    wp,
    wp_prime,
)
from .xi import modulus_k, modulus_kprime, xi, xi_prime

__all__ = [
    "byproduct_quotient",
    "cot_prefactor",
    "eq1_wp_quotient",
    "period_l_mid",
    "period_l_product",
    "period_lprime_product",
    "require_odd_order",
    "sigma_j_n_product",
    "sigma_n_gauge",
    "sigma_n_product",
    "theta_prefactor",
    "wp_n_division",
    "wp_prime_n_division",
    "wp_prime_theta_constant",
    "wp_ratio_theta_constant",
    "xi_logderiv_shift_sum",
    "xi_n_product",
    "xi_tau_div",
    "xi_tau_shift",
    "zeros_ratio_product",
]

_PI = math.pi
ORDER_CAP = 15


def require_odd_order(n: int, cap: int = ORDER_CAP) -> int:
    if not isinstance(n, int) or n < 1 or n % 2 == 0 or n > cap:
        raise DomainError(f"order must be an odd integer in 1..{cap}, got {n!r}")
    return n


def _check_j(j: int) -> None:
    if j not in (1, 2, 3):
        raise DomainError(f"branch index must be 1..3, got {j!r}")


def wp_n_division(
    j: int,
    z: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """wp(nz, n tau) - e_j(n tau) from tau-lattice data.

    (1/n^2) prod_{m=0}^{n-1} [wp(z + 2m/n) - e_j] / prod_{m=1}^{n-1} [wp(2m/n) - e_j].
    """
    _check_j(j)
    n = require_odd_order(n)
    z = complex(z)
    ej = lattice_constants(tau, policy).e[j - 1]
    num = complex(1.0)
    for m in range(n):
        num *= wp(z + 2.0 * m / n, tau, policy) - ej
    den = complex(1.0)
    for m in range(1, n):
        den *= wp(2.0 * m / n, tau, policy) - ej
    return num / den / (n * n)


def wp_prime_n_division(
    z: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """wp'(nz, n tau) = (1/n^3) prod_{m=0}^{n-1} wp'(z + 2m/n) / prod_{m=1}^{n-1} wp'(2m/n)."""
    n = require_odd_order(n)
    z = complex(z)
    num = complex(1.0)
    for m in range(n):
        num *= wp_prime(z + 2.0 * m / n, tau, policy)
    den = complex(1.0)
    for m in range(1, n):
        den *= wp_prime(2.0 * m / n, tau, policy)
    return num / den / (n**3)


def eq1_wp_quotient(
    j: int,
    z: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Half-range form of wp(nz, n tau) - e_j(n tau).

    (1/n^2) [wp(z) - e_j] prod_{m=1}^{(n-1)/2}
        [(wp(z) - wp(2m/n + omega_j)) / (wp(z) - wp(2m/n))]^2.
    """
    _check_j(j)
    n = require_odd_order(n)
    z = complex(z)
    wj = half_period(j, tau)
    wz = wp(z, tau, policy)
    ej = lattice_constants(tau, policy).e[j - 1]
    acc = (wz - ej) / (n * n)
    for m in range(1, (n - 1) // 2 + 1):
        shift = 2.0 * m / n
        acc *= ((wz - wp(shift + wj, tau, policy)) / (wz - wp(shift, tau, policy))) ** 2
    return acc


def _null_pair(j: int, tau: complex, policy: TruncationPolicy) -> complex:
    t2, t3, t4 = theta_nulls(tau, policy)
    if j == 1:
        return t3 * t4
    if j == 2:
        return t2 * t4
    return t2 * t3


def theta_prefactor(
    j: int, n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """(4/pi^2)^{n-1} A_j^2(0, n tau) / [A_j^2(0, tau)]^n.

    A_1 = theta3 theta4, A_2 = theta2 theta4, A_3 = theta2 theta3.  This is
    the constant that multiplies prod_{m=0}^{n-1} [wp(z + 2m/n) - e_j] to
    give wp(nz, n tau) - e_j(n tau).
    """
    _check_j(j)
    n = require_odd_order(n)
    a_tau = _null_pair(j, tau, policy)
    a_ntau = _null_pair(j, n * tau, policy)
    return (4.0 / _PI**2) ** (n - 1) * a_ntau**2 / a_tau ** (2 * n)


def cot_prefactor(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """(4/pi^2)^{n-1} prod_{k>=1} [cot^n(k pi tau)/cot(k n pi tau)]^4.

    Equal to theta_prefactor(1, n, tau); the two routes are kept separate
    so they can check each other.
    """
    n = require_odd_order(n)
    return (4.0 / _PI**2) ** (n - 1) * cot_ratio_quartic_product(n, tau, policy)


def wp_prime_theta_constant(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """(-1)^{(n-1)/2} (4/pi)^{n-1} theta1'^2(0, n tau) / [theta1'^2(0, tau)]^n.

    Multiplies prod_{m=0}^{n-1} wp'(z + 2m/n) to give wp'(nz, n tau).
    """
    n = require_odd_order(n)
    tp_tau = theta1_prime_zero(tau, policy)
    tp_ntau = theta1_prime_zero(n * tau, policy)
    sign = (-1.0) ** ((n - 1) // 2)
    return sign * (4.0 / _PI) ** (n - 1) * tp_ntau**2 / tp_tau ** (2 * n)


def wp_ratio_theta_constant(
    j: int, n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """(-1)^{(n-1)/2} pi^{1-n} theta_{j+1}^2(0, n tau) / [theta_{j+1}^2(0, tau)]^n.

    Multiplies prod_{m=0}^{n-1} wp'/(wp - e_j) at the shifted points to give
    the same quotient at (nz, n tau).
    """
    _check_j(j)
    n = require_odd_order(n)
    t_tau = theta_nulls(tau, policy)[j - 1]
    t_ntau = theta_nulls(n * tau, policy)[j - 1]
    sign = (-1.0) ** ((n - 1) // 2)
    return sign * _PI ** (1 - n) * t_ntau**2 / t_tau ** (2 * n)


def byproduct_quotient(
    j: int, n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """(1/n) prod_{m=1}^{n-1} [wp(2m/n) - e_j] / wp'(2m/n).

    Division-point route to the same constant as wp_ratio_theta_constant.
    """
    _check_j(j)
    n = require_odd_order(n)
    ej = lattice_constants(tau, policy).e[j - 1]
    acc = complex(1.0 / n)
    for m in range(1, n):
        shift = 2.0 * m / n
        acc *= (wp(shift, tau, policy) - ej) / wp_prime(shift, tau, policy)
    return acc


def sigma_n_gauge(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[complex, complex, complex]:
    """Gauge (a, b, C0) with sigma(nu, n tau) = C0 e^{a u^2 + b u} prod_m sigma(u + 2m/n).

    a = (n/2)(n eta1(n tau) - eta1(tau)), b = -(n-1) eta1(tau),
    C0 = n / prod_{m=1}^{n-1} sigma(2m/n, tau).
    """
    n = require_odd_order(n)
    eta_tau = lattice_constants(tau, policy).eta1
    eta_ntau = lattice_constants(n * tau, policy).eta1
    a = 0.5 * n * (n * eta_ntau - eta_tau)
    b = -(n - 1) * eta_tau
    den = complex(1.0)
    for m in range(1, n):
        den *= sigma(2.0 * m / n, tau, policy)
    return (a, b, n / den)


def sigma_n_product(
    u: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """sigma(nu, n tau) via the gauge from sigma_n_gauge."""
    n = require_odd_order(n)
    u = complex(u)
    a, b, c0 = sigma_n_gauge(n, tau, policy)
    acc = c0 * cmath.exp(a * u * u + b * u)
    for m in range(n):
        acc *= sigma(u + 2.0 * m / n, tau, policy)
    return acc


def sigma_j_n_product(
    j: int,
    u: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """sigma_j(nu, n tau) = C_j e^{a u^2 + b u} prod_{m=0}^{n-1} sigma_j(u + 2m/n).

    Same exponent gauge as sigma_n_product; C_j = 1/prod_{m=0}^{n-1} sigma_j(2m/n).
    """
    _check_j(j)
    n = require_odd_order(n)
    u = complex(u)
    a, b, _ = sigma_n_gauge(n, tau, policy)
    cj = complex(1.0)
    for m in range(n):
        cj *= sigma_b(j, 2.0 * m / n, tau, policy)
    acc = cmath.exp(a * u * u + b * u) / cj
    for m in range(n):
        acc *= sigma_b(j, u + 2.0 * m / n, tau, policy)
    return acc


def xi_n_product(
    b: int,
    g: int,
    u: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """xi_{b g}(nu, n tau) from the division-point product.

    Base product: xi(u) prod_{m=1}^{n-1} xi(u + 2m/n)/xi(2m/n).  The pair
    (b, g) fixes the constant: 1/n when g = 0, n when b = 0, 1 otherwise.
    """
    n = require_odd_order(n)
    u = complex(u)
    acc = xi(b, g, u, tau, policy)
    for m in range(1, n):
        shift = 2.0 * m / n
        acc *= xi(b, g, u + shift, tau, policy) / xi(b, g, shift, tau, policy)
    if g == 0:
        return acc / n
    if b == 0:
        return acc * n
    return acc


def xi_logderiv_shift_sum(
    b: int,
    g: int,
    u: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """(xi'/xi)(nu, n tau) = (1/n) sum_{m=0}^{n-1} (xi'/xi)(u + 2m/n, tau)."""
    n = require_odd_order(n)
    u = complex(u)
    total = complex(0.0)
    for m in range(n):
        w = u + 2.0 * m / n
        total += xi_prime(b, g, w, tau, policy) / xi(b, g, w, tau, policy)
    return total / n


def xi_tau_div(
    b: int,
    g: int,
    u: complex,
    tau: complex,
    n: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """xi_{b g}(u, tau/n) = xi(u) prod_{m=1}^{n-1} xi(u + 2m tau/n)/xi(2m tau/n)."""
    return xi_tau_shift(b, g, u, tau, n, 0, policy)


def xi_tau_shift(
    b: int,
    g: int,
    u: complex,
    tau: complex,
    n: int,
    p: int,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """xi_{b g}(u, (tau + 2p)/n) via shifts 2 m (tau + 2p)/n on the tau lattice."""
    n = require_odd_order(n)
    u = complex(u)
    T = (tau + 2.0 * p) / n
    acc = xi(b, g, u, tau, policy)
    for m in range(1, n):
        shift = 2.0 * m * T
        acc *= xi(b, g, u + shift, tau, policy) / xi(b, g, shift, tau, policy)
    return acc


def period_l_product(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """l = k(tau)^n prod_{m=1}^{n-1} xi_{1 2}^2(2m/n); equals k(n tau)."""
    n = require_odd_order(n)
    acc = modulus_k(tau, policy) ** n
    for m in range(1, n):
        acc *= xi(1, 2, 2.0 * m / n, tau, policy) ** 2
    return acc


def period_l_mid(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """l = xi_{2 1}(omega_3) prod_{m=1}^{n-1} xi_{2 1}(tau + 2m/n)/xi_{2 1}(2m/n)."""
    n = require_odd_order(n)
    acc = xi(2, 1, half_period(3, tau), tau, policy)
    for m in range(1, n):
        shift = 2.0 * m / n
        acc *= xi(2, 1, tau + shift, tau, policy) / xi(2, 1, shift, tau, policy)
    return acc


def period_lprime_product(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """l' = k'(tau)^n prod_{m=1}^{n-1} xi_{3 2}^2(2m/n); equals k'(n tau)."""
    n = require_odd_order(n)
    acc = modulus_kprime(tau, policy) ** n
    for m in range(1, n):
        acc *= xi(3, 2, 2.0 * m / n, tau, policy) ** 2
    return acc


def zeros_ratio_product(
    n: int, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """[n prod_{m=1}^{(n-1)/2} xi_{0 3}^2((2m-1)/n)/xi_{0 3}^2(2m/n)]^2.

    Equals (e1 - e3)(tau) / (e1 - e3)(n tau); the square keeps the check
    branch-free.
    """
    n = require_odd_order(n)
    acc = complex(n)
    for m in range(1, (n - 1) // 2 + 1):
        acc *= (
            xi(0, 3, (2.0 * m - 1.0) / n, tau, policy) ** 2
            / xi(0, 3, 2.0 * m / n, tau, policy) ** 2
        )
    return acc**2

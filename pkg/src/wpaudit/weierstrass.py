"""Weierstrass layer: wp, wp', zeta, the sigma family, lattice constants.

All functions use primitive periods (2, 2*tau) with half periods
omega_1 = 1, omega_2 = 1 + tau, omega_3 = tau, and route through the theta
layer.  wp and wp' reduce the argument to the fundamental cell first; zeta
reduces and reconstructs with the quasi-period increments; sigma is entire
and evaluated directly.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    DEFAULT_POLICY,
    DomainError,
    TruncationPolicy,
    guard_pole,
    reduce_to_cell,
    require_upper_half,
)
from .theta import (
    theta,
    theta_dv,
    theta_nulls,
    theta1_prime_zero,
    theta1_triple_prime_zero,
)

__all__ = [
    "LatticeConstants",
    "e_values",
    "eta_increments",
    "g_invariants",
    "half_period",
    "lattice_constants",
    "sigma",
    "sigma_b",
    "sigma_logderiv",
    "wp",
    "wp_pp",
    "wp_prime",
    "zeta",
]

_PI = math.pi


@dataclass(frozen=True)
class LatticeConstants:
    """Per-tau constants shared by the whole evaluation stack."""

    tau: complex
    e1: complex
    e2: complex
    e3: complex
    eta1: complex  # zeta increment across period 2
    eta3: complex  # zeta increment across period 2*tau
    g2: complex
    g3: complex
    th2_0: complex
    th3_0: complex
    th4_0: complex
    th1p_0: complex

    @property
    def e(self) -> tuple[complex, complex, complex]:
        return (self.e1, self.e2, self.e3)


@lru_cache(maxsize=4096)
def lattice_constants(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> LatticeConstants:
    tau = require_upper_half(tau)
    t2, t3, t4 = theta_nulls(tau, policy)
    th1p = theta1_prime_zero(tau, policy)
    quarter_pi2 = _PI * _PI / 12.0
    e1 = quarter_pi2 * (t3**4 + t4**4)
    e2 = quarter_pi2 * (t2**4 - t4**4)
    e3 = -quarter_pi2 * (t2**4 + t3**4)
    eta1 = -theta1_triple_prime_zero(tau, policy) / (12.0 * th1p)
    eta3 = eta1 * tau - 1j * _PI / 2.0
    g2 = -4.0 * (e1 * e2 + e2 * e3 + e3 * e1)
    g3 = 4.0 * e1 * e2 * e3
    return LatticeConstants(
        tau=tau,
        e1=e1,
        e2=e2,
        e3=e3,
        eta1=eta1,
        eta3=eta3,
        g2=g2,
        g3=g3,
        th2_0=t2,
        th3_0=t3,
        th4_0=t4,
        th1p_0=th1p,
    )


def e_values(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[complex, complex, complex]:
    c = lattice_constants(tau, policy)
    return c.e


def eta_increments(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[complex, complex]:
    c = lattice_constants(tau, policy)
    return (c.eta1, c.eta3)


def g_invariants(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[complex, complex]:
    c = lattice_constants(tau, policy)
    return (c.g2, c.g3)


def half_period(j: int, tau: complex) -> complex:
    tau = require_upper_half(tau)
    if j == 1:
        return complex(1.0)
    if j == 2:
        return 1.0 + tau
    if j == 3:
        return tau
    raise DomainError(f"half-period index must be 1..3, got {j!r}")


def wp(z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """wp(z) = e1 + (1/4) [theta2(v)/theta2(0) * theta1'(0)/theta1(v)]^2."""
    guard_pole(z, tau)
    c = lattice_constants(tau, policy)
    red = reduce_to_cell(z, tau).reduced
    v = red / 2.0
    ratio = c.th1p_0 * theta(2, v, tau, policy) / (c.th2_0 * theta(1, v, tau, policy))
    return c.e1 + 0.25 * ratio * ratio


def wp_prime(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """wp'(z) = -(theta1'(0)^3/8) theta1(2v)/theta1(v)^4 at v = z/2."""
    guard_pole(z, tau)
    c = lattice_constants(tau, policy)
    red = reduce_to_cell(z, tau).reduced
    t_half = theta(1, red / 2.0, tau, policy)
    t_full = theta(1, red, tau, policy)
    return -(c.th1p_0**3 / 8.0) * t_full / t_half**4


def wp_pp(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """wp''(z) = 6 wp(z)^2 - g2/2."""
    c = lattice_constants(tau, policy)
    w = wp(z, tau, policy)
    return 6.0 * w * w - c.g2 / 2.0


def zeta(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """Weierstrass zeta; reduced to the cell, then shifted back with the
    quasi-period increments."""
    guard_pole(z, tau)
    c = lattice_constants(tau, policy)
    point = reduce_to_cell(z, tau)
    v = point.reduced / 2.0
    base = c.eta1 * point.reduced + 0.5 * theta_dv(1, v, tau, policy) / theta(
        1, v, tau, policy
    )
    a, b = point.shifts
    return base + 2.0 * a * c.eta1 + 2.0 * b * c.eta3


def sigma(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma(z) = (2/theta1'(0)) exp(eta z^2/2) theta1(z/2); entire."""
    z = complex(z)
    c = lattice_constants(tau, policy)
    return (
        2.0
        / c.th1p_0
        * cmath.exp(c.eta1 * z * z / 2.0)
        * theta(1, z / 2.0, tau, policy)
    )


def sigma_b(
    b: int, z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_b for b in 0..3; sigma_0 is sigma itself."""
    if b == 0:
        return sigma(z, tau, policy)
    if b not in (1, 2, 3):
        raise DomainError(f"sigma index must be 0..3, got {b!r}")
    z = complex(z)
    c = lattice_constants(tau, policy)
    j = b + 1
    null = (c.th2_0, c.th3_0, c.th4_0)[b - 1]
    return cmath.exp(c.eta1 * z * z / 2.0) * theta(j, z / 2.0, tau, policy) / null


def sigma_logderiv(
    b: int, z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_b'(z)/sigma_b(z); b = 0 gives zeta(z)."""
    if b == 0:
        return zeta(z, tau, policy)
    if b not in (1, 2, 3):
        raise DomainError(f"sigma index must be 0..3, got {b!r}")
    # zeros of sigma_b sit at omega_b + lattice
    guard_pole(complex(z) - half_period(b, tau), tau)
    c = lattice_constants(tau, policy)
    z = complex(z)
    v = z / 2.0
    j = b + 1
    return c.eta1 * z + 0.5 * theta_dv(j, v, tau, policy) / theta(j, v, tau, policy)

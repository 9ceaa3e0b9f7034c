"""Quotients of sigma functions and the moduli built from them.

xi(b, g) is sigma_b/sigma_g with indices in 0..3 (index 0 meaning the
plain sigma).  Quotients are evaluated branch-free from the sigma layer,
so no square root of wp - e is ever taken; relations stated with square
roots are checked squared by the callers that need them.

The derivative uses the logarithmic route xi' = xi * (ld_b - ld_g),
which is exact wherever both log-derivatives are finite.  Near a zero
of sigma_b the factors degenerate to 0 * inf; the pole guard on the
sigma layer rejects those points instead of returning garbage.
"""
from __future__ import annotations

from .core import DEFAULT_POLICY, DomainError, TruncationPolicy, guard_pole
from .theta import theta_nulls
from .weierstrass import half_period, sigma_b, sigma_logderiv

__all__ = [
    "delta_richardson",
    "modulus_k",
    "modulus_k_xi",
    "modulus_kprime",
    "modulus_kprime_xi",
    "xi",
    "xi_prime",
]


def _check_pair(b: int, g: int) -> None:
    if b not in (0, 1, 2, 3) or g not in (0, 1, 2, 3):
        raise DomainError(f"xi indices must lie in 0..3, got ({b!r}, {g!r})")
    if b == g:
        raise DomainError("xi indices must differ")


def _zero_of_sigma(idx: int, tau: complex) -> complex:
    return complex(0.0) if idx == 0 else half_period(idx, tau)


def xi(
    b: int,
    g: int,
    z: complex,
    tau: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """xi_{b g}(z) = sigma_b(z)/sigma_g(z); pole where sigma_g vanishes."""
    _check_pair(b, g)
    z = complex(z)
    guard_pole(z - _zero_of_sigma(g, tau), tau)
    return sigma_b(b, z, tau, policy) / sigma_b(g, z, tau, policy)


def xi_prime(
    b: int,
    g: int,
    z: complex,
    tau: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """d/dz xi_{b g}(z) via xi * (sigma_b'/sigma_b - sigma_g'/sigma_g)."""
    _check_pair(b, g)
    z = complex(z)
    ld_b = sigma_logderiv(b, z, tau, policy)
    ld_g = sigma_logderiv(g, z, tau, policy)
    return xi(b, g, z, tau, policy) * (ld_b - ld_g)


def delta_richardson(f, delta: float = 1e-5) -> complex:
    """2 f(delta/2) - f(delta); cancels the leading O(delta^2) error of f."""
    if delta <= 0.0:
        raise DomainError("delta must be positive")
    return 2.0 * complex(f(delta / 2.0)) - complex(f(delta))


def modulus_k(tau: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """k = (theta2(0)/theta3(0))^2.

    Squares before dividing: one rounded division instead of a rounded
    quotient fed to a rounded square, which lands k(i) on the correctly
    rounded double.
    """
    t2, t3, _ = theta_nulls(tau, policy)
    return (t2 * t2) / (t3 * t3)


def modulus_kprime(tau: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """k' = (theta4(0)/theta3(0))^2; same squaring order as modulus_k."""
    _, t3, t4 = theta_nulls(tau, policy)
    return (t4 * t4) / (t3 * t3)


def modulus_k_xi(tau: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """k = xi_{2 1}(omega_3), the half-period route; cross-checks modulus_k."""
    return xi(2, 1, half_period(3, tau), tau, policy)


def modulus_kprime_xi(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """k' = xi_{2 3}(omega_1), the half-period route; cross-checks modulus_kprime."""
    return xi(2, 3, half_period(1, tau), tau, policy)

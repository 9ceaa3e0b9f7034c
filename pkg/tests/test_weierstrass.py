"""Weierstrass layer: frozen spots, the ODE, quasi-periods, branch values."""

import cmath
import math

import numpy as np
import pytest

import oracle_values as o
from wpaudit.core import DomainError, PoleProximityError
from wpaudit.weierstrass import (
    e_values,
    eta_increments,
    g_invariants,
    half_period,
    lattice_constants,
    sigma,
    sigma_b,
    sigma_logderiv,
    wp,
    wp_pp,
    wp_prime,
    zeta,
)


def _close(got, want, tol=1e-12):
    assert abs(got - want) <= tol * (1.0 + abs(want)), f"{got} vs {want}"


def _points(count, seed=5150):
    """Seeded (z, tau) pairs kept away from the lattice."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        tau = complex(rng.uniform(-1.0, 1.0), rng.uniform(0.8, 2.0))
        z = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.7, 0.7) * tau.imag)
        from wpaudit.core import pole_distance

        if pole_distance(z, tau) < 0.1:
            continue
        out.append((z, tau))
    return out


def test_frozen_lattice_constants():
    c = lattice_constants(o.TAU0)
    _close(c.e1, o.E1)
    _close(c.e2, o.E2)
    _close(c.e3, o.E3)
    _close(c.eta1, o.ETA1)
    assert e_values(o.TAU0) == (c.e1, c.e2, c.e3)
    assert eta_increments(o.TAU0)[0] == c.eta1


def test_frozen_point_values():
    _close(wp(o.Z0, o.TAU0), o.WP)
    _close(wp_prime(o.Z0, o.TAU0), o.WPP)
    _close(zeta(o.Z0, o.TAU0), o.ZETA)
    _close(sigma(o.Z0, o.TAU0), o.SIGMA)
    _close(sigma_b(1, o.Z0, o.TAU0), o.SIGMA1)
    _close(sigma_b(2, o.Z0, o.TAU0), o.SIGMA2)
    _close(sigma_b(3, o.Z0, o.TAU0), o.SIGMA3)
    _close(wp(0.5, 1j), o.WP_HALF_I)
    _close(wp_prime(complex(0.4, 0.2), 1.1j), o.WPP_Z4_11I)


def test_branch_values_sum_to_zero():
    for tau in (o.TAU0, o.TAUN, 1j, 1.3j, complex(-0.4, 0.9)):
        e1, e2, e3 = e_values(tau)
        assert abs(e1 + e2 + e3) <= 1e-12 * max(abs(e1), abs(e3))


def test_square_lattice_symmetries():
    e1, e2, e3 = e_values(1j)
    _close(e1, o.E1_I)
    assert abs(e2) <= 1e-14
    _close(e3, -e1)
    # eta1(i) = pi/4 exactly
    assert lattice_constants(1j).eta1 == pytest.approx(math.pi / 4, abs=1e-14)


def test_differential_equation():
    for z, tau in _points(40):
        p = wp(z, tau)
        dp = wp_prime(z, tau)
        e1, e2, e3 = e_values(tau)
        lhs = dp * dp
        rhs = 4.0 * (p - e1) * (p - e2) * (p - e3)
        assert abs(lhs - rhs) <= 1e-9 * (1.0 + max(abs(lhs), abs(rhs)))


def test_second_derivative_and_invariants():
    g2, g3 = g_invariants(o.TAU0)
    e1, e2, e3 = e_values(o.TAU0)
    _close(g2, -4.0 * (e1 * e2 + e1 * e3 + e2 * e3))
    _close(g3, 4.0 * e1 * e2 * e3)
    for z, tau in _points(10, seed=321):
        p = wp(z, tau)
        g2, _ = g_invariants(tau)
        _close(wp_pp(z, tau), 6.0 * p * p - g2 / 2.0, tol=1e-9)


def test_half_periods_hit_branch_values():
    for tau in (o.TAU0, 1.3j):
        e = e_values(tau)
        for j in (1, 2, 3):
            _close(wp(half_period(j, tau), tau), e[j - 1], tol=1e-11)
    with pytest.raises(DomainError):
        half_period(4, o.TAU0)


def test_wp_even_sigma_odd():
    z, tau = complex(0.31, 0.22), o.TAU0
    _close(wp(-z, tau), wp(z, tau))
    _close(sigma(-z, tau), -sigma(z, tau))
    _close(zeta(-z, tau), -zeta(z, tau))


def test_zeta_quasi_periods():
    tau = o.TAU0
    eta1, eta3 = eta_increments(tau)
    z = complex(0.27, 0.18)
    _close(zeta(z + 2.0, tau), zeta(z, tau) + 2.0 * eta1, tol=1e-11)
    _close(zeta(z + 2.0 * tau, tau), zeta(z, tau) + 2.0 * eta3, tol=1e-11)
    # Legendre relation ties the two increments together
    _close(eta3, eta1 * tau - 1j * math.pi / 2.0)


def test_sigma_quasi_periods():
    tau = o.TAU0
    eta1, eta3 = eta_increments(tau)
    z = complex(0.27, 0.18)
    _close(
        sigma(z + 2.0, tau),
        -sigma(z, tau) * cmath.exp(2.0 * eta1 * (z + 1.0)),
        tol=1e-11,
    )
    _close(
        sigma(z + 2.0 * tau, tau),
        -sigma(z, tau) * cmath.exp(2.0 * eta3 * (z + tau)),
        tol=1e-10,
    )


def test_sigma_b_quasi_period_signs():
    # across z + 2: sigma1 flips sign like sigma, sigma2 and sigma3 do not
    tau = o.TAU0
    eta1, _ = eta_increments(tau)
    z = complex(0.27, 0.18)
    factor = cmath.exp(2.0 * eta1 * (z + 1.0))
    _close(sigma_b(1, z + 2.0, tau), -sigma_b(1, z, tau) * factor, tol=1e-11)
    _close(sigma_b(2, z + 2.0, tau), sigma_b(2, z, tau) * factor, tol=1e-11)
    _close(sigma_b(3, z + 2.0, tau), sigma_b(3, z, tau) * factor, tol=1e-11)


def test_wp_prime_sigma_quotient():
    # wp'(z) = -sigma(2z)/sigma(z)^4
    for z, tau in _points(15, seed=99):
        lhs = wp_prime(z, tau)
        rhs = -sigma(2.0 * z, tau) / sigma(z, tau) ** 4
        assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs))


def test_sigma_logderiv_matches_quotient():
    z, tau = complex(0.24, 0.31), o.TAU0
    _close(sigma_logderiv(0, z, tau), zeta(z, tau), tol=1e-11)
    h = 1e-6
    for j in (1, 2, 3):
        num = (sigma_b(j, z + h, tau) - sigma_b(j, z - h, tau)) / (2.0 * h)
        ld = sigma_logderiv(j, z, tau)
        assert abs(ld - num / sigma_b(j, z, tau)) <= 1e-7 * (1.0 + abs(ld))


def test_pole_guard_near_lattice():
    with pytest.raises(PoleProximityError):
        wp(1e-9 + 0j, o.TAU0)
    with pytest.raises(PoleProximityError):
        zeta(2.0 + 1e-9, o.TAU0)


def test_sigma_entire_at_lattice_zeros():
    # sigma vanishes at lattice points but needs no pole guard
    val = sigma(2.0, o.TAU0)
    assert abs(val) <= 1e-12

"""Sigma-quotient functions, their derivatives, and the moduli."""

import math

import numpy as np
import pytest

import oracle_values as o
from wpaudit.core import DomainError, PoleProximityError, format_value, pole_distance
from wpaudit.weierstrass import half_period, sigma_b
from wpaudit.xi import (
    delta_richardson,
    modulus_k,
    modulus_k_xi,
    modulus_kprime,
    modulus_kprime_xi,
    xi,
    xi_prime,
)


def _close(got, want, tol=1e-12):
    assert abs(got - want) <= tol * (1.0 + abs(want)), f"{got} vs {want}"


def _points(count, seed=31415):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        tau = complex(rng.uniform(-0.8, 0.8), rng.uniform(0.9, 1.7))
        z = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.5, 0.5) * tau.imag)
        if pole_distance(z, tau) < 0.15:
            continue
        out.append((z, tau))
    return out


def test_frozen_xi_values():
    _close(xi(1, 0, o.Z0, o.TAU0), o.XI10)
    _close(xi(2, 1, o.Z0, o.TAU0), o.XI21)
    _close(xi(0, 3, o.Z0, o.TAU0), o.XI03)


def test_xi_is_sigma_quotient():
    for z, tau in _points(10):
        for b, g in ((1, 0), (2, 3), (0, 2)):
            want = sigma_b(b, z, tau) / sigma_b(g, z, tau)
            _close(xi(b, g, z, tau), want)


def test_xi_reciprocal_pairs():
    for z, tau in _points(8, seed=616):
        for b, g in ((1, 2), (3, 0), (2, 1)):
            _close(xi(b, g, z, tau) * xi(g, b, z, tau), 1.0)


def test_xi_index_validation():
    with pytest.raises(DomainError):
        xi(1, 1, o.Z0, o.TAU0)
    with pytest.raises(DomainError):
        xi(4, 0, o.Z0, o.TAU0)
    with pytest.raises(DomainError):
        xi_prime(-1, 2, o.Z0, o.TAU0)


def test_xi_pole_guard():
    # xi_{b 0} has poles at the lattice where sigma vanishes
    with pytest.raises(PoleProximityError):
        xi(1, 0, 1e-9 + 0j, o.TAU0)
    # xi_{b 1} has poles at the sigma1 zeros, offset by the half period 1
    with pytest.raises(PoleProximityError):
        xi(2, 1, 1.0 + 1e-9, o.TAU0)


def test_xi_prime_matches_difference_quotient():
    h = 1e-6
    for z, tau in _points(10, seed=272):
        for b, g in ((2, 1), (1, 0), (0, 3)):
            want = (xi(b, g, z + h, tau) - xi(b, g, z - h, tau)) / (2.0 * h)
            got = xi_prime(b, g, z, tau)
            assert abs(got - want) <= 1e-6 * (1.0 + abs(got))


def test_delta_richardson_extrapolates():
    f = lambda d: 1.0 + d * d  # noqa: E731
    assert delta_richardson(f, 1e-3) == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(DomainError):
        delta_richardson(f, 0.0)


def test_xi_quasi_period_signs_across_2tau():
    tau = o.TAU0
    z = complex(0.23, 0.31)
    for b, sign in ((1, -1.0), (2, -1.0), (3, 1.0)):
        lhs = xi(b, 0, z + 2.0 * tau, tau)
        _close(lhs, sign * xi(b, 0, z, tau), tol=1e-10)


def test_xi_half_period_jump_brings_in_the_moduli():
    tau = o.TAU0
    u = complex(0.19, 0.23)
    k = modulus_k(tau)
    kp = modulus_kprime(tau)
    _close(xi(2, 1, u + tau, tau), k * xi(1, 2, u, tau), tol=1e-10)
    _close(xi(2, 3, u + 1.0, tau), kp * xi(3, 2, u, tau), tol=1e-10)


def test_moduli_frozen_spots():
    _close(modulus_k(o.TAU0), o.K_TAU0)
    _close(modulus_kprime(o.TAU0), o.KP_TAU0)
    _close(modulus_k(1.3j), o.K_13I)
    _close(modulus_kprime(1.3j), o.KP_13I)


def test_square_lattice_modulus_exact():
    val = modulus_k(1j)
    assert val.imag == 0.0
    assert abs(val.real - o.K_I) <= 1e-15
    assert format_value(val) == "0.707106781186548"


def test_pythagorean_modulus_relation():
    rng = np.random.default_rng(4321)
    for _ in range(20):
        tau = complex(rng.uniform(-1.0, 1.0), rng.uniform(0.8, 2.0))
        k = modulus_k(tau)
        kp = modulus_kprime(tau)
        assert abs(k * k + kp * kp - 1.0) <= 1e-12


def test_half_period_route_matches_null_route():
    for tau in (o.TAU0, 1.3j, complex(-0.37, 1.21)):
        _close(modulus_k_xi(tau), modulus_k(tau))
        _close(modulus_kprime_xi(tau), modulus_kprime(tau))


def test_half_period_values_table():
    # xi_{2 1}(omega_3) = k and xi_{2 3}(omega_1) = k' by construction;
    # the cross pair pins the other two table entries
    tau = o.TAU0
    _close(xi(2, 1, half_period(3, tau), tau), modulus_k(tau))
    _close(xi(2, 3, half_period(1, tau), tau), modulus_kprime(tau))
    _close(xi(1, 2, half_period(3, tau), tau), 1.0 / modulus_k(tau))
    _close(xi(3, 2, half_period(1, tau), tau), 1.0 / modulus_kprime(tau))

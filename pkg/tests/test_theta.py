"""Theta layer: frozen spots, null identities, shift tables, truncation."""

import cmath
import math

import numpy as np
import pytest

import oracle_values as o
from wpaudit.core import DomainError, TruncationPolicy
from wpaudit.theta import (
    nome,
    theta,
    theta_dv,
    theta_nulls,
    theta1_prime_zero,
    theta1_triple_prime_zero,
)

PI = math.pi


def _close(got, want, tol=1e-13):
    assert abs(got - want) <= tol * (1.0 + abs(want)), f"{got} vs {want}"


def _tau_samples(count, seed=1234):
    rng = np.random.default_rng(seed)
    return [
        complex(rng.uniform(-1.0, 1.0), rng.uniform(0.8, 2.0)) for _ in range(count)
    ]


def test_nome():
    assert nome(1j) == pytest.approx(math.exp(-PI))
    tau = o.TAU0
    assert nome(tau) == pytest.approx(cmath.exp(1j * PI * tau))


def test_frozen_theta_values():
    _close(theta(1, o.V0, o.TAU0), o.TH1_V0)
    _close(theta(2, o.V0, o.TAU0), o.TH2_V0)
    _close(theta(3, o.V0, o.TAU0), o.TH3_V0)
    _close(theta(4, o.V0, o.TAU0), o.TH4_V0)
    _close(theta_dv(1, o.V0, o.TAU0), o.TH1P_V0)


def test_frozen_nulls_and_derivatives():
    t2, t3, t4 = theta_nulls(o.TAU0)
    _close(t2, o.TH2_0)
    _close(t3, o.TH3_0)
    _close(t4, o.TH4_0)
    _close(theta1_prime_zero(o.TAU0), o.TH1P_0)
    _close(theta1_triple_prime_zero(o.TAU0), o.TH1PPP_0)


def test_square_lattice_nulls():
    t2, t3, t4 = theta_nulls(1j)
    _close(t2, o.TH2_0_I)
    _close(t3, o.TH3_0_I)
    _close(t4, o.TH4_0_I)
    # theta2 and theta4 coincide on the square lattice
    assert t2 == t4


def test_theta1_odd_theta234_even():
    v = complex(0.21, 0.13)
    assert theta(1, 0.0, o.TAU0) == 0.0
    _close(theta(1, -v, o.TAU0), -theta(1, v, o.TAU0))
    for j in (2, 3, 4):
        _close(theta(j, -v, o.TAU0), theta(j, v, o.TAU0))


def test_theta1_prime_null_product_50_tau():
    for tau in _tau_samples(50):
        t2, t3, t4 = theta_nulls(tau)
        lhs = theta1_prime_zero(tau)
        rhs = PI * t2 * t3 * t4
        assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


def test_jacobi_quartic_null_identity():
    for tau in _tau_samples(50, seed=77):
        t2, t3, t4 = theta_nulls(tau)
        assert abs(t3**4 - t2**4 - t4**4) <= 1e-12 * abs(t3**4)


def test_half_shift_table():
    tau = o.TAU0
    v = complex(0.185, 0.145)
    _close(theta(1, v + 0.5, tau), theta(2, v, tau))
    _close(theta(2, v + 0.5, tau), -theta(1, v, tau))
    _close(theta(3, v + 0.5, tau), theta(4, v, tau))
    _close(theta(4, v + 0.5, tau), theta(3, v, tau))


def test_half_tau_shift_table():
    tau = o.TAU0
    v = complex(0.185, 0.145)
    ph = nome(tau) ** -0.25 * cmath.exp(-1j * PI * v)
    _close(theta(1, v + tau / 2, tau), 1j * ph * theta(4, v, tau))
    _close(theta(2, v + tau / 2, tau), ph * theta(3, v, tau))
    _close(theta(3, v + tau / 2, tau), ph * theta(2, v, tau))
    _close(theta(4, v + tau / 2, tau), 1j * ph * theta(1, v, tau))


def test_full_period_factors():
    tau = o.TAU0
    v = complex(0.185, 0.145)
    q = nome(tau)
    _close(theta(1, v + 1, tau), -theta(1, v, tau))
    mult = -cmath.exp(-2j * PI * v) / q
    _close(theta(1, v + tau, tau), mult * theta(1, v, tau), tol=1e-12)
    _close(theta(3, v + tau, tau), -mult * theta(3, v, tau), tol=1e-12)


def test_index_validation():
    with pytest.raises(DomainError):
        theta(0, 0.1, o.TAU0)
    with pytest.raises(DomainError):
        theta(5, 0.1, o.TAU0)
    with pytest.raises(DomainError):
        theta_dv(1, 0.1, o.TAU0, order=0)


def test_requires_upper_half_tau():
    with pytest.raises(DomainError):
        theta(3, 0.1, complex(0.5, -1.0))
    with pytest.raises(DomainError):
        theta_nulls(0.7 + 0j)


def test_k_fixed_convergence():
    # fixed truncation converges to the adaptive value as K grows
    ref = theta(3, o.V0, o.TAU0)
    errors = [
        abs(theta(3, o.V0, o.TAU0, TruncationPolicy(k_fixed=k)) - ref)
        for k in (1, 2, 3, 6)
    ]
    assert errors[-1] <= 1e-15
    assert errors[0] > errors[-1]
    # theta tails die off supergeometrically, so 3 terms is already tight
    assert errors[2] <= 1e-10


def test_null_cache_returns_same_tuple():
    assert theta_nulls(o.TAU0) is theta_nulls(o.TAU0)

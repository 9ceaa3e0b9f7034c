"""Odd-order transforms: every route against the direct (nz, n tau) evaluation."""

import numpy as np
import pytest

import oracle_values as o
from wpaudit.core import DomainError, pole_distance
from wpaudit.ntransforms import (
    ORDER_CAP,
    byproduct_quotient,
    cot_prefactor,
    eq1_wp_quotient,
    period_l_mid,
    period_l_product,
    period_lprime_product,
    require_odd_order,
    sigma_j_n_product,
    sigma_n_product,
    theta_prefactor,
    wp_n_division,
    wp_prime_n_division,
    wp_prime_theta_constant,
    wp_ratio_theta_constant,
    xi_logderiv_shift_sum,
    xi_n_product,
    xi_tau_div,
    xi_tau_shift,
    zeros_ratio_product,
)
from wpaudit.weierstrass import e_values, lattice_constants, sigma, sigma_b, wp, wp_prime
from wpaudit.xi import modulus_k, modulus_kprime, xi, xi_prime


def _close(got, want, tol=1e-10):
    assert abs(got - want) <= tol * (1.0 + abs(want)), f"{got} vs {want}"


def _transform_points(n, count, seed=137):
    """(u, tau) pairs where u, its shifts, and nu all stay off both lattices."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 1.5))
        u = complex(rng.uniform(-0.45, 0.45), rng.uniform(-0.3, 0.3))
        if any(pole_distance(u + 2.0 * m / n, tau) < 0.08 for m in range(n)):
            continue
        if pole_distance(n * u, n * tau) < 0.08:
            continue
        out.append((u, tau))
    return out


@pytest.mark.parametrize("bad", [0, 2, 4, 17, -3])
def test_require_odd_order_rejects(bad):
    with pytest.raises(DomainError):
        require_odd_order(bad)


def test_order_cap():
    assert ORDER_CAP == 15
    assert require_odd_order(15) == 15


@pytest.mark.parametrize("n", [3, 5])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_wp_n_division(n, j):
    for u, tau in _transform_points(n, 6, seed=10 * n + j):
        want = wp(n * u, n * tau) - e_values(n * tau)[j - 1]
        got = wp_n_division(j, u, tau, n)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5])
def test_wp_prime_n_division(n):
    for u, tau in _transform_points(n, 6, seed=20 + n):
        want = wp_prime(n * u, n * tau)
        got = wp_prime_n_division(u, tau, n)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5])
def test_eq1_half_range_quotient(n):
    for u, tau in _transform_points(n, 5, seed=30 + n):
        want = wp_n_division(1, u, tau, n)
        got = eq1_wp_quotient(1, u, tau, n)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5])
def test_theta_prefactor_routes_agree(n):
    for tau in (o.TAU0, o.TAUN, complex(-0.28, 1.3)):
        a = theta_prefactor(1, n, tau)
        b = cot_prefactor(n, tau)
        assert abs(a - b) <= 1e-12 * (1.0 + abs(a))


@pytest.mark.parametrize("n", [3, 5])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_theta_prefactor_closes_the_product(n, j):
    for u, tau in _transform_points(n, 4, seed=40 + 7 * n + j):
        prod = complex(1.0)
        ej = e_values(tau)[j - 1]
        for m in range(n):
            prod *= wp(u + 2.0 * m / n, tau) - ej
        lhs = theta_prefactor(j, n, tau) * prod
        want = wp(n * u, n * tau) - e_values(n * tau)[j - 1]
        assert abs(lhs - want) <= 1e-8 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5])
def test_wp_prime_theta_constant_closes_the_product(n):
    for u, tau in _transform_points(n, 4, seed=50 + n):
        prod = complex(1.0)
        for m in range(n):
            prod *= wp_prime(u + 2.0 * m / n, tau)
        lhs = wp_prime_theta_constant(n, tau) * prod
        want = wp_prime(n * u, n * tau)
        assert abs(lhs - want) <= 1e-8 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_ratio_constant_two_routes(n, j):
    for tau in (o.TAU0, o.TAUN):
        a = wp_ratio_theta_constant(j, n, tau)
        b = byproduct_quotient(j, n, tau)
        assert abs(a - b) <= 1e-10 * (1.0 + abs(a))


def test_sigma_n_product_frozen_spot():
    got = sigma_n_product(o.ZN, o.TAUN, 3)
    _close(got, o.SIGMA_3Z_3TAU, tol=1e-11)


@pytest.mark.parametrize("n", [3, 5])
def test_sigma_n_product(n):
    for u, tau in _transform_points(n, 4, seed=60 + n):
        want = sigma(n * u, n * tau)
        got = sigma_n_product(u, tau, n)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


@pytest.mark.parametrize("j", [1, 2, 3])
def test_sigma_j_n_product(j):
    n = 3
    for u, tau in _transform_points(n, 4, seed=70 + j):
        want = sigma_b(j, n * u, n * tau)
        got = sigma_j_n_product(j, u, tau, n)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


def test_xi_n_product_frozen_spot():
    got = xi_n_product(2, 1, o.ZN, o.TAUN, 3)
    _close(got, o.XI21_3Z_3TAU, tol=1e-10)


@pytest.mark.parametrize("pair", [(2, 1), (1, 0), (0, 3), (3, 2)])
def test_xi_n_product_all_constant_modes(pair):
    b, g = pair
    n = 3
    for u, tau in _transform_points(n, 4, seed=80 + 10 * b + g):
        want = xi(b, g, n * u, n * tau)
        got = xi_n_product(b, g, u, tau, n)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5])
def test_xi_logderiv_shift_sum(n):
    for u, tau in _transform_points(n, 4, seed=90 + n):
        w = n * u
        want = xi_prime(2, 1, w, n * tau) / xi(2, 1, w, n * tau)
        got = xi_logderiv_shift_sum(2, 1, u, tau, n)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


@pytest.mark.parametrize("p", [0, 1])
def test_xi_tau_shift_modes(p):
    n = 3
    rng = np.random.default_rng(100 + p)
    done = 0
    while done < 4:
        tau = complex(rng.uniform(-0.3, 0.3), rng.uniform(1.6, 2.4))
        u = complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.2, 0.2))
        T = (tau + 2.0 * p) / n
        if pole_distance(u, T) < 0.1 or any(
            pole_distance(u + 2.0 * m * T, tau) < 0.08 for m in range(n)
        ):
            continue
        want = xi(2, 1, u, T)
        got = xi_tau_shift(2, 1, u, tau, n, p)
        assert abs(got - want) <= 1e-8 * (1.0 + abs(want))
        done += 1


def test_xi_tau_div_is_p_zero():
    u, tau = complex(0.21, 0.11), complex(0.12, 2.1)
    assert xi_tau_div(2, 1, u, tau, 3) == xi_tau_shift(2, 1, u, tau, 3, 0)


@pytest.mark.parametrize("n", [3, 5])
def test_period_relations(n):
    for tau in (o.TAUN, complex(0.2, 1.25)):
        _close(period_l_product(n, tau), modulus_k(n * tau), tol=1e-10)
        _close(period_lprime_product(n, tau), modulus_kprime(n * tau), tol=1e-10)
    _close(period_l_mid(n, o.TAUN), modulus_k(n * o.TAUN), tol=1e-10)


def test_period_l_frozen_spot():
    _close(period_l_product(3, o.TAUN), o.K_3TAU, tol=1e-11)
    _close(lattice_constants(3 * o.TAUN).e1, o.E1_3TAUN, tol=1e-12)
    _close(lattice_constants(3 * o.TAUN).eta1, o.ETA1_3TAU, tol=1e-12)


@pytest.mark.parametrize("n", [3, 5])
def test_zeros_ratio_product(n):
    for tau in (o.TAUN, complex(-0.15, 1.1)):
        e1, _, e3 = e_values(tau)
        f1, _, f3 = e_values(n * tau)
        want = (e1 - e3) / (f1 - f3)
        got = zeros_ratio_product(n, tau)
        assert abs(got - want) <= 1e-9 * (1.0 + abs(want))


def test_composition_three_then_three_is_nine():
    # applying the order-3 modulus map at tau and again at 3 tau lands on 9 tau
    tau = o.TAUN
    via_two_steps = period_l_product(3, 3 * tau)
    direct = period_l_product(9, tau)
    assert abs(via_two_steps - direct) <= 1e-7 * (1.0 + abs(direct))
    _close(direct, modulus_k(9 * tau), tol=1e-7)


def test_direct_spot_values():
    _close(wp(3 * o.ZN, 3 * o.TAUN), o.WP_3Z_3TAU, tol=1e-12)
    _close(wp(o.ZN, o.TAUN), o.WP_ZN_TAUN, tol=1e-12)
    _close(lattice_constants(o.TAUN).e1, o.E1_TAUN, tol=1e-12)

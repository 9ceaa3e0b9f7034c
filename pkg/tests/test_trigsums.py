"""Multiplication identities, reciprocal-sine lattice sums, strip handling."""

import cmath
import math

import numpy as np
import pytest

import oracle_values as o
from wpaudit.core import DomainError
from wpaudit.trigsums import (
    SineSumSpec,
    cos_multiplication_product,
    cot_multiplication_product,
    csc_squared_sum,
    eta_csc_series,
    require_strip,
    series_terms,
    sigma1_logderiv_algebraic_series,
    sigma2_logderiv_algebraic_series,
    sigma2_logderiv_tan_series,
    sigma3_logderiv_algebraic_series,
    sigma_logderiv_algebraic_series,
    sigma_logderiv_cot_series,
    sin_even_shift_product,
    sin_multiplication_product,
    sine_reciprocal_shift_sum,
    sine_reciprocal_sum,
)
from wpaudit.weierstrass import lattice_constants, sigma_logderiv

PI = math.pi


def _angles(count, seed=8080):
    rng = np.random.default_rng(seed)
    return [
        complex(rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)) for _ in range(count)
    ]


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_sin_multiplication(n):
    for x in _angles(50):
        want = cmath.sin(n * x)
        got = sin_multiplication_product(n, x)
        assert abs(got - want) <= 1e-12 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_cos_multiplication(n):
    for x in _angles(50, seed=8081):
        want = cmath.cos(n * x)
        got = cos_multiplication_product(n, x)
        assert abs(got - want) <= 1e-12 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_cot_multiplication(n):
    for x in _angles(50, seed=8082):
        if abs(cmath.sin(n * x)) < 1e-3:
            continue
        want = cmath.cos(n * x) / cmath.sin(n * x)
        got = cot_multiplication_product(n, x)
        assert abs(got - want) <= 1e-11 * (1.0 + abs(want))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_even_shift_product_and_reciprocal_sum(n):
    sign = (-1.0) ** ((n - 1) // 2)
    for x in _angles(50, seed=8083):
        sn = cmath.sin(n * x)
        prod = sin_even_shift_product(n, x)
        assert abs(prod - sign * 2.0 ** (1 - n) * sn) <= 1e-12 * (1.0 + abs(sn))
        if abs(sn) > 1e-3:
            total = sine_reciprocal_shift_sum(n, x)
            assert abs(total - n / sn) <= 1e-11 * (1.0 + abs(n / sn))


@pytest.mark.parametrize("n", [0, 2, 4, -3])
def test_multiplication_rejects_even_order(n):
    with pytest.raises(DomainError):
        sin_multiplication_product(n, 0.3)


def test_series_terms_needs_complex_period():
    with pytest.raises(DomainError):
        series_terms(0.7)
    # magnitude of Im T drives the count, sign does not
    assert series_terms(o.TAU0) == series_terms(o.TAU0.conjugate())


def test_require_strip():
    tau = o.TAU0
    require_strip(complex(0.3, 1.9 * tau.imag), tau)
    with pytest.raises(DomainError):
        require_strip(complex(0.3, 2.1 * tau.imag), tau)


def test_sine_sum_spec_validation():
    with pytest.raises(DomainError):
        SineSumSpec(period=complex(0.5, -1.0))
    with pytest.raises(DomainError):
        SineSumSpec(period=o.TAU0, sign=2)
    with pytest.raises(DomainError):
        SineSumSpec(period=o.TAU0, index_set="positive")


def test_sine_reciprocal_sum_frozen_spot():
    got = sine_reciprocal_sum(SineSumSpec(period=o.TAU0), o.Z0)
    assert abs(got - o.SSUM_Z0) <= 1e-13 * (1.0 + abs(o.SSUM_Z0))


def test_sine_reciprocal_sum_sign_symmetry():
    # flipping the sign of x equals flipping SineSumSpec.sign; the full sum is odd
    spec_plus = SineSumSpec(period=o.TAU0, sign=1)
    spec_minus = SineSumSpec(period=o.TAU0, sign=-1)
    got = sine_reciprocal_sum(spec_plus, -o.Z0)
    want = sine_reciprocal_sum(spec_minus, o.Z0)
    assert abs(got - want) <= 1e-13 * (1.0 + abs(want))
    assert abs(got + sine_reciprocal_sum(spec_plus, o.Z0)) <= 1e-13


def test_pairing_invariance():
    # k-ascending order agrees with the paired evaluation to 1e-13
    spec = SineSumSpec(period=o.TAU0)
    kmax = series_terms(o.TAU0)
    px = PI * o.Z0
    ordered = 1.0 / cmath.sin(px)
    for k in range(1, kmax + 1):
        w = 2.0 * k * PI * o.TAU0
        ordered += 1.0 / cmath.sin(w + px)
    for k in range(1, kmax + 1):
        w = -2.0 * k * PI * o.TAU0
        ordered += 1.0 / cmath.sin(w + px)
    paired = sine_reciprocal_sum(spec, o.Z0)
    assert abs(ordered - paired) <= 1e-13 * (1.0 + abs(paired))


def test_eta_csc_series_matches_lattice_constant():
    for tau in (o.TAU0, 1.3j, complex(-0.41, 0.92)):
        want = lattice_constants(tau).eta1
        got = eta_csc_series(tau)
        assert abs(got - want) <= 1e-12 * (1.0 + abs(want))
        # and the underlying csc^2 sum is finite and small
        assert abs(csc_squared_sum(tau)) < 1.0


def test_logderiv_series_family():
    z, tau = complex(0.37, 0.24), o.TAU0
    want0 = sigma_logderiv(0, z, tau)
    assert abs(sigma_logderiv_cot_series(z, tau) - want0) <= 1e-11 * (1 + abs(want0))
    assert abs(sigma_logderiv_algebraic_series(z, tau) - want0) <= 1e-11 * (1 + abs(want0))
    pairs = [
        (1, sigma1_logderiv_algebraic_series),
        (2, sigma2_logderiv_algebraic_series),
        (3, sigma3_logderiv_algebraic_series),
    ]
    for j, series in pairs:
        want = sigma_logderiv(j, z, tau)
        got = series(z, tau)
        assert abs(got - want) <= 1e-11 * (1.0 + abs(want))
    want2 = sigma_logderiv(2, z, tau)
    got2 = sigma2_logderiv_tan_series(z, tau)
    assert abs(got2 - want2) <= 1e-11 * (1.0 + abs(want2))


def test_logderiv_series_enforce_strip():
    tau = o.TAU0
    outside = complex(0.3, 2.5 * tau.imag)
    with pytest.raises(DomainError):
        sigma_logderiv_cot_series(outside, tau)

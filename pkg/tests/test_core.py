"""Truncation policy, cell reduction, pole guards, parsing, backend env."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wpaudit.core import (
    DEFAULT_POLICY,
    PRECISION_ENV,
    DomainError,
    PoleProximityError,
    TruncationPolicy,
    UnsupportedPrecisionError,
    active_backend,
    format_value,
    guard_pole,
    neumaier_sum,
    parse_complex,
    pole_distance,
    reduce_to_cell,
    stable_product,
    truncation_terms,
)


@pytest.mark.parametrize(
    "q_abs, eps, expected",
    [
        (0.1, 1e-12, 16),
        (0.5, 1e-12, 30),
        (0.9, 1.0, 10),  # guard floor: estimate is 0
    ],
)
def test_truncation_terms_pinned(q_abs, eps, expected):
    assert truncation_terms(q_abs, eps, 10, 4096) == expected


def test_truncation_terms_k_max_clamp():
    assert truncation_terms(0.999, 1e-300, 10, 50) == 50


@pytest.mark.parametrize("q_abs", [0.0, 1.0, 1.2, -0.3])
def test_truncation_terms_rejects_bad_q(q_abs):
    with pytest.raises(DomainError):
        truncation_terms(q_abs, 1e-12)


def test_truncation_terms_rejects_bad_eps():
    with pytest.raises(DomainError):
        truncation_terms(0.5, 0.0)


def test_policy_defaults():
    assert DEFAULT_POLICY.eps == 1e-12
    assert DEFAULT_POLICY.guard == 10
    assert DEFAULT_POLICY.k_max == 4096
    assert DEFAULT_POLICY.k_fixed is None


def test_policy_k_fixed_bypasses_estimate():
    pol = TruncationPolicy(k_fixed=7)
    assert pol.terms_for(0.1) == 7
    assert pol.terms_for(0.99) == 7


@pytest.mark.parametrize(
    "kwargs",
    [dict(eps=0.0), dict(eps=-1e-3), dict(guard=-1), dict(k_max=0), dict(k_fixed=0)],
)
def test_policy_validation(kwargs):
    with pytest.raises(DomainError):
        TruncationPolicy(**kwargs)


def test_reduce_to_cell_pinned():
    point = reduce_to_cell(2.3, complex(1.0, 2.0))
    assert point.shifts == (1, 0)
    assert point.reduced == pytest.approx(0.3, abs=1e-15)


@given(
    st.floats(-20.0, 20.0),
    st.floats(-20.0, 20.0),
    st.floats(-1.0, 1.0),
    st.floats(0.5, 3.0),
)
def test_reduce_to_cell_invariants(zr, zi, tr, ti):
    z = complex(zr, zi)
    tau = complex(tr, ti)
    point = reduce_to_cell(z, tau)
    a, b = point.shifts
    # representative lies within one period of the origin in both directions
    assert abs(point.reduced.imag) <= tau.imag * (1.0 + 1e-12)
    rebuilt = point.reduced + 2 * a + 2 * b * tau
    assert abs(rebuilt - z) <= 1e-9 * (1.0 + abs(z))


def test_pole_distance_pinned():
    # nearest lattice point to 1+i over the 2, 2i lattice is 0 (or 2, or 2i)
    assert pole_distance(complex(1.0, 1.0), 1j) == pytest.approx(math.sqrt(2.0))
    assert pole_distance(0.0, complex(0.3, 1.4)) == 0.0
    tau = complex(0.3, 1.4)
    assert pole_distance(2.0 + 2.0 * tau, tau) == pytest.approx(0.0, abs=1e-15)


def test_guard_pole():
    tau = complex(0.1, 1.2)
    with pytest.raises(PoleProximityError):
        guard_pole(1e-8 + 0j, tau)
    guard_pole(complex(0.5, 0.3), tau)  # far from the lattice: no raise


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0.5", 0.5 + 0j),
        ("-2i", -2j),
        ("1i", 1j),
        ("1+2i", complex(1, 2)),
        ("0.23-1.11i", complex(0.23, -1.11)),
        ("1e-3+2.5e2i", complex(1e-3, 2.5e2)),
    ],
)
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize("text", ["", "1 + 2i", "abc", "i+1", "1+2", "--3i", "2j"])
def test_parse_complex_rejects(text):
    with pytest.raises(DomainError):
        parse_complex(text)


def test_format_value_real_prints_bare():
    assert format_value(math.sqrt(0.5)) == "0.707106781186548"
    assert format_value(complex(2.0, 0.0)) == "2"


def test_format_value_complex():
    assert format_value(complex(1.5, -2.25)) == "1.5-2.25i"
    assert format_value(complex(-0.5, 0.125)) == "-0.5+0.125i"
    assert format_value(complex(1.0, 1.0), digits=3) == "1+1i"


@given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
def test_format_parse_roundtrip(re, im):
    text = format_value(complex(re, im), digits=17)
    assert parse_complex(text) == pytest.approx(complex(re, im), rel=1e-12, abs=1e-12)


def test_active_backend_default(monkeypatch):
    monkeypatch.delenv(PRECISION_ENV, raising=False)
    assert active_backend() == "double"
    monkeypatch.setenv(PRECISION_ENV, "binary64")
    assert active_backend() == "double"


def test_active_backend_rejects_unknown(monkeypatch):
    monkeypatch.setenv(PRECISION_ENV, "float128")
    with pytest.raises(UnsupportedPrecisionError):
        active_backend()


def test_neumaier_sum_compensates():
    assert neumaier_sum([1e16, 1.0, -1e16]) == 1.0
    assert neumaier_sum([]) == 0.0


def test_stable_product_handles_scale_swings():
    factors = [2.0, 0.5] * 200 + [3.0]
    assert stable_product(factors) == pytest.approx(3.0)
    assert stable_product([complex(0, 1)] * 4) == pytest.approx(1.0)

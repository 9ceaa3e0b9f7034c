"""Lattice trigonometric sums and finite multiplication identities.

The central object is the two-sided sum

    S(x; T) = sum over k of 1/sin(2 k pi T + sign * pi x)

whose index set is either all integers or the nonzero ones.  Getting the
index set right is exactly what several audited displays hinge on, so the
set is an explicit field of SineSumSpec rather than a convention.

These sums represent doubly periodic quantities only inside the strip
|Im x| < 2 Im T; outside it the series still converges but to something
else, so evaluation there raises DomainError.

Also here: the cotangent/tangent series for the logarithmic derivatives
of the sigma family, and the finite sin/cos/cot multiplication formulas
for odd order n.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import (
    DEFAULT_POLICY,
    DomainError,
    TruncationPolicy,
    neumaier_sum,
    require_upper_half,
)
from .weierstrass import lattice_constants

__all__ = [
    "SineSumSpec",
    "cos_multiplication_product",
    "cot_multiplication_product",
    "csc_squared_sum",
    "eta_csc_series",
    "ksum",
    "kprod",
    "require_strip",
    "series_terms",
    "sigma_logderiv_algebraic_series",
    "sigma_logderiv_cot_series",
    "sigma1_logderiv_algebraic_series",
    "sigma2_logderiv_algebraic_series",
    "sigma2_logderiv_tan_series",
    "sigma3_logderiv_algebraic_series",
    "sin_even_shift_product",
    "sin_multiplication_product",
    "sine_reciprocal_shift_sum",
    "sine_reciprocal_sum",
]

_PI = math.pi


def series_terms(T: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> int:
    """Term count for series whose tails decay like e^{-2 pi k |Im T|}."""
    T = complex(T)
    if T.imag == 0.0:
        raise DomainError("period must have nonzero imaginary part")
    return policy.terms_for(math.exp(-_PI * abs(T.imag)))


def require_strip(x: complex, T: complex, width: float = 2.0) -> complex:
    x = complex(x)
    if abs(x.imag) >= width * abs(complex(T).imag):
        raise DomainError(
            f"argument {x!r} outside the strip |Im x| < {width:g} |Im T| for T={T!r}"
        )
    return x


def _cot(w: complex) -> complex:
    return cmath.cos(w) / cmath.sin(w)


def ksum(f, kmax: int) -> complex:
    return neumaier_sum(f(k) for k in range(1, kmax + 1))


def kprod(f, kmax: int) -> complex:
    acc = complex(1.0)
    for k in range(1, kmax + 1):
        acc *= complex(f(k))
    return acc


@dataclass(frozen=True)
class SineSumSpec:
    """Shape of a reciprocal-sine lattice sum.

    period     the T in 1/sin(2 k pi T + sign pi x); Im T > 0 required
    sign       +1 or -1 multiplying pi x in every term
    index_set  "full" sums over all integers k, "nonzero" omits k = 0
    """

    period: complex
    sign: int = 1
    index_set: str = "full"

    def __post_init__(self) -> None:
        require_upper_half(self.period)
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        if self.index_set not in ("full", "nonzero"):
            raise DomainError("index_set must be 'full' or 'nonzero'")


def sine_reciprocal_sum(
    spec: SineSumSpec,
    x: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Evaluate S(x) for the given spec, pairing k with -k."""
    T = complex(spec.period)
    x = require_strip(x, T)
    kmax = series_terms(T, policy)
    px = spec.sign * _PI * x
    terms: list[complex] = []
    if spec.index_set == "full":
        terms.append(1.0 / cmath.sin(px))
    for k in range(1, kmax + 1):
        w = 2.0 * k * _PI * T
        terms.append(1.0 / cmath.sin(w + px))
        terms.append(1.0 / cmath.sin(-w + px))
    return neumaier_sum(terms)


def csc_squared_sum(
    tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sum_{n>=1} 1/sin^2(n pi tau)."""
    tau = require_upper_half(tau)
    kmax = series_terms(tau, policy)
    return neumaier_sum(1.0 / cmath.sin(n * _PI * tau) ** 2 for n in range(1, kmax + 1))


def eta_csc_series(tau: complex, policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """eta = (pi^2/2) (1/6 + sum_{n>=1} csc^2(n pi tau)); matches eta_increments[0]."""
    return 0.5 * _PI * _PI * (1.0 / 6.0 + csc_squared_sum(tau, policy))


def sigma_logderiv_cot_series(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma'/sigma as eta z + (pi/2) cot(pi z/2) + cotangent pair sum."""
    tau = require_upper_half(tau)
    z = require_strip(z, tau)
    eta = lattice_constants(tau, policy).eta1
    hv = 0.5 * _PI * z
    kmax = series_terms(tau, policy)
    tail = ksum(lambda k: _cot(k * _PI * tau + hv) - _cot(k * _PI * tau - hv), kmax)
    return eta * z + 0.5 * _PI * _cot(hv) + 0.5 * _PI * tail


def sigma_logderiv_algebraic_series(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma'/sigma via sin(pi z)/(cos^2(k pi tau) - cos^2(pi z/2)) terms."""
    tau = require_upper_half(tau)
    z = require_strip(z, tau)
    eta = lattice_constants(tau, policy).eta1
    hv = 0.5 * _PI * z
    spz = cmath.sin(_PI * z)
    c2 = cmath.cos(hv) ** 2
    kmax = series_terms(tau, policy)
    tail = ksum(lambda k: spz / (cmath.cos(k * _PI * tau) ** 2 - c2), kmax)
    return eta * z + 0.5 * _PI * _cot(hv) + 0.5 * _PI * tail


def sigma1_logderiv_algebraic_series(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_1'/sigma_1 via sin(pi z)/(cos^2(k pi tau) - sin^2(pi z/2)) terms."""
    tau = require_upper_half(tau)
    z = require_strip(z, tau)
    eta = lattice_constants(tau, policy).eta1
    hv = 0.5 * _PI * z
    spz = cmath.sin(_PI * z)
    s2 = cmath.sin(hv) ** 2
    kmax = series_terms(tau, policy)
    tail = ksum(lambda k: spz / (cmath.cos(k * _PI * tau) ** 2 - s2), kmax)
    return eta * z - 0.5 * _PI * cmath.tan(hv) - 0.5 * _PI * tail


def sigma2_logderiv_tan_series(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_2'/sigma_2 as eta z minus a tangent pair sum over k - 1/2."""
    tau = require_upper_half(tau)
    z = require_strip(z, tau)
    eta = lattice_constants(tau, policy).eta1
    hv = 0.5 * _PI * z
    kmax = series_terms(tau, policy)
    tail = ksum(
        lambda k: cmath.tan((k - 0.5) * _PI * tau + hv)
        - cmath.tan((k - 0.5) * _PI * tau - hv),
        kmax,
    )
    return eta * z - 0.5 * _PI * tail


def sigma2_logderiv_algebraic_series(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_2'/sigma_2 via sin(pi z)/(cos^2((k-1/2) pi tau) - sin^2(pi z/2))."""
    tau = require_upper_half(tau)
    z = require_strip(z, tau)
    eta = lattice_constants(tau, policy).eta1
    hv = 0.5 * _PI * z
    spz = cmath.sin(_PI * z)
    s2 = cmath.sin(hv) ** 2
    kmax = series_terms(tau, policy)
    tail = ksum(lambda k: spz / (cmath.cos((k - 0.5) * _PI * tau) ** 2 - s2), kmax)
    return eta * z - 0.5 * _PI * tail


def sigma3_logderiv_algebraic_series(
    z: complex, tau: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """sigma_3'/sigma_3 via sin(pi z)/(cos^2((k-1/2) pi tau) - cos^2(pi z/2))."""
    tau = require_upper_half(tau)
    z = require_strip(z, tau)
    eta = lattice_constants(tau, policy).eta1
    hv = 0.5 * _PI * z
    spz = cmath.sin(_PI * z)
    c2 = cmath.cos(hv) ** 2
    kmax = series_terms(tau, policy)
    tail = ksum(lambda k: spz / (cmath.cos((k - 0.5) * _PI * tau) ** 2 - c2), kmax)
    return eta * z + 0.5 * _PI * tail


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"order must be a positive odd integer, got {n!r}")


def sin_multiplication_product(n: int, x: complex) -> complex:
    """2^{n-1} prod_{m=0}^{n-1} sin(x + m pi/n); equals sin(n x) for odd n."""
    _check_odd(n)
    x = complex(x)
    acc = complex(2.0 ** (n - 1))
    for m in range(n):
        acc *= cmath.sin(x + m * _PI / n)
    return acc


def cos_multiplication_product(n: int, x: complex) -> complex:
    """(-1)^{(n-1)/2} 2^{n-1} prod_{m=0}^{n-1} cos(x + m pi/n); equals cos(n x)."""
    _check_odd(n)
    x = complex(x)
    acc = complex((-1.0) ** ((n - 1) // 2) * 2.0 ** (n - 1))
    for m in range(n):
        acc *= cmath.cos(x + m * _PI / n)
    return acc


def cot_multiplication_product(n: int, x: complex) -> complex:
    """(-1)^{(n-1)/2} prod_{m=0}^{n-1} cot(x + m pi/n); equals cot(n x)."""
    _check_odd(n)
    x = complex(x)
    acc = complex((-1.0) ** ((n - 1) // 2))
    for m in range(n):
        acc *= _cot(x + m * _PI / n)
    return acc


def sin_even_shift_product(n: int, x: complex) -> complex:
    """prod_{m=0}^{n-1} sin(x + 2 pi m/n); equals (-1)^{(n-1)/2} 2^{1-n} sin(n x)."""
    _check_odd(n)
    x = complex(x)
    acc = complex(1.0)
    for m in range(n):
        acc *= cmath.sin(x + 2.0 * _PI * m / n)
    return acc


def sine_reciprocal_shift_sum(n: int, x: complex) -> complex:
    """sum_{m=0}^{n-1} 1/sin(x + 2 pi m/n); equals n/sin(n x) for odd n."""
    _check_odd(n)
    x = complex(x)
    return neumaier_sum(1.0 / cmath.sin(x + 2.0 * _PI * m / n) for m in range(n))

"""Shared numeric plumbing: truncation policy, cell reduction, pole guards.

Everything downstream (theta series, product forms, trig sums) sizes its
loops through :func:`truncation_terms` or the adaptive theta stop rule, and
routes lattice arguments through :func:`reduce_to_cell` first.  Keeping the
policy in one frozen dataclass makes evaluations reproducible: the same
(z, tau, policy) triple always runs the identical arithmetic.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass

__all__ = [
    "DomainError",
    "EvalPoint",
    "PoleProximityError",
    "TruncationOverflowError",
    "TruncationPolicy",
    "UnsupportedPrecisionError",
    "DEFAULT_POLICY",
    "POLE_GUARD",
    "PRECISION_ENV",
    "active_backend",
    "format_value",
    "neumaier_sum",
    "parse_complex",
    "pole_distance",
    "reduce_to_cell",
    "stable_product",
    "truncation_terms",
]

PRECISION_ENV = "WP_PRODUCTS_PRECISION"
_BINARY64_NAMES = frozenset({"double", "binary64"})

# Lattice points closer than this to an evaluation point trip the guard.
POLE_GUARD = 1e-6


class DomainError(ValueError):
    """Argument outside the supported domain (Im tau <= 0, bad index, ...)."""


class PoleProximityError(DomainError):
    """Evaluation point sits within the guard distance of a pole."""


class TruncationOverflowError(RuntimeError):
    """A series or product needs more terms than the policy cap allows."""


class UnsupportedPrecisionError(RuntimeError):
    """The precision env var names a backend this build does not provide."""


def active_backend() -> str:
    """Resolve the floating-point backend from the environment.

    Only binary64 is built in; the env var exists so an extended-precision
    backend can be slotted in without touching call sites.
    """
    raw = os.environ.get(PRECISION_ENV, "double").strip().lower()
    if raw in _BINARY64_NAMES:
        return "double"
    raise UnsupportedPrecisionError(
        f"{PRECISION_ENV}={raw!r} is not supported; use 'double' or 'binary64'"
    )


@dataclass(frozen=True)
class TruncationPolicy:
    """Controls how many terms series and products may spend.

    eps      target tail bound for adaptive stopping
    guard    extra terms added on top of the analytic estimate
    k_max    hard cap; exceeding it raises TruncationOverflowError
    k_fixed  when set, bypass the adaptive rule and use exactly this many
             terms (convergence studies)
    """

    eps: float = 1e-12
    guard: int = 10
    k_max: int = 4096
    k_fixed: int | None = None

    def __post_init__(self) -> None:
        if not (0.0 < self.eps):
            raise DomainError("eps must be positive")
        if self.guard < 0 or self.k_max < 1:
            raise DomainError("guard must be >= 0 and k_max >= 1")
        if self.k_fixed is not None and self.k_fixed < 1:
            raise DomainError("k_fixed must be >= 1 when given")

    def terms_for(self, q_abs: float) -> int:
        if self.k_fixed is not None:
            return self.k_fixed
        return truncation_terms(q_abs, self.eps, self.guard, self.k_max)


DEFAULT_POLICY = TruncationPolicy()


def truncation_terms(
    q_abs: float, eps: float = 1e-12, guard: int = 10, k_max: int = 4096
) -> int:
    """Term count for geometrically decaying tails |q|^(2k).

    ceil(ln eps / (2 ln |q|)) plus the guard, clamped to [guard, k_max].
    """
    if not (0.0 < q_abs < 1.0):
        raise DomainError("q_abs must lie in (0, 1)")
    if eps <= 0.0:
        raise DomainError("eps must be positive")
    estimate = math.ceil(math.log(eps) / (2.0 * math.log(q_abs)))
    return max(guard, min(k_max, estimate + guard))


@dataclass(frozen=True)
class EvalPoint:
    """A point together with its fundamental-cell representative.

    z = reduced + 2*shifts[0] + 2*shifts[1]*tau.
    """

    z: complex
    reduced: complex
    shifts: tuple[int, int]


def _iround(x: float) -> int:
    # ties round half-up so the reduction is reproducible across platforms
    return math.floor(x + 0.5)


def require_upper_half(tau: complex) -> complex:
    tau = complex(tau)
    if not (tau.imag > 0.0):
        raise DomainError(f"tau must satisfy Im tau > 0, got {tau!r}")
    return tau


def reduce_to_cell(z: complex, tau: complex) -> EvalPoint:
    """Translate z by the period lattice {2a + 2b*tau} into the base cell.

    The imaginary part is reduced first (it alone fixes the tau multiple),
    then the real part.  |Im reduced| <= Im tau afterwards.
    """
    tau = require_upper_half(tau)
    z = complex(z)
    b = _iround(z.imag / (2.0 * tau.imag))
    a = _iround((z.real - 2.0 * b * tau.real) / 2.0)
    reduced = z - 2.0 * a - 2.0 * b * tau
    return EvalPoint(z=z, reduced=reduced, shifts=(a, b))


def pole_distance(z: complex, tau: complex) -> float:
    """Distance from z to the nearest lattice point 2a + 2b*tau."""
    reduced = reduce_to_cell(z, tau).reduced
    best = math.inf
    for b in (-1, 0, 1):
        for a in (-1, 0, 1):
            best = min(best, abs(reduced - (2.0 * a + 2.0 * b * tau)))
    return best


def guard_pole(z: complex, tau: complex, delta: float = POLE_GUARD) -> None:
    d = pole_distance(z, tau)
    if d < delta:
        raise PoleProximityError(
            f"point {z!r} is {d:.3e} from a lattice pole (guard {delta:.1e})"
        )


def neumaier_sum(terms) -> complex:
    """Compensated summation; terms may be real or complex."""
    sr = 0.0
    si = 0.0
    cr = 0.0
    ci = 0.0
    for term in terms:
        t = complex(term)
        x = t.real
        tmp = sr + x
        if abs(sr) >= abs(x):
            cr += (sr - tmp) + x
        else:
            cr += (x - tmp) + sr
        sr = tmp
        y = t.imag
        tmp = si + y
        if abs(si) >= abs(y):
            ci += (si - tmp) + y
        else:
            ci += (y - tmp) + si
        si = tmp
    return complex(sr + cr, si + ci)


def stable_product(factors) -> complex:
    """Multiply factors, rescaling on overflow risk.

    Direct multiplication is exact enough for the factor counts used here;
    the rescaling path only exists to keep intermediate magnitudes finite.
    """
    acc = complex(1.0, 0.0)
    scale = 0  # power of 2 pulled out
    for f in factors:
        acc *= complex(f)
        mag = abs(acc)
        if mag != 0.0 and (mag > 1e150 or mag < 1e-150):
            exp = math.frexp(mag)[1]
            acc = complex(math.ldexp(acc.real, -exp), math.ldexp(acc.imag, -exp))
            scale += exp
    if scale == 0:
        return acc
    return complex(math.ldexp(acc.real, scale), math.ldexp(acc.imag, scale))


_COMPLEX_RE = re.compile(
    r"""^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
         (?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$""",
    re.VERBOSE,
)
_PURE_IMAG_RE = re.compile(
    r"^(?P<im>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i$"
)


def parse_complex(text: str) -> complex:
    """Parse the CLI complex literal grammar: a, ai, a+bi, a-bi.

    No whitespace inside the literal.  Examples: 0.5, -2i, 1+2i, 0.23-1.11i.
    """
    raw = text.strip()
    if not raw or any(ch.isspace() for ch in raw):
        raise DomainError(f"cannot parse complex literal {text!r}")
    m = _PURE_IMAG_RE.match(raw)
    if m:
        return complex(0.0, float(m.group("im")))
    m = _COMPLEX_RE.match(raw)
    if not m:
        raise DomainError(f"cannot parse complex literal {text!r}")
    re_part = float(m.group("re"))
    im_part = float(m.group("im")) if m.group("im") else 0.0
    return complex(re_part, im_part)


def format_value(value: complex, digits: int = 15) -> str:
    """Render a complex value at the given significant digits.

    Real results (imaginary part exactly zero) print as a bare real so that
    scripted callers get '0.707106781186548' rather than '...+0i'.
    """
    v = complex(value)
    spec = f"%.{digits}g"
    if v.imag == 0.0:
        return spec % v.real
    re_text = spec % v.real
    im_text = spec % abs(v.imag)
    sign = "-" if v.imag < 0 else "+"
    return f"{re_text}{sign}{im_text}i"

"""Transport-free handlers; the CLI calls these in-process and the app
exposes them over HTTP so both produce identical bytes.
"""

from __future__ import annotations

import json

from ..audit import AuditStatus, render_csv, render_json, run_audit, select_records
from ..core import TruncationPolicy, require_upper_half
from ..products import (
    sigma1_trig_product,
    sigma2_trig_product,
    sigma3_trig_product,
    sigma_trig_product,
    theta1_trig_product,
    theta2_trig_product,
    wp_minus_e1_cot_product,
    wp_prime_sine_product,
)
from ..registry import resolve
from ..theta import nome
from ..trigsums import eta_csc_series, sigma_logderiv_cot_series
from ..weierstrass import lattice_constants


class NoMatchError(LookupError):
    """No identity id matched the requested patterns."""


def _wp_via_product(z: complex, tau: complex, policy: TruncationPolicy) -> complex:
    # e1 at the adaptive default so K only moves the product tail
    return lattice_constants(tau).e1 + wp_minus_e1_cot_product(z, tau, policy)


# Convergence sweeps drive the product/sum forms where one exists: their
# factor-k tails shrink like |q|^{2k} per step, which is what the K column
# is meant to expose.  The theta-series fallbacks hit the floating-point
# floor within a couple of terms.
_CONVERGENCE_FORMS = {
    "wp": _wp_via_product,
    "wp_prime": wp_prime_sine_product,
    "zeta": sigma_logderiv_cot_series,
    "sigma": sigma_trig_product,
    "sigma1": sigma1_trig_product,
    "sigma2": sigma2_trig_product,
    "sigma3": sigma3_trig_product,
    "theta1": theta1_trig_product,
    "theta2": theta2_trig_product,
    "eta": lambda z, tau, policy: eta_csc_series(tau, policy),
}


def evaluate(name: str, z: complex | None, tau: complex, policy: TruncationPolicy) -> tuple[complex, int]:
    """Evaluate a registered function; returns (value, planned theta terms)."""
    spec = resolve(name)
    if spec.needs_z and z is None:
        raise ValueError(f"{name} requires --z")
    require_upper_half(tau)
    value = spec.fn(0j if z is None else z, tau, policy)
    terms = policy.terms_for(abs(nome(tau)))
    return value, terms


def convergence_rows(
    name: str, z: complex | None, tau: complex, k_max: int, eps: float
) -> list[tuple[int, complex, float]]:
    """Value at each fixed truncation K plus distance to the K = k_max value."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    spec = resolve(name)
    if spec.needs_z and z is None:
        raise ValueError(f"{name} requires --z")
    require_upper_half(tau)
    zz = 0j if z is None else z
    fn = _CONVERGENCE_FORMS.get(name, spec.fn)
    values = [
        fn(zz, tau, TruncationPolicy(eps=eps, k_fixed=k)) for k in range(1, k_max + 1)
    ]
    ref = values[-1]
    return [(k + 1, v, abs(v - ref)) for k, v in enumerate(values)]


def audit_payload(
    ids, seed: int, n_samples: int, eps: float, n_list=(3, 5)
) -> tuple[str, str, bool]:
    """Run the audit over matching ids; returns (csv, json, any_fail)."""
    records = select_records(ids, orders=tuple(n_list))
    if not records:
        raise NoMatchError("no identities matched")
    policy = TruncationPolicy(eps=eps)
    results = run_audit(records, seed=seed, n_samples=n_samples, policy=policy)
    csv_text = render_csv(results)
    json_text = render_json(results, seed=seed, n_samples=n_samples, eps=eps)
    any_fail = any(r.status is AuditStatus.FAIL for r in results)
    return csv_text, json_text, any_fail


def report_dict(json_text: str) -> dict:
    return json.loads(json_text)

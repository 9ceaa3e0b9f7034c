"""High-precision lattice function library with a sampling identity audit.

Core evaluation lives in theta, weierstrass, products, trigsums, xi and
ntransforms; the audit subpackage carries the identity catalog, the
sampling engine and report rendering; cli and service expose both.
"""

from .core import (
    DEFAULT_POLICY,
    DomainError,
    PoleProximityError,
    TruncationOverflowError,
    TruncationPolicy,
    UnsupportedPrecisionError,
    active_backend,
    format_value,
    parse_complex,
    pole_distance,
    reduce_to_cell,
    truncation_terms,
)
from .theta import nome, theta, theta1_prime_zero, theta_nulls
from .weierstrass import (
    lattice_constants,
    sigma,
    sigma_b,
    sigma_logderiv,
    wp,
    wp_pp,
    wp_prime,
    zeta,
)
from .xi import modulus_k, modulus_kprime, xi, xi_prime
from .audit import (
    AuditStatus,
    EmptyGridError,
    IdentityRecord,
    catalog,
    get_record,
    load_report,
    render_csv,
    render_json,
    run_audit,
    select_records,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_POLICY",
    "DomainError",
    "PoleProximityError",
    "TruncationOverflowError",
    "TruncationPolicy",
    "UnsupportedPrecisionError",
    "active_backend",
    "format_value",
    "parse_complex",
    "pole_distance",
    "reduce_to_cell",
    "truncation_terms",
    "nome",
    "theta",
    "theta1_prime_zero",
    "theta_nulls",
    "lattice_constants",
    "sigma",
    "sigma_b",
    "sigma_logderiv",
    "wp",
    "wp_pp",
    "wp_prime",
    "zeta",
    "modulus_k",
    "modulus_kprime",
    "xi",
    "xi_prime",
    "AuditStatus",
    "EmptyGridError",
    "IdentityRecord",
    "catalog",
    "get_record",
    "load_report",
    "render_csv",
    "render_json",
    "run_audit",
    "select_records",
    "__version__",
]

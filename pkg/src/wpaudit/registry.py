"""Named function registry shared by the CLI and the HTTP service.

Names resolve to evaluators with a uniform (z, tau, policy) signature.
Constants of the lattice (e1..e3, eta, k, kprime) ignore z.  For theta1
through theta4 the --z argument is the theta argument v itself, not the
doubled elliptic argument.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .core import TruncationPolicy
from .theta import theta
from .weierstrass import lattice_constants, sigma, sigma_b, wp, wp_prime, zeta
from .xi import modulus_k, modulus_kprime, xi

Evaluator = Callable[[complex, complex, TruncationPolicy], complex]


@dataclass(frozen=True)
class FunctionSpec:
    name: str
    needs_z: bool
    fn: Evaluator


_XI_RE = re.compile(r"^xi\.([0-3])\.([0-3])$")

XI_PATTERN_HELP = "xi.B.G with B, G in 0..3 and B != G (sigma_B / sigma_G)"


def _theta_eval(j: int) -> Evaluator:
    def f(z, tau, policy):
        return theta(j, z, tau, policy)

    return f


_FIXED: dict[str, FunctionSpec] = {}


def _register(name: str, needs_z: bool, fn: Evaluator) -> None:
    _FIXED[name] = FunctionSpec(name, needs_z, fn)


_register("wp", True, lambda z, t, p: wp(z, t, p))
_register("wp_prime", True, lambda z, t, p: wp_prime(z, t, p))
_register("zeta", True, lambda z, t, p: zeta(z, t, p))
_register("sigma", True, lambda z, t, p: sigma(z, t, p))
_register("sigma1", True, lambda z, t, p: sigma_b(1, z, t, p))
_register("sigma2", True, lambda z, t, p: sigma_b(2, z, t, p))
_register("sigma3", True, lambda z, t, p: sigma_b(3, z, t, p))
for _j in (1, 2, 3, 4):
    _register(f"theta{_j}", True, _theta_eval(_j))
_register("e1", False, lambda z, t, p: lattice_constants(t, p).e1)
_register("e2", False, lambda z, t, p: lattice_constants(t, p).e2)
_register("e3", False, lambda z, t, p: lattice_constants(t, p).e3)
_register("eta", False, lambda z, t, p: lattice_constants(t, p).eta1)
_register("k", False, lambda z, t, p: modulus_k(t, p))
_register("kprime", False, lambda z, t, p: modulus_kprime(t, p))


def resolve(name: str) -> FunctionSpec:
    """Look up a registered name; xi.B.G resolves dynamically."""
    if name in _FIXED:
        return _FIXED[name]
    m = _XI_RE.match(name)
    if m:
        b, g = int(m.group(1)), int(m.group(2))
        if b == g:
            raise ValueError(f"{name}: xi indices must differ")
        return FunctionSpec(name, True, lambda z, t, p, _b=b, _g=g: xi(_b, _g, z, t, p))
    raise KeyError(name)


def list_functions() -> list[str]:
    return sorted(_FIXED)

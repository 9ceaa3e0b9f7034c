"""Data model for audited identities.

An IdentityRecord packages one printed identity: the verbatim source text,
a tuple of expressions that the text claims are equal, and zero or more
named variants that replace the expression tuple with a repaired version.
The engine evaluates every variant on a shared sample grid and assigns the
record a status.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from ..core import DEFAULT_POLICY, TruncationPolicy


class AuditStatus(str, Enum):
    PASS_AS_PRINTED = "PASS_AS_PRINTED"
    PASS_CORRECTED = "PASS_CORRECTED"
    PASS_UP_TO_CONSTANT = "PASS_UP_TO_CONSTANT"
    FAIL = "FAIL"


@dataclass(frozen=True)
class EvalContext:
    """Per-run evaluation knobs threaded into every expression."""

    policy: TruncationPolicy = DEFAULT_POLICY


# Expression callables receive (z, tau, ctx) and return a complex value.
ExprFn = Callable[[complex, complex, EvalContext], complex]


@dataclass(frozen=True)
class Expression:
    name: str
    fn: ExprFn


@dataclass(frozen=True)
class Variant:
    """A full replacement for the record's expression tuple."""

    label: str
    expressions: tuple[Expression, ...]

    def __post_init__(self) -> None:
        if len(self.expressions) < 2:
            raise ValueError("a variant needs at least two expressions")


@dataclass(frozen=True)
class SamplingDomain:
    """How (z, tau) pairs are drawn for one record.

    z_mode:
      cell    x ~ U(cell_x), y ~ U(cell_y) * Im(tau) / y_div
      radial  |z| ~ U(radial), uniform phase
      none    tau-only record; z is fixed at 0 and ignored
    guard is an extra accept predicate applied after the draw.
    """

    re_tau: tuple[float, float] = (-1.0, 1.0)
    im_tau: tuple[float, float] = (0.8, 2.0)
    z_mode: str = "cell"
    cell_x: tuple[float, float] = (-0.95, 0.95)
    cell_y: tuple[float, float] = (-0.75, 0.75)
    y_div: float = 1.0
    radial: tuple[float, float] = (0.08, 0.3)
    guard: Callable[[complex, complex], bool] | None = None

    def __post_init__(self) -> None:
        if self.z_mode not in ("cell", "radial", "none"):
            raise ValueError(f"unknown z_mode {self.z_mode!r}")


@dataclass(frozen=True)
class IdentityRecord:
    """One audited display.

    id          stable dotted identifier, e.g. "thm2-1.e1"
    anchor      where the display sits in the audited text
    quote       the display, verbatim
    expressions the members of the printed equality chain
    variants    named repaired versions, tried when as-printed fails
    tolerance   max relative residual for a pass
    notes       what the repaired variants change, if anything
    """

    id: str
    anchor: str
    quote: str
    expressions: tuple[Expression, ...]
    variants: tuple[Variant, ...] = ()
    tolerance: float = 1e-9
    domain: SamplingDomain = field(default_factory=SamplingDomain)
    notes: str = ""

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("record id must be nonempty")
        if len(self.expressions) < 2:
            raise ValueError(f"{self.id}: need at least two expressions")
        if self.tolerance <= 0.0:
            raise ValueError(f"{self.id}: tolerance must be positive")
        labels = [v.label for v in self.variants]
        if "as-printed" in labels or len(set(labels)) != len(labels):
            raise ValueError(f"{self.id}: variant labels must be unique and not 'as-printed'")

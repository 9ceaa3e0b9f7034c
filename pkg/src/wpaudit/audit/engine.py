"""Deterministic sampling engine for identity records.

Every variant of a record is evaluated on the same pseudo-random grid of
(z, tau) points.  Samples where any expression raises a domain/overflow
error or returns a non-finite value are discarded for that variant; a
variant that keeps fewer than half the grid is marked invalid.  Statuses
are assigned in the order as-printed pass, corrected pass, constant-fit
pass, fail.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, replace
from statistics import median

import numpy as np

from ..core import DEFAULT_POLICY, DomainError, TruncationOverflowError, TruncationPolicy, pole_distance
from .records import AuditStatus, EvalContext, Expression, IdentityRecord, Variant

DISCARD_EXCEPTIONS = (DomainError, TruncationOverflowError, ArithmeticError, ValueError)

GRID_ATTEMPT_FACTOR = 10
MIN_POLE_DISTANCE = 0.05

_INF = float("inf")


class EmptyGridError(RuntimeError):
    """No variant of a record retained enough admissible samples."""


@dataclass(frozen=True)
class VariantResult:
    label: str
    n_valid: int
    max_rel_residual: float
    median_rel_residual: float
    fit_max_residual: float
    fitted_constant: complex | None

    @property
    def valid(self) -> bool:
        return math.isfinite(self.max_rel_residual)


@dataclass(frozen=True)
class RecordResult:
    record_id: str
    anchor: str
    status: AuditStatus
    selected_variant: str
    fitted_constant: complex | None
    tolerance: float
    seed: int
    n_samples: int
    variants: tuple[VariantResult, ...]


def record_rng(record_id: str, seed: int) -> np.random.Generator:
    """Stream keyed by (seed, crc32(id)) so record order never matters."""
    return np.random.default_rng((seed, zlib.crc32(record_id.encode("utf-8"))))


def sample_grid(record: IdentityRecord, seed: int, n_samples: int) -> list[tuple[complex, complex]]:
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    rng = record_rng(record.id, seed)
    dom = record.domain
    grid: list[tuple[complex, complex]] = []
    attempts = 0
    limit = GRID_ATTEMPT_FACTOR * n_samples
    while len(grid) < n_samples and attempts < limit:
        attempts += 1
        tau = complex(rng.uniform(*dom.re_tau), rng.uniform(*dom.im_tau))
        if dom.z_mode == "none":
            z = 0.0 + 0.0j
        elif dom.z_mode == "cell":
            x = rng.uniform(*dom.cell_x)
            y = rng.uniform(*dom.cell_y) * tau.imag / dom.y_div
            z = complex(x, y)
            if pole_distance(z, tau) < MIN_POLE_DISTANCE:
                continue
        else:
            r = rng.uniform(*dom.radial)
            phase = rng.uniform(0.0, 2.0 * math.pi)
            z = r * complex(math.cos(phase), math.sin(phase))
        if dom.guard is not None and not dom.guard(z, tau):
            continue
        grid.append((z, tau))
    if not grid:
        raise EmptyGridError(f"{record.id}: no admissible sample points")
    return grid


def _evaluate(variant: Variant, grid: list[tuple[complex, complex]], ctx: EvalContext) -> list[list[complex]]:
    rows: list[list[complex]] = []
    for z, tau in grid:
        values: list[complex] = []
        keep = True
        for expr in variant.expressions:
            try:
                val = complex(expr.fn(z, tau, ctx))
            except DISCARD_EXCEPTIONS:
                keep = False
                break
            if not (math.isfinite(val.real) and math.isfinite(val.imag)):
                keep = False
                break
            values.append(val)
        if keep:
            rows.append(values)
    return rows


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / (1.0 + max(abs(a), abs(b)))


def _stats(label: str, rows: list[list[complex]], grid_size: int) -> VariantResult:
    need = math.ceil(grid_size / 2)
    if len(rows) < need:
        return VariantResult(label, len(rows), _INF, _INF, _INF, None)
    residuals = []
    for values in rows:
        first = values[0]
        residuals.append(max((_rel(other, first) for other in values[1:]), default=0.0))
    max_res = max(residuals)
    med_res = median(residuals)

    # Least-squares constant per trailing expression: first ~ c_i * E_i.
    fit_max = 0.0
    fitted: complex | None = None
    width = len(rows[0])
    for i in range(1, width):
        den = sum(abs(values[i]) ** 2 for values in rows)
        if den == 0.0:
            fit_max = _INF
            break
        num = sum(values[i].conjugate() * values[0] for values in rows)
        c = num / den
        if i == 1:
            fitted = c
        for values in rows:
            fit_max = max(fit_max, _rel(values[0], c * values[i]))
    return VariantResult(label, len(rows), max_res, med_res, fit_max, fitted)


def all_variants(record: IdentityRecord) -> tuple[Variant, ...]:
    return (Variant("as-printed", record.expressions), *record.variants)


def audit_record(
    record: IdentityRecord,
    *,
    seed: int = 0,
    n_samples: int = 50,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tolerance: float | None = None,
) -> RecordResult:
    tol = record.tolerance if tolerance is None else tolerance
    grid = sample_grid(record, seed, n_samples)
    ctx = EvalContext(policy=policy)
    results = tuple(_stats(v.label, _evaluate(v, grid, ctx), len(grid)) for v in all_variants(record))

    if not any(r.valid for r in results):
        raise EmptyGridError(f"{record.id}: every variant lost over half its samples")

    as_printed = results[0]
    fitted: complex | None = None
    if as_printed.valid and as_printed.max_rel_residual < tol:
        status, selected = AuditStatus.PASS_AS_PRINTED, as_printed.label
    else:
        passing = [r for r in results[1:] if r.valid and r.max_rel_residual < tol]
        if passing:
            best = min(passing, key=lambda r: r.max_rel_residual)
            status, selected = AuditStatus.PASS_CORRECTED, best.label
        else:
            fitters = [r for r in results if r.valid and r.fit_max_residual < tol]
            if fitters:
                status, selected = AuditStatus.PASS_UP_TO_CONSTANT, fitters[0].label
                fitted = fitters[0].fitted_constant
            else:
                status, selected = AuditStatus.FAIL, as_printed.label

    return RecordResult(
        record_id=record.id,
        anchor=record.anchor,
        status=status,
        selected_variant=selected,
        fitted_constant=fitted,
        tolerance=tol,
        seed=seed,
        n_samples=n_samples,
        variants=results,
    )


def run_audit(
    records,
    *,
    seed: int = 0,
    n_samples: int = 50,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tolerance: float | None = None,
) -> list[RecordResult]:
    return [
        audit_record(rec, seed=seed, n_samples=n_samples, policy=policy, tolerance=tolerance)
        for rec in records
    ]


def with_scaled_expression(record: IdentityRecord, index: int, factor: complex) -> IdentityRecord:
    """Copy of the record with one as-printed expression scaled; for fault drills."""
    exprs = list(record.expressions)
    old = exprs[index]

    def scaled(z: complex, tau: complex, ctx: EvalContext, _fn=old.fn, _c=factor) -> complex:
        return _c * _fn(z, tau, ctx)

    exprs[index] = Expression(f"{old.name}*scaled", scaled)
    return replace(record, expressions=tuple(exprs))


def with_replaced_expression(record: IdentityRecord, index: int, expression: Expression) -> IdentityRecord:
    exprs = list(record.expressions)
    exprs[index] = expression
    return replace(record, expressions=tuple(exprs))

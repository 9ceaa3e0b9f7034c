"""Report rendering: CSV (one row per variant) and round-trippable JSON.

Output is deterministic: no timestamps, fixed float formatting in CSV,
sorted keys in JSON.  Both renderers consume the RecordResult list the
engine produces.
"""

from __future__ import annotations

import json
from typing import Iterable

from .engine import RecordResult

CSV_COLUMNS = (
    "id",
    "anchor",
    "variant",
    "max_rel_residual",
    "median_rel_residual",
    "fitted_constant_re",
    "fitted_constant_im",
    "status",
    "n_samples",
    "seed",
)


def _f(x: float) -> str:
    return "%.12e" % x


def _csv_field(text: str) -> str:
    if any(ch in text for ch in ",\"\n"):
        return '"' + text.replace('"', '""') + '"'
    return text


def _ordered(results: Iterable[RecordResult]) -> list[RecordResult]:
    return sorted(results, key=lambda res: res.record_id)


def render_csv(results: Iterable[RecordResult]) -> str:
    """One row per variant, records sorted by id, status repeated per row."""
    lines = [",".join(CSV_COLUMNS)]
    for res in _ordered(results):
        for var in res.variants:
            c = var.fitted_constant
            row = (
                res.record_id,
                res.anchor,
                var.label,
                _f(var.max_rel_residual),
                _f(var.median_rel_residual),
                _f(c.real if c is not None else float("nan")),
                _f(c.imag if c is not None else float("nan")),
                res.status.value,
                str(var.n_valid),
                str(res.seed),
            )
            lines.append(",".join(_csv_field(part) for part in row))
    return "\n".join(lines) + "\n"


def _constant_obj(c: complex | None) -> dict | None:
    if c is None:
        return None
    return {"im": c.imag, "re": c.real}


def render_json(results: Iterable[RecordResult], *, seed: int, n_samples: int, eps: float) -> str:
    payload = {
        "eps": eps,
        "n_samples": n_samples,
        "records": [
            {
                "anchor": res.anchor,
                "fitted_constant": _constant_obj(res.fitted_constant),
                "id": res.record_id,
                "selected_variant": res.selected_variant,
                "status": res.status.value,
                "tolerance": res.tolerance,
                "variants": [
                    {
                        "fit_max_residual": var.fit_max_residual,
                        "fitted_constant": _constant_obj(var.fitted_constant),
                        "label": var.label,
                        "max_rel_residual": var.max_rel_residual,
                        "median_rel_residual": var.median_rel_residual,
                        "n_valid": var.n_valid,
                    }
                    for var in res.variants
                ],
            }
            for res in _ordered(results)
        ],
        "seed": seed,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def load_report(text: str) -> dict:
    """Parse a JSON report; json round-trips inf/nan spellings it emits."""
    return json.loads(text)

"""Sampling-based identity audit: records, engine, catalog, reports."""

from .records import (
    AuditStatus,
    EvalContext,
    Expression,
    IdentityRecord,
    SamplingDomain,
    Variant,
)
from .engine import (
    EmptyGridError,
    RecordResult,
    VariantResult,
    audit_record,
    run_audit,
    sample_grid,
    with_replaced_expression,
    with_scaled_expression,
)
from .catalog import catalog, get_record, select_records
from .report import load_report, render_csv, render_json

__all__ = [
    "AuditStatus",
    "EmptyGridError",
    "EvalContext",
    "Expression",
    "IdentityRecord",
    "RecordResult",
    "SamplingDomain",
    "Variant",
    "VariantResult",
    "audit_record",
    "catalog",
    "get_record",
    "load_report",
    "render_csv",
    "render_json",
    "run_audit",
    "sample_grid",
    "select_records",
    "with_replaced_expression",
    "with_scaled_expression",
]

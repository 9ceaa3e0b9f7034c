"""FastAPI application factory.

Error mapping: DomainError and bad arguments turn into 400, unknown
function names and unmatched identity patterns into 404, and a sampling
grid that loses every variant into 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..audit import EmptyGridError, catalog
from ..audit.engine import all_variants
from ..core import DomainError, TruncationPolicy
from ..registry import XI_PATTERN_HELP, list_functions
from . import handlers
from .models import (
    AuditRequest,
    AuditResponse,
    ComplexModel,
    ConvergenceRequest,
    ConvergenceResponse,
    ConvergenceRow,
    EvalRequest,
    EvalResponse,
    FunctionList,
    IdentityInfo,
    IdentityList,
)


def create_app() -> FastAPI:
    app = FastAPI(title="wpaudit", version="0.1.0")

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok"}

    @app.get("/functions", response_model=FunctionList)
    def functions() -> FunctionList:
        return FunctionList(functions=list_functions(), xi=XI_PATTERN_HELP)

    @app.get("/identities", response_model=IdentityList)
    def identities() -> IdentityList:
        return IdentityList(identities=[
            IdentityInfo(
                id=rec.id,
                anchor=rec.anchor,
                tolerance=rec.tolerance,
                variants=[v.label for v in all_variants(rec)],
            )
            for rec in catalog()
        ])

    @app.post("/eval", response_model=EvalResponse)
    def eval_endpoint(req: EvalRequest) -> EvalResponse:
        policy = TruncationPolicy(eps=req.eps, guard=req.guard, k_max=req.k_max)
        z = req.z.to_complex() if req.z is not None else None
        try:
            value, terms = handlers.evaluate(req.name, z, req.tau.to_complex(), policy)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=f"unknown function: {exc}")
        except DomainError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return EvalResponse(name=req.name, value=ComplexModel.from_complex(value), terms=terms)

    @app.post("/convergence", response_model=ConvergenceResponse)
    def convergence_endpoint(req: ConvergenceRequest) -> ConvergenceResponse:
        z = req.z.to_complex() if req.z is not None else None
        try:
            rows = handlers.convergence_rows(req.name, z, req.tau.to_complex(), req.k_max, req.eps)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=f"unknown function: {exc}")
        except DomainError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return ConvergenceResponse(
            name=req.name,
            rows=[
                ConvergenceRow(k=k, value=ComplexModel.from_complex(v), abs_delta=d)
                for k, v, d in rows
            ],
        )

    @app.post("/audit", response_model=AuditResponse)
    def audit_endpoint(req: AuditRequest) -> AuditResponse:
        try:
            csv_text, json_text, any_fail = handlers.audit_payload(
                req.ids, req.seed, req.n_samples, req.eps, n_list=req.n_list
            )
        except handlers.NoMatchError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except DomainError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except EmptyGridError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return AuditResponse(
            any_fail=any_fail, csv=csv_text, report=handlers.report_dict(json_text)
        )

    return app

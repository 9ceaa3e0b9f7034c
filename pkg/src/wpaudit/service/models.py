"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class ComplexModel(BaseModel):
    re: float
    im: float = 0.0

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, w: complex) -> "ComplexModel":
        return cls(re=w.real, im=w.imag)


class EvalRequest(BaseModel):
    name: str
    tau: ComplexModel
    z: ComplexModel | None = None
    eps: float = 1e-12
    guard: int = 10
    k_max: int = 4096


class EvalResponse(BaseModel):
    name: str
    value: ComplexModel
    terms: int


class ConvergenceRequest(BaseModel):
    name: str
    tau: ComplexModel
    z: ComplexModel | None = None
    k_max: int = 40
    eps: float = 1e-12


class ConvergenceRow(BaseModel):
    k: int
    value: ComplexModel
    abs_delta: float


class ConvergenceResponse(BaseModel):
    name: str
    rows: list[ConvergenceRow]


class AuditRequest(BaseModel):
    ids: list[str] = Field(default_factory=lambda: ["*"])
    seed: int = 0
    n_samples: int = 50
    eps: float = 1e-12
    n_list: list[int] = Field(default_factory=lambda: [3, 5])


class AuditResponse(BaseModel):
    any_fail: bool
    csv: str
    report: dict


class IdentityInfo(BaseModel):
    id: str
    anchor: str
    tolerance: float
    variants: list[str]


class IdentityList(BaseModel):
    identities: list[IdentityInfo]


class FunctionList(BaseModel):
    functions: list[str]
    xi: str

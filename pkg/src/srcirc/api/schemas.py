"""Request/response models shared by the HTTP service and the CLI.

All exact quantities travel as strings: rationals as "p/q" (or a plain
integer/decimal literal), infinities as "inf", 0/0 as "indeterminate".
Complex numbers travel as [re, im] pairs of floats.
"""

from __future__ import annotations

from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field

RationalIn = Union[int, str]


class CheckRequest(BaseModel):
    coeffs: List[RationalIn]
    log_q: RationalIn = "2"
    grid: Optional[List[RationalIn]] = None
    certify: bool = False
    oracle: bool = True


class DeltaEntry(BaseModel):
    n: int
    det_plus: str
    det_minus: str
    Delta: str
    delta: str


class OracleInfo(BaseModel):
    classification: str
    roots: List[Tuple[float, float]]
    deviations: List[float]
    takagi_pass: bool


class CertificateInfo(BaseModel):
    verdict: str
    witness_n: Optional[int] = None
    witness_interval: Optional[Tuple[str, str]] = None
    reason: str = ""


class CheckResponse(BaseModel):
    verdict: str
    witness: Optional[List[str]] = None
    delta: List[str]
    gamma: List[str]
    report: List[DeltaEntry]
    oracle: Optional[OracleInfo] = None
    certified: Optional[bool] = None
    certificate: Optional[CertificateInfo] = None
    exit_code: int


class DeltaRequest(BaseModel):
    coeffs: List[RationalIn]
    log_q: RationalIn = "2"
    t: Optional[RationalIn] = Field(default=None, description="shift sample > 1; omit for the simple route")


class DeltaResponse(BaseModel):
    g: int
    provenance: str
    report: List[DeltaEntry]
    delta: List[str]


class HamiltonianRequest(BaseModel):
    coeffs: List[RationalIn]
    log_q: RationalIn = "2"


class HamiltonianStep(BaseModel):
    n: int
    gamma: str


class HamiltonianResponse(BaseModel):
    g: int
    log_q: str
    e_zero: str
    steps: List[HamiltonianStep]
    positive_definite: bool


class EvalRequest(BaseModel):
    coeffs: List[RationalIn]
    log_q: RationalIn = "2"
    z: Optional[Tuple[float, float]] = None
    z_grid: Optional[List[Tuple[float, float]]] = None
    interval: int = 1
    fraction: float = 0.0


class EvalSample(BaseModel):
    z: Tuple[float, float]
    A: Tuple[float, float]
    B: Tuple[float, float]
    K: Optional[Tuple[float, float]] = None  # kernel at (z, z); omitted on the real axis


class EvalResponse(BaseModel):
    samples: List[EvalSample]


class ReconstructRequest(BaseModel):
    gammas: List[RationalIn]
    p_one: RationalIn


class ReconstructResponse(BaseModel):
    coeffs: List[str]


class OracleRequest(BaseModel):
    coeffs: List[RationalIn]


class OracleResponse(BaseModel):
    classification: str
    verdict: str
    roots: List[Tuple[float, float]]
    deviations: List[float]
    residuals: List[float]
    clusters: List[List[int]]
    takagi_dets: List[str]
    takagi_pass: bool


class CertifyRequest(BaseModel):
    coeffs: List[RationalIn]
    grid: Optional[List[RationalIn]] = None


class CertifyResponse(BaseModel):
    verdict: str
    witness_n: Optional[int] = None
    witness_interval: Optional[Tuple[str, str]] = None
    reason: str = ""
    exit_code: int


class ErrorResponse(BaseModel):
    error: str
    exit_code: int = 3

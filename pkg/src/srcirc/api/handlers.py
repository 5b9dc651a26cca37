"""Service handlers: one pure function per operation.

Both the HTTP app and the CLI call these; they translate wire models into
library calls and exact results back into strings.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional

from .. import certify as certify_mod
from .. import criterion, oracle as oracle_mod
from ..canonical import eval_AB, hamiltonian, kernel_K, reconstruct_polynomial
from ..embedding import CoeffVector, InputError, LogScale
from ..exact.rational import ExtRational
from . import schemas


def parse_rational(value) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {value!r}") from exc


def parse_coeffs(values: List) -> CoeffVector:
    return CoeffVector.make([parse_rational(v) for v in values])


def _delta_entries(report: criterion.DeltaReport) -> List[schemas.DeltaEntry]:
    return [
        schemas.DeltaEntry(
            n=r.n,
            det_plus=str(r.det_plus),
            det_minus=str(r.det_minus),
            Delta=str(r.Delta),
            delta=str(r.delta),
        )
        for r in report.records
    ]


def _gamma_strings(report: criterion.DeltaReport) -> List[str]:
    return [str(gm) for gm in report.gammas()]


def _oracle_info(c: CoeffVector) -> schemas.OracleInfo:
    verdict = oracle_mod.verdict_oracle(c)
    ev = verdict.oracle
    return schemas.OracleInfo(
        classification=ev.root_report.classification,
        roots=[(z.real, z.imag) for z in ev.root_report.roots],
        deviations=list(ev.root_report.deviations),
        takagi_pass=ev.chain.passed,
    )


def _exit_code(verdict_class: Optional[str], certified: Optional[bool]) -> int:
    if verdict_class == criterion.SIMPLE_ON_CIRCLE:
        return 0
    if verdict_class == criterion.ON_CIRCLE_NOT_SIMPLE and certified:
        return 0
    if verdict_class == criterion.DEGENERATE or verdict_class is None:
        return 2
    return 1


def check(req: schemas.CheckRequest) -> schemas.CheckResponse:
    c = parse_coeffs(req.coeffs)
    scale = LogScale.make(parse_rational(req.log_q))
    grid = criterion.DEFAULT_GRID if req.grid is None else [parse_rational(t) for t in req.grid]
    verdict = criterion.verdict_simple(c, scale, grid)
    certified: Optional[bool] = None
    cert_info = None
    klass = verdict.klass
    witness = verdict.witness
    if req.certify and klass != criterion.SIMPLE_ON_CIRCLE:
        cert = certify_mod.certify_on_circle(c, grid=grid)
        cert_info = schemas.CertificateInfo(
            verdict=cert.verdict,
            witness_n=cert.witness_n,
            witness_interval=None if cert.witness_interval is None else
            (str(cert.witness_interval[0]), str(cert.witness_interval[1])),
            reason=cert.reason,
        )
        if cert.verdict == certify_mod.CERTIFIED_ON_T:
            klass = criterion.ON_CIRCLE_NOT_SIMPLE
            certified = True
        elif cert.verdict == certify_mod.CERTIFIED_FAIL:
            klass = criterion.OFF_CIRCLE
            certified = False
            witness = (cert.witness_n, cert.witness_interval[0]) if cert.witness_interval else witness
        else:
            klass = criterion.DEGENERATE
            certified = False
    oracle_info = _oracle_info(c) if req.oracle else None
    report = verdict.report
    return schemas.CheckResponse(
        verdict=klass if klass is not None else "Inconclusive",
        witness=None if witness is None else [str(w) for w in witness],
        delta=[str(r.delta) for r in report.records],
        gamma=_gamma_strings(report),
        report=_delta_entries(report),
        oracle=oracle_info,
        certified=certified,
        certificate=cert_info,
        exit_code=_exit_code(klass, certified),
    )


def delta(req: schemas.DeltaRequest) -> schemas.DeltaResponse:
    c = parse_coeffs(req.coeffs)
    if req.t is not None:
        report = criterion.delta_omega(c, parse_rational(req.t))
    else:
        report = criterion.delta_simple(c, LogScale.make(parse_rational(req.log_q)))
    return schemas.DeltaResponse(
        g=report.g,
        provenance=report.provenance,
        report=_delta_entries(report),
        delta=[str(r.delta) for r in report.records],
    )


def hamiltonian_handler(req: schemas.HamiltonianRequest) -> schemas.HamiltonianResponse:
    c = parse_coeffs(req.coeffs)
    H = hamiltonian(c, LogScale.make(parse_rational(req.log_q)))
    return schemas.HamiltonianResponse(
        g=H.g,
        log_q=str(H.L),
        e_zero=str(H.e_zero),
        steps=[schemas.HamiltonianStep(n=n, gamma=str(gm)) for n, gm in H.steps],
        positive_definite=H.positive_definite(),
    )


def eval_handler(req: schemas.EvalRequest) -> schemas.EvalResponse:
    c = parse_coeffs(req.coeffs)
    H = hamiltonian(c, LogScale.make(parse_rational(req.log_q)))
    points = []
    if req.z is not None:
        points.append(complex(*req.z))
    for pair in req.z_grid or []:
        points.append(complex(*pair))
    if not points:
        raise InputError("provide z or z_grid")
    samples = []
    for z in points:
        a, b = eval_AB(H, z, req.interval, req.fraction)
        if z.imag != 0:
            k = kernel_K(H, req.interval, req.fraction, z, z)
            kval = (k.real, k.imag)
        else:
            kval = None
        samples.append(schemas.EvalSample(z=(z.real, z.imag), A=(a.real, a.imag), B=(b.real, b.imag), K=kval))
    return schemas.EvalResponse(samples=samples)


def reconstruct(req: schemas.ReconstructRequest) -> schemas.ReconstructResponse:
    gammas = [parse_rational(gm) for gm in req.gammas]
    c = reconstruct_polynomial(gammas, parse_rational(req.p_one))
    return schemas.ReconstructResponse(coeffs=[str(x) for x in c.c])


def oracle_handler(req: schemas.OracleRequest) -> schemas.OracleResponse:
    c = parse_coeffs(req.coeffs)
    verdict = oracle_mod.verdict_oracle(c)
    ev = verdict.oracle
    residuals = oracle_mod.scaled_residuals(c.full_coefficients(), ev.root_report.roots)
    return schemas.OracleResponse(
        classification=ev.root_report.classification,
        verdict=verdict.klass,
        roots=[(z.real, z.imag) for z in ev.root_report.roots],
        deviations=list(ev.root_report.deviations),
        residuals=[float(r) for r in residuals],
        clusters=[list(cl) for cl in ev.root_report.clusters],
        takagi_dets=[str(d) for d in ev.chain.dets],
        takagi_pass=ev.chain.passed,
    )


def certify_handler(req: schemas.CertifyRequest) -> schemas.CertifyResponse:
    c = parse_coeffs(req.coeffs)
    grid = criterion.DEFAULT_GRID if req.grid is None else [parse_rational(t) for t in req.grid]
    cert = certify_mod.certify_on_circle(c, grid=grid)
    if cert.verdict == certify_mod.CERTIFIED_ON_T:
        code = 0
    elif cert.verdict == certify_mod.CERTIFIED_FAIL:
        code = 1
    else:
        code = 2
    return schemas.CertifyResponse(
        verdict=cert.verdict,
        witness_n=cert.witness_n,
        witness_interval=None if cert.witness_interval is None else
        (str(cert.witness_interval[0]), str(cert.witness_interval[1])),
        reason=cert.reason,
        exit_code=code,
    )

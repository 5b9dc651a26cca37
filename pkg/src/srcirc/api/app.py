"""HTTP face of the package: one POST endpoint per operation."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..canonical import NotConstructible, ReconstructionError, SingularStepError
from ..embedding import InputError
from ..oracle import OracleFailure
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="srcirc",
        description="Exact unit-circle root location for self-reciprocal polynomials",
        version="0.1.0",
    )

    def guard(fn, req):
        try:
            return fn(req)
        except InputError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except (NotConstructible, SingularStepError, ReconstructionError, OracleFailure) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/check", response_model=schemas.CheckResponse)
    def check(req: schemas.CheckRequest):
        return guard(handlers.check, req)

    @app.post("/delta", response_model=schemas.DeltaResponse)
    def delta(req: schemas.DeltaRequest):
        return guard(handlers.delta, req)

    @app.post("/hamiltonian", response_model=schemas.HamiltonianResponse)
    def hamiltonian(req: schemas.HamiltonianRequest):
        return guard(handlers.hamiltonian_handler, req)

    @app.post("/eval", response_model=schemas.EvalResponse)
    def evaluate(req: schemas.EvalRequest):
        return guard(handlers.eval_handler, req)

    @app.post("/reconstruct", response_model=schemas.ReconstructResponse)
    def reconstruct(req: schemas.ReconstructRequest):
        return guard(handlers.reconstruct, req)

    @app.post("/oracle", response_model=schemas.OracleResponse)
    def oracle(req: schemas.OracleRequest):
        return guard(handlers.oracle_handler, req)

    @app.post("/certify", response_model=schemas.CertifyResponse)
    def certify(req: schemas.CertifyRequest):
        return guard(handlers.certify_handler, req)

    return app


app = create_app()

"""HTTP front end: a thin FastAPI layer over the service functions.

Domain errors (degenerate cores, singular companions, non-prime moduli, ...)
map to 400; an internal cross-check failure maps to 500 because it means a
bug, not bad input.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .errors import InternalInconsistency, RecurringError
from .models import (
    AnalyzeRequest,
    OrbitReport,
    OrbitRequest,
    PrimeReport,
    SequenceRequest,
    SequenceResult,
    SweepRequest,
    SweepResult,
    VerifyReport,
    VerifyRequest,
)
from .service import build_prime_report, orbit_report, run_verify, sequence_rows, sweep_reports

app = FastAPI(
    title="recurring",
    version=__version__,
    description=(
        "Periods of integer linear recursions modulo primes, and the structure "
        "of the quotient rings F_p[X]/(C) they reflect."
    ),
)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except InternalInconsistency as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from exc
    except (RecurringError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/analyze", response_model=PrimeReport)
def analyze(req: AnalyzeRequest) -> PrimeReport:
    return _guard(build_prime_report, req.t, req.p)


@app.post("/sweep", response_model=SweepResult)
def sweep(req: SweepRequest) -> SweepResult:
    return _guard(sweep_reports, req.t, req.pmax)


@app.post("/verify", response_model=VerifyReport)
def verify(req: VerifyRequest) -> VerifyReport:
    return _guard(run_verify, req.k, req.coeff_bound, req.pmax, req.trials, req.seed)


@app.post("/sequence", response_model=SequenceResult)
def sequence(req: SequenceRequest) -> SequenceResult:
    return _guard(sequence_rows, req.t, req.start, req.stop, req.mod)


@app.post("/orbit", response_model=OrbitReport)
def orbit(req: OrbitRequest) -> OrbitReport:
    return _guard(orbit_report, req.t, req.p, req.m)

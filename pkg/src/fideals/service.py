"""HTTP surface: every operation the command line offers, as JSON over POST.

Run with `uvicorn fideals.service:app`.  The command-line client mounts this
app in-process by default, so the two surfaces cannot drift apart.
"""
from __future__ import annotations

import json
from typing import Iterator

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse

from . import __version__
from .engine import (
    construct_f_ideal,
    construct_f_ideal_auto,
    count_by_enumeration,
    count_f_ideals_closed_form,
    count_least_perfect_f_ideals,
    enumerate_f_ideals,
    is_f_ideal,
)
from .errors import BudgetExceededError, InputError, InternalInconsistencyError
from .graphs import check_fc, detect_type
from .monomials import Ideal, parse_monomial_set
from .perfect import is_lower_perfect, is_upper_perfect, perfect_number
from .schemas import (
    CheckRequest,
    CheckResponse,
    Classification,
    ConstructRequest,
    ConstructResponse,
    CountRequest,
    CountResponse,
    EnumerateRequest,
    FCConditions,
    PerfectRequest,
    PerfectResponse,
    UnmixednessReport,
    json_int,
)
from .unmixed import is_unmixed, minimal_primes

app = FastAPI(title="fideals", version=__version__)


def _error(status: int, kind: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status, content={"error": {"kind": kind, "message": message}}
    )


@app.exception_handler(InputError)
async def _input_error(request: Request, exc: InputError) -> JSONResponse:
    return _error(400, "input", str(exc))


@app.exception_handler(BudgetExceededError)
async def _budget_error(request: Request, exc: BudgetExceededError) -> JSONResponse:
    return _error(400, "budget", str(exc))


@app.exception_handler(InternalInconsistencyError)
async def _internal_error(request: Request, exc: InternalInconsistencyError) -> JSONResponse:
    return _error(500, "internal", str(exc))


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    ideal = Ideal.from_text(req.generators, req.n)
    verdict = is_f_ideal(ideal, req.max_scan_bits)
    classification = None
    if verdict.is_f_ideal and ideal.is_homogeneous() and ideal.deg == 2:
        found = detect_type(ideal)
        witness = None
        if found.witness is not None:
            witness = (list(found.witness[0]), list(found.witness[1]))
        classification = Classification(kind=found.kind, l=found.l, witness=witness)
    primes = minimal_primes(ideal)
    unmixedness = UnmixednessReport(
        unmixed=is_unmixed(ideal),
        codim=min(p.size for p in primes),
        minimal_primes=[list(p.variables()) for p in primes],
        pure=is_unmixed(ideal, route="purity", max_scan_bits=req.max_scan_bits),
    )
    return CheckResponse(
        n=ideal.n,
        generators=ideal.generators.text(),
        is_f_ideal=verdict.is_f_ideal,
        routes=verdict.routes,
        f_facet=list(verdict.f_facet),
        f_nonface=list(verdict.f_nonface),
        failure_detail=verdict.failure_detail,
        classification=classification,
        unmixedness=unmixedness,
    )


@app.post("/perfect", response_model=PerfectResponse)
def perfect(req: PerfectRequest) -> PerfectResponse:
    subset = parse_monomial_set(req.set, req.n)
    upper = is_upper_perfect(subset, req.d)
    lower = is_lower_perfect(subset, req.d)
    fc = None
    if req.d == 2:
        report = check_fc(subset)
        fc = FCConditions(
            cond_degree=report.cond_degree,
            cond_clique=report.cond_clique,
            cond_edgecount=report.cond_edgecount,
            cond_nonbipartite=report.cond_nonbipartite,
            satisfies_fc=report.satisfies_fc,
        )
    return PerfectResponse(
        n=req.n,
        d=req.d,
        set=subset.text(),
        size=len(subset),
        upper=upper,
        lower=lower,
        perfect=upper and lower,
        fc=fc,
    )


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    witness = None
    if req.mode == "perfect-number":
        if req.method not in ("brute", "formula"):
            raise InputError("perfect-number supports methods brute and formula")
        result = perfect_number(req.n, req.d, req.method, req.max_candidates)
        value = result.value
        witness = result.witness.text()
        method = result.method
    elif req.method == "formula":
        if req.d != 2:
            raise InputError("closed-form counts cover degree 2 only")
        if req.mode == "U":
            value = count_least_perfect_f_ideals(req.n).value
        else:
            value = count_f_ideals_closed_form(req.n).value
        method = "formula"
    elif req.method == "enumeration":
        value = count_by_enumeration(
            req.n, req.d, req.mode, req.max_candidates, req.workers
        ).value
        method = "enumeration"
    else:
        raise InputError(f"mode {req.mode} supports methods formula and enumeration")
    return CountResponse(
        n=req.n, d=req.d, mode=req.mode, method=method,
        value=json_int(value), witness=witness,
    )


@app.post("/construct", response_model=ConstructResponse)
def construct(req: ConstructRequest) -> ConstructResponse:
    if req.extra is None:
        ideal = construct_f_ideal_auto(req.n, tuple(req.b), req.max_candidates)
    else:
        ideal = construct_f_ideal(req.n, tuple(req.b), parse_monomial_set(req.extra, req.n))
    from .perfect import two_part_construction

    base = two_part_construction(req.n, tuple(req.b))
    extra = ideal.generators.difference(base)
    return ConstructResponse(
        n=req.n,
        generators=ideal.generators.text(),
        size=len(ideal.generators),
        part=sorted(req.b),
        extra=extra.text(),
    )


@app.post("/enumerate")
def enumerate_(req: EnumerateRequest) -> StreamingResponse:
    ideals = enumerate_f_ideals(req.n, req.d, req.max_candidates, req.workers)
    classify = req.d == 2

    def lines() -> Iterator[str]:
        for index, ideal in enumerate(ideals):
            row: dict = {"index": index, "generators": ideal.generators.text()}
            if classify:
                found = detect_type(ideal)
                row["type"] = found.kind
                row["l"] = found.l
            else:
                row["type"] = None
                row["l"] = None
            yield json.dumps(row) + "\n"

    return StreamingResponse(lines(), media_type="application/x-ndjson")

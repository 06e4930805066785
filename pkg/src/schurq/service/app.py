"""HTTP surface over the calculator: stateless endpoints, exact results.

Every computation is a pure function of the request, so the service can
be scaled or called concurrently without coordination.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import qcore
from ..compositions import is_partition, length, remove_at
from ..decomp import enumerate_decompositions, r_coeff, r_coeff_closed, remove_part_via_skew
from ..gamma import GammaPoly, gamma_normal_form
from ..suites import CATALOG, SuiteParams, run_suite
from .models import (
    CatalogEntry,
    ComputeRequest,
    ComputeResponse,
    DecomposeRequest,
    DecomposeResponse,
    DecomposeRow,
    PolyPayload,
    ReportModel,
    SkewRequest,
    SkewResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="schurq",
    description="Exact Pfaffian calculator and identity verifier for "
    "Q-functions indexed by integer compositions.",
    version="0.1.0",
)


def _payload(poly: GammaPoly) -> PolyPayload:
    data = poly.to_json_dict()
    return PolyPayload(text=poly.text(), terms=data["terms"])


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.get("/catalog", response_model=list[CatalogEntry])
def catalog() -> list[CatalogEntry]:
    return [
        CatalogEntry(name=s.name, level=s.level, description=s.description)
        for s in CATALOG.values()
    ]


@app.post("/compute", response_model=ComputeResponse)
def compute(req: ComputeRequest) -> ComputeResponse:
    value = qcore.schur_q(tuple(req.composition))
    if req.normalize:
        value = gamma_normal_form(value)
    return ComputeResponse(
        composition=req.composition, normalized=req.normalize, poly=_payload(value)
    )


@app.post("/skew", response_model=SkewResponse)
def skew(req: SkewRequest) -> SkewResponse:
    value = qcore.skew_schur_q(tuple(req.lam), tuple(req.mu))
    if req.normalize:
        value = gamma_normal_form(value)
    return SkewResponse(
        lam=req.lam, mu=req.mu, normalized=req.normalize, poly=_payload(value)
    )


@app.post("/decompose", response_model=DecomposeResponse)
def decompose(req: DecomposeRequest) -> DecomposeResponse:
    lam = tuple(req.lam)
    if not is_partition(lam):
        raise HTTPException(status_code=400, detail=f"{lam} is not a partition")
    if not 1 <= req.k <= length(lam):
        raise HTTPException(
            status_code=400,
            detail=f"k must be between 1 and {length(lam)}, got {req.k}",
        )
    k = req.k
    rows = []
    for i in range(k, 0, -1):
        recursive = r_coeff(lam, i, k)
        closed = r_coeff_closed(lam, i, k)
        rows.append(
            DecomposeRow(
                i=i,
                k=k,
                recursive=_payload(recursive),
                closed=_payload(closed),
                decompositions=len(enumerate_decompositions(i, k)),
                equal=recursive == closed,
            )
        )
    expansion = remove_part_via_skew(lam, k)
    direct = qcore.schur_q(remove_at(lam, k))
    return DecomposeResponse(
        lam=req.lam,
        k=k,
        rows=rows,
        expansion=_payload(expansion),
        direct=_payload(direct),
        equal=expansion == direct,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    if req.identity not in CATALOG:
        raise HTTPException(
            status_code=400,
            detail=f"unknown identity {req.identity!r}; catalog: {sorted(CATALOG)}",
        )
    try:
        params = SuiteParams(
            mode=req.mode,
            max_len=req.max_len,
            max_part=req.max_part,
            min_part=req.min_part,
            p_lo=req.p_lo,
            p_hi=req.p_hi,
            n_lo=req.n_lo,
            n_hi=req.n_hi,
            trials=req.trials,
            seed=req.seed,
            size=req.size,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    reports = run_suite(req.identity, params)
    failed = sum(1 for r in reports if not r.equal)
    return VerifyResponse(
        identity=req.identity,
        mode=req.mode,
        total=len(reports),
        failed=failed,
        all_equal=failed == 0,
        reports=[ReportModel(**r.to_json_dict()) for r in reports],
    )

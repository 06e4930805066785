"""Request/response schemas for the HTTP service."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class PolyTerm(BaseModel):
    coeff: str
    mono: dict[str, int]


class PolyPayload(BaseModel):
    """A polynomial in both canonical renderings."""

    text: str
    terms: list[PolyTerm]


class ComputeRequest(BaseModel):
    composition: list[int]
    normalize: bool = False


class ComputeResponse(BaseModel):
    composition: list[int]
    normalized: bool
    poly: PolyPayload


class SkewRequest(BaseModel):
    lam: list[int] = Field(description="outer composition")
    mu: list[int] = Field(description="inner composition")
    normalize: bool = False


class SkewResponse(BaseModel):
    lam: list[int]
    mu: list[int]
    normalized: bool
    poly: PolyPayload


class DecomposeRequest(BaseModel):
    lam: list[int]
    k: int = Field(description="1-based position of the part to remove")


class DecomposeRow(BaseModel):
    """One connection coefficient r_{i,k}, both computations."""

    i: int
    k: int
    recursive: PolyPayload
    closed: PolyPayload
    decompositions: int
    equal: bool


class DecomposeResponse(BaseModel):
    lam: list[int]
    k: int
    rows: list[DecomposeRow] = Field(description="i = k down to 1")
    expansion: PolyPayload = Field(description="removed-part value from the skew expansion")
    direct: PolyPayload = Field(description="removed-part value recomputed as a Pfaffian")
    equal: bool


class VerifyRequest(BaseModel):
    identity: str
    mode: str = "all"
    max_len: int = 4
    max_part: int = 6
    min_part: int = -3
    p_lo: int = -4
    p_hi: int = 5
    n_lo: int = -3
    n_hi: int = 6
    trials: int = 5
    seed: int = 0
    size: Optional[int] = None


class ReportModel(BaseModel):
    identity: str
    params: dict[str, Any]
    mode: str
    lhs: str
    rhs: str
    equal: bool


class VerifyResponse(BaseModel):
    identity: str
    mode: str
    total: int
    failed: int
    all_equal: bool
    reports: list[ReportModel]


class CatalogEntry(BaseModel):
    name: str
    level: str
    description: str

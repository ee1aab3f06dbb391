"""Request and response models for the HTTP service.

Counts can exceed 2^53 for large n, so integer payload fields that may grow
that far are serialized as decimal strings beyond that point; everything
else stays a plain JSON number.
"""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from .monomials import MAX_VARIABLES

JSON_SAFE_INT = 2**53


def json_int(value: int) -> int | str:
    """Big integers become decimal strings so JSON consumers keep precision."""
    return value if abs(value) <= JSON_SAFE_INT else str(value)


class CheckRequest(BaseModel):
    n: int = Field(ge=1, le=MAX_VARIABLES)
    generators: str
    max_scan_bits: int = Field(default=22, ge=1)


class Classification(BaseModel):
    kind: Literal["type_l", "c5_exceptional", "not_f_ideal_structure"]
    l: int | None = None
    witness: tuple[list[int], list[int]] | None = None


class UnmixednessReport(BaseModel):
    unmixed: bool
    codim: int
    minimal_primes: list[list[int]]
    pure: bool


class CheckResponse(BaseModel):
    n: int
    generators: str
    is_f_ideal: bool
    routes: dict[str, bool]
    f_facet: list[int]
    f_nonface: list[int]
    failure_detail: str | None = None
    classification: Classification | None = None
    unmixedness: UnmixednessReport


class PerfectRequest(BaseModel):
    n: int = Field(ge=1, le=MAX_VARIABLES)
    d: int = Field(ge=1)
    set: str


class FCConditions(BaseModel):
    cond_degree: bool
    cond_clique: bool
    cond_edgecount: bool
    cond_nonbipartite: bool
    satisfies_fc: bool


class PerfectResponse(BaseModel):
    n: int
    d: int
    set: str
    size: int
    upper: bool
    lower: bool
    perfect: bool
    fc: FCConditions | None = None


class CountRequest(BaseModel):
    n: int = Field(ge=1, le=MAX_VARIABLES)
    d: int = Field(default=2, ge=1)
    mode: Literal["U", "V", "perfect-number"]
    method: Literal["formula", "enumeration", "brute"] = "formula"
    max_candidates: int = Field(default=10**8, ge=1)
    workers: int = Field(default=1, ge=1)


class CountResponse(BaseModel):
    n: int
    d: int
    mode: str
    method: str
    value: int | str
    witness: str | None = None


class ConstructRequest(BaseModel):
    n: int = Field(ge=1, le=MAX_VARIABLES)
    b: list[int]
    extra: str | None = None
    max_candidates: int = Field(default=10**8, ge=1)


class ConstructResponse(BaseModel):
    n: int
    generators: str
    size: int
    part: list[int]
    extra: str


class EnumerateRequest(BaseModel):
    n: int = Field(ge=1, le=MAX_VARIABLES)
    d: int = Field(ge=1)
    max_candidates: int = Field(default=10**8, ge=1)
    workers: int = Field(default=1, ge=1)


class ErrorBody(BaseModel):
    kind: Literal["input", "budget", "internal"]
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody

"""Pydantic schemas shared by the HTTP API and the CLI output formats.

Big integers (discriminants, unit-group orders) travel as decimal strings so
64-bit JSON consumers cannot truncate them.  Field names and order are part
of the output contract.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class FactorEntry(BaseModel):
    poly: str
    multiplicity: int


class PrimeReport(BaseModel):
    """Everything this package can say about one (core, prime) pair.

    When p divides tk the companion matrix is singular: the period is only
    eventual (preperiod > 0 is possible) and the unit-group fields are null.
    """

    model_config = ConfigDict(extra="forbid")

    t: list[int]
    p: int
    period: int
    preperiod: int
    classification: str
    factors: list[FactorEntry]
    discriminant: str
    p_divides_discriminant: bool
    p_divides_period: bool
    thm67_agree: bool | None
    unit_group_order: str | None
    idempotent_ranks: list[int] | None
    exact_period: int | None


class SweepSummary(BaseModel):
    t: list[int]
    pmax: int
    primes_checked: int
    thm67_checked: int
    thm67_agreed: int


class SweepResult(BaseModel):
    reports: list[PrimeReport]
    summary: SweepSummary


class VerifyFailure(BaseModel):
    t: list[int]
    p: int
    kind: str
    detail: str


class VerifyReport(BaseModel):
    k: int
    coeff_bound: int
    pmax: int
    trials: int
    seed: int
    cores_checked: int
    pairs_checked: int
    failures: list[VerifyFailure]
    passed: bool


class SequenceRow(BaseModel):
    n: int
    gfp: str
    glp: str


class SequenceResult(BaseModel):
    t: list[int]
    start: int
    stop: int
    mod: int | None
    rows: list[SequenceRow]


class OrbitReport(BaseModel):
    t: list[int]
    p: int
    m: list[int]
    states: list[list[int]]
    preperiod: int
    period: int
    length: int


class AnalyzeRequest(BaseModel):
    t: list[int] = Field(min_length=1)
    p: int = Field(ge=2)


class SweepRequest(BaseModel):
    t: list[int] = Field(min_length=1)
    pmax: int = Field(ge=2, le=1_000_000)


class VerifyRequest(BaseModel):
    k: int = Field(ge=1, le=8)
    coeff_bound: int = Field(default=5, ge=1)
    pmax: int = Field(default=31, ge=2, le=10_000)
    trials: int = Field(default=100, ge=1)
    seed: int = 0


class SequenceRequest(BaseModel):
    t: list[int] = Field(min_length=1)
    start: int
    stop: int
    mod: int | None = Field(default=None, ge=2)


class OrbitRequest(BaseModel):
    t: list[int] = Field(min_length=1)
    p: int = Field(ge=2)
    m: list[int] = Field(min_length=1)

"""Pydantic documents emitted by the CLI (``--json``)."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# ============================================================================
# Shared Validation Utilities
# ============================================================================


def validate_bit_string(value: str) -> str:
    """Reject anything that is not a string of 0s and 1s."""
    if any(ch not in "01" for ch in value):
        raise ValueError(f"Invalid bit string: '{value}'")
    return value


class CandidateDocument(BaseModel):
    """One clamping of the PFVS and what became of it."""

    model_config = ConfigDict(extra="forbid")

    assignment: dict[str, int]
    state: str
    accepted: bool
    reason: Optional[Literal["not-fa-fixed", "boundary-mismatch"]] = None
    passes: int = Field(ge=0)
    settled_after: Optional[int] = None

    @field_validator("state")
    @classmethod
    def _check_state(cls, v: str) -> str:
        return validate_bit_string(v)

    @model_validator(mode="after")
    def _reason_matches_verdict(self) -> "CandidateDocument":
        if self.accepted and self.reason is not None:
            raise ValueError("accepted candidates carry no rejection reason")
        if not self.accepted and self.reason is None:
            raise ValueError("rejected candidates need a reason")
        return self


class ResultDocument(BaseModel):
    """Fixed-point report: network, sets and schedule used, fixed points found."""

    model_config = ConfigDict(extra="forbid")

    network: str
    n: int = Field(ge=0)
    strategy: Literal["basic", "scheduled", "auto"]
    P: list[str]
    F: Optional[list[str]] = None
    schedule: Optional[list[str]] = None
    fixed_points: list[str]
    candidates_tested: int = Field(ge=1)
    candidates: Optional[list[CandidateDocument]] = None
    timings_ms: Optional[dict[str, float]] = None

    @model_validator(mode="after")
    def _check_invariants(self) -> "ResultDocument":
        for bits in self.fixed_points:
            validate_bit_string(bits)
            if len(bits) != self.n:
                raise ValueError(f"fixed point '{bits}' does not have {self.n} bits")
        if self.fixed_points != sorted(self.fixed_points):
            raise ValueError("fixed points must be sorted lexicographically")
        if len(self.fixed_points) > self.candidates_tested:
            raise ValueError("more fixed points than candidates")
        if self.schedule is not None and len(self.schedule) != self.n:
            raise ValueError("schedule must list every component")
        return self


class PfvsDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    network: str
    order: list[str]
    P: list[str]
    O: list[str]  # noqa: E741
    F: list[str]
    phases: int = Field(ge=0)


class ArcDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    source: str
    target: str
    sign: Literal[1, -1]


class GraphDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    network: str
    n: int = Field(ge=0)
    arcs: list[ArcDocument]


class OracleDocument(BaseModel):
    """Brute-force cross-check of a network."""

    model_config = ConfigDict(extra="forbid")

    network: str
    n: int = Field(ge=0)
    fixed_points: list[str]
    tau: Optional[int] = None
    tau_plus: Optional[int] = None
    positive_cycles: Optional[bool] = None
    equivalences_hold: Optional[bool] = None
    violations: list[str] = Field(default_factory=list)

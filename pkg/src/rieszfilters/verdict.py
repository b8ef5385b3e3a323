"""Shared verdict type for axiom audits and claim checks."""

from __future__ import annotations

from dataclasses import dataclass, field


class Status:
    """Outcome labels for a single claim check."""

    HOLDS = "holds"
    COUNTEREXAMPLE = "counterexample"
    CONSTRUCTION_ERROR = "construction-error"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one claim check under one semantics mode.

    `witnesses` carries structured, JSON-ready payloads with enough data
    to replay any reported violation through the primitive membership
    definitions.
    """

    claim_id: str
    mode: str
    status: str
    instances: dict
    witnesses: tuple = ()
    notes: tuple = ()

    def to_json(self) -> dict:
        return {
            "id": self.claim_id,
            "mode": self.mode,
            "status": self.status,
            "instances": dict(sorted(self.instances.items())),
            "counterexamples": list(self.witnesses),
            "notes": list(self.notes),
        }

    @property
    def ok(self) -> bool:
        return self.status == Status.HOLDS

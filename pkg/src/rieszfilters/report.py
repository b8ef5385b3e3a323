"""Audit reports: canonical JSON serialization and text rendering.

The canonical JSON form is byte-deterministic for a fixed corpus and
seed: claims are ordered, keys sorted, and the measured runtime is
suppressed (the key is kept with a null value).  Wall-clock timing goes
to the text rendering instead, so two runs over the same inputs always
produce hash-equal canonical reports.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .verdict import Status, Verdict


@dataclass(frozen=True)
class AuditReport:
    claims: tuple[Verdict, ...]
    corpus_sha: str
    seed: int
    runtime_ms: int

    def canonical_dict(self) -> dict:
        ordered = sorted(self.claims, key=lambda v: (v.claim_id, v.mode))
        return {
            "claims": [v.to_json() for v in ordered],
            "corpus_sha": self.corpus_sha,
            "seed": self.seed,
            "runtime_ms": None,
        }

    def to_json_bytes(self) -> bytes:
        return (
            json.dumps(self.canonical_dict(), indent=2, sort_keys=True) + "\n"
        ).encode("utf-8")

    def sha256(self) -> str:
        return hashlib.sha256(self.to_json_bytes()).hexdigest()

    def to_text(self) -> str:
        lines = [
            f"corpus {self.corpus_sha[:12]}  seed {self.seed}  runtime {self.runtime_ms} ms",
            "",
            f"{'claim':<16} {'mode':<12} {'status':<20} instances",
            "-" * 72,
        ]
        ordered = sorted(self.claims, key=lambda v: (v.claim_id, v.mode))
        for v in ordered:
            counts = ", ".join(f"{k}={n}" for k, n in sorted(v.instances.items()))
            lines.append(f"{v.claim_id:<16} {v.mode:<12} {v.status:<20} {counts}")
            for w in v.witnesses:
                lines.append(f"    witness: {json.dumps(w, sort_keys=True)}")
            for note in v.notes:
                lines.append(f"    note: {note}")
        bad = [v for v in ordered if v.status == Status.CONSTRUCTION_ERROR]
        cx = [v for v in ordered if v.status == Status.COUNTEREXAMPLE]
        lines.append("-" * 72)
        lines.append(
            f"{len(ordered)} checks: "
            f"{sum(1 for v in ordered if v.status == Status.HOLDS)} hold, "
            f"{len(cx)} with counterexamples, {len(bad)} construction errors, "
            f"{sum(1 for v in ordered if v.status == Status.SKIPPED)} skipped"
        )
        return "\n".join(lines) + "\n"

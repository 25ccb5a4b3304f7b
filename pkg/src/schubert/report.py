"""Structured pass/fail results shared by every verifier and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .rootsys import RootSystem

__all__ = ["Report", "labeling_table", "canonical_json"]


@dataclass
class Report:
    """Outcome of one verification sweep.

    counterexamples and details hold JSON-serializable primitives only
    (words as lists of ints, characters as canonical strings), so reports
    can cross process boundaries and serialize byte-identically.
    """

    check_id: str
    cartan_type: str
    universe_size: int
    passed: bool
    counterexamples: list[dict[str, Any]]
    elapsed: float
    details: dict[str, Any] = field(default_factory=dict)

    def as_json_dict(self, engine_version: str, rs: RootSystem | None = None) -> dict:
        out: dict[str, Any] = {
            "check": self.check_id,
            "type": self.cartan_type,
            "universe": self.universe_size,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "elapsed_ms": int(self.elapsed * 1000),
            "engine_version": engine_version,
        }
        if rs is not None:
            out["labeling"] = labeling_table(rs)
        if self.details:
            out["details"] = self.details
        return out


def labeling_table(rs: RootSystem) -> dict:
    """Simple-root numbering data embedded in reports for reproducibility."""
    return {
        "convention": "Bourbaki",
        "cartan_matrix": [list(row) for row in rs.cartan],
        "pairing": "cartan[i][j] = <alpha_j, alpha_i_vee>",
        "symmetrizers": list(rs.d),
    }


def canonical_json(obj: Any) -> str:
    """Deterministic serialization; parse-then-dump round-trips byte-identically."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"

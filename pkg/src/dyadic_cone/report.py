"""JSON-lines records emitted by the command line and their payload encoders.

Residues encode as {"mod_exp": N, "value": v}, rationals as "num/den" strings,
polynomials as term-list strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .exact import DyadicResidue, INFINITY
from .harmonic import TriPoly, format_poly
from .lifting import DyadicRootApprox, ScanReport, StabilityReport


@dataclass(frozen=True)
class ReportRecord:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    result: Any = None
    status: str = "ok"
    error: Optional[str] = None
    message: Optional[str] = None

    def to_json(self) -> str:
        obj: dict[str, Any] = {
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
        }
        if self.status == "ok":
            obj["result"] = self.result
        else:
            obj["error"] = self.error
            obj["message"] = self.message
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> ReportRecord:
        obj = json.loads(line)
        return cls(
            command=obj["command"],
            parameters=obj.get("parameters", {}),
            result=obj.get("result"),
            status=obj["status"],
            error=obj.get("error"),
            message=obj.get("message"),
        )


def encode_residue(r: DyadicResidue) -> dict[str, int]:
    return {"mod_exp": r.mod_exp, "value": r.value}


def encode_valuation(v) -> Any:
    return "infinite" if v is INFINITY else v


def encode_root(root: DyadicRootApprox) -> dict[str, Any]:
    return {
        "m": root.m,
        "residue": encode_residue(root.as_residue()),
        "trace": [
            {
                "mod_exp": s.mod_exp,
                "residue": s.residue,
                "witness_l": s.witness_l,
                "h_value": s.h_value,
                "q": s.q,
            }
            for s in root.trace
        ],
    }


def encode_scan(rep: ScanReport) -> dict[str, Any]:
    return {
        "m": rep.m,
        "N": rep.mod_exp,
        "window_start": rep.window_start,
        "window_length": rep.window_length,
        "solutions": list(rep.solutions),
        "solution_class": (None if rep.solution_class is None
                           else {"mod_exp": rep.mod_exp + 1, "value": rep.solution_class}),
        "claim_verified": rep.claim_verified,
    }


def encode_stability(rep: StabilityReport) -> dict[str, Any]:
    return {
        "m": rep.m,
        "N": rep.mod_exp,
        "pairs_checked": rep.pairs_checked,
        "passed": rep.passed,
        "vacuous": rep.vacuous,
        "failures": [list(p) for p in rep.failures],
    }


def encode_poly(f: TriPoly) -> str:
    return format_poly(f)


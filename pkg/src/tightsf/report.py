"""Canonical JSON serialization: every rational is a {"num", "den"} pair.

Field order is fixed at construction time and json round-trips byte for byte;
no value in a report is ever a float.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .classify import ClassificationResult
from .convex import LimitInfo, SlopeCoeffs
from .seifert import SeifertData
from .slopes import Slope

SCHEMA = "tightsf/1"


def rat(x) -> dict[str, int]:
    if isinstance(x, Slope):
        return {"num": x.num, "den": x.den}
    f = Fraction(x)
    return {"num": f.numerator, "den": f.denominator}


def encode(value: Any) -> Any:
    if isinstance(value, (Slope, Fraction)):
        return rat(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, SlopeCoeffs):
        return {"A": rat(value.A), "C": rat(value.C), "F": rat(value.F), "D": rat(value.D)}
    if isinstance(value, LimitInfo):
        return {
            "limit": rat(value.limit),
            "increasing": value.increasing,
            "threshold_ok": value.threshold_ok,
        }
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def manifold_json(sd: SeifertData) -> dict[str, Any]:
    return {
        "e0": sd.e0,
        "r": [rat(x) for x in sd.r],
        "p": [c.p for c in sd.conv],
        "q": [c.q for c in sd.conv],
        "u": [c.u for c in sd.conv],
        "v": [c.v for c in sd.conv],
    }


def classification_json(res: ClassificationResult) -> dict[str, Any]:
    out: dict[str, Any] = {
        "input": str(res.manifold),
        "normalized": manifold_json(res.manifold),
        "e0": res.manifold.e0,
        "sum": rat(res.manifold.invariant_sum),
        "status": res.status,
    }
    if res.count is not None:
        out["count"] = res.count
    fill = {"kind": res.fillability.kind}
    if res.fillability.stein_lower is not None:
        fill["stein_lower"] = res.fillability.stein_lower
    if res.fillability.non_stein_lower is not None:
        fill["non_stein_lower"] = res.fillability.non_stein_lower
    if res.fillability.all_strong is not None:
        fill["all_strong"] = res.fillability.all_strong
    if res.fillability.note:
        fill["note"] = res.fillability.note
    out["fillability"] = fill
    out["certificate"] = {"case": res.certificate.case, **encode(res.certificate.data)}
    return out


def report(command: str, result: dict[str, Any]) -> str:
    doc = {"schema": SCHEMA, "exact": True, "command": command, "result": result}
    return json.dumps(doc, indent=2)

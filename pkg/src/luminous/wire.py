"""Shared JSON wire format for the CLI and the HTTP API.

Both front ends serialize through the builders here, so a solve report
rendered by the command line is byte-identical to the one served over
HTTP.  Bit strings are row-major '0'/'1' text with button 1 first.
"""

from __future__ import annotations

import json
import math
from typing import Any, Optional

from .board import Config, PressVector
from .criterion import SingularityVerdict
from .solver import SolveReport
from .spectral import DetResult


def canonical_json(obj: Any) -> str:
    """Deterministic rendering: sorted keys, no whitespace, strict JSON."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def press_vector_dict(x: PressVector) -> dict:
    return {"bits": x.to_string(), "buttons": list(x.buttons())}


def solve_report_dict(
    config: Config,
    report: SolveReport,
    solutions: Optional[list[PressVector]] = None,
) -> dict:
    out = {
        "rows": report.dims.rows,
        "cols": report.dims.cols,
        "config": config.to_string(),
        "solvable": report.solvable,
        "nullity": report.nullity,
        "solution_count": report.solution_count,
        "particular": press_vector_dict(report.particular) if report.particular else None,
        "minimal": press_vector_dict(report.minimal) if report.minimal else None,
        "minimal_weight": report.minimal_weight,
        "certified": report.certified,
    }
    if solutions is not None:
        out["solutions"] = [press_vector_dict(x) for x in solutions]
    return out


def criterion_dict(verdict: SingularityVerdict) -> dict:
    return {"singular": verdict.singular, "conditions": list(verdict.conditions)}


def det_dict(m: int, n: int, result: DetResult) -> dict:
    # the float product overflows double precision on huge grids; strict
    # JSON has no Infinity, so those degrade to null
    float_value = result.float_value if math.isfinite(result.float_value) else None
    return {
        "m": m,
        "n": n,
        "exact_zero": result.exact_zero,
        "float": float_value,
        "bareiss": str(result.exact_value) if result.exact_value is not None else None,
    }


def board_dict(rows: int, cols: int, seed: int, config: Config) -> dict:
    return {
        "rows": rows,
        "cols": cols,
        "seed": seed,
        "config": config.to_string(),
        "solvable": True,
    }


def hint_dict(rows: int, cols: int, solvable: bool, button: Optional[int]) -> dict:
    return {"rows": rows, "cols": cols, "solvable": solvable, "hint": button}


_BITSTRING = {"type": "string", "pattern": "^[01]+$"}

_PRESS_VECTOR = {
    "type": "object",
    "properties": {
        "bits": _BITSTRING,
        "buttons": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
    "required": ["bits", "buttons"],
    "additionalProperties": False,
}

# Published response schemas, by endpoint / subcommand.
SCHEMAS: dict[str, dict] = {
    "solve": {
        "type": "object",
        "properties": {
            "rows": {"type": "integer", "minimum": 1},
            "cols": {"type": "integer", "minimum": 1},
            "config": _BITSTRING,
            "solvable": {"type": "boolean"},
            "nullity": {"type": "integer", "minimum": 0},
            "solution_count": {"type": "integer", "minimum": 0},
            "particular": {"anyOf": [_PRESS_VECTOR, {"type": "null"}]},
            "minimal": {"anyOf": [_PRESS_VECTOR, {"type": "null"}]},
            "minimal_weight": {"anyOf": [{"type": "integer", "minimum": 0}, {"type": "null"}]},
            "certified": {"type": "boolean"},
            "solutions": {"type": "array", "items": _PRESS_VECTOR},
        },
        "required": [
            "rows",
            "cols",
            "config",
            "solvable",
            "nullity",
            "solution_count",
            "particular",
            "minimal",
            "minimal_weight",
            "certified",
        ],
        "additionalProperties": False,
    },
    "criterion": {
        "type": "object",
        "properties": {
            "singular": {"type": "boolean"},
            "conditions": {
                "type": "array",
                "items": {"enum": ["C1", "C2", "C3"]},
            },
        },
        "required": ["singular", "conditions"],
        "additionalProperties": False,
    },
    "det": {
        "type": "object",
        "properties": {
            "m": {"type": "integer", "minimum": 1},
            "n": {"type": "integer", "minimum": 1},
            "exact_zero": {"type": "boolean"},
            "float": {"anyOf": [{"type": "number"}, {"type": "null"}]},
            "bareiss": {"anyOf": [{"type": "string", "pattern": "^-?[0-9]+$"}, {"type": "null"}]},
        },
        "required": ["m", "n", "exact_zero", "float", "bareiss"],
        "additionalProperties": False,
    },
    "board": {
        "type": "object",
        "properties": {
            "rows": {"type": "integer", "minimum": 1},
            "cols": {"type": "integer", "minimum": 1},
            "seed": {"type": "integer"},
            "config": _BITSTRING,
            "solvable": {"const": True},
        },
        "required": ["rows", "cols", "seed", "config", "solvable"],
        "additionalProperties": False,
    },
    "hint": {
        "type": "object",
        "properties": {
            "rows": {"type": "integer", "minimum": 1},
            "cols": {"type": "integer", "minimum": 1},
            "solvable": {"type": "boolean"},
            "hint": {"anyOf": [{"type": "integer", "minimum": 1}, {"type": "null"}]},
        },
        "required": ["rows", "cols", "solvable", "hint"],
        "additionalProperties": False,
    },
}

"""JSON/CSV serialization of command results.

JSON floats use Python's shortest round-trip representation, so every
value parses back to the identical double.  CSV floats are written with
17 significant digits.
"""
from __future__ import annotations

import csv
import io
import json
import math

from . import __version__
from .classifier import RepClass, ThresholdSet
from .matrixrep import ResidualReport
from .params import AlgebraParams, CasimirValues, RepLabel
from .spectrum import Spectrum

SCHEMA_ID = "qosc.report"
SCHEMA_VERSION = 1


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def params_dict(params: AlgebraParams) -> dict:
    return {"q": params.q, "alpha": params.alpha}


def label_dict(label: RepLabel) -> dict:
    return {"nu0": label.nu0, "B": label.B, "lambda0": label.lambda0}


def complex_dict(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def casimir_dict(c: CasimirValues) -> dict:
    return {
        "c1": complex_dict(c.c1),
        "c2": complex_dict(c.c2),
        "c3": complex_dict(c.c3),
        "identity_residual": c.identity_residual(),
    }


def thresholds_dict(t: ThresholdSet) -> dict:
    return {"b_star": t.b_star, "d_plus": t.d_plus, "d_minus": t.d_minus, "e0": t.e0}


def spectrum_dict(s: Spectrum) -> dict:
    return {"lo": s.lo, "hi": s.hi, "values": list(s.values), "all_nonnegative": s.all_nonnegative}


def residuals_dict(r: ResidualReport) -> dict:
    return {
        "rel1_norm": r.rel1_norm,
        "comm_n_a": r.comm_n_a,
        "comm_n_adag": r.comm_n_adag,
        "anticomm_k_a": r.anticomm_k_a,
        "anticomm_k_adag": r.anticomm_k_adag,
        "comm_n_k": r.comm_n_k,
        "casimir_residual": r.casimir_residual,
        "hermiticity": r.hermiticity,
        "interior_dim": r.interior_dim,
        "scale": r.scale,
    }


def class_dict(rc: RepClass) -> dict:
    return rc.to_dict()


def make_report(command: str, params: AlgebraParams = None, label: RepLabel = None, tolerances: dict = None, **sections) -> dict:
    report = {
        "schema": SCHEMA_ID,
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": command,
        "params": params_dict(params) if params is not None else None,
        "label": label_dict(label) if label is not None else None,
        "tolerances": dict(tolerances or {}),
    }
    report.update(sections)
    return report


def _check_finite(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        raise ValueError(f"non-finite float {obj!r} cannot be serialized")
    if isinstance(obj, dict):
        for v in obj.values():
            _check_finite(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _check_finite(v)


def to_json(report: dict) -> str:
    _check_finite(report)
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def to_csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_float(v) if isinstance(v, float) else _cell(v) for v in row])
    return buf.getvalue()


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


_NUM = {"type": "number"}
_COMPLEX = {
    "type": "object",
    "required": ["re", "im"],
    "properties": {"re": _NUM, "im": _NUM},
}
_BOUND = {"oneOf": [{"type": "integer"}, {"enum": ["-inf", "inf"]}]}
_CLASS = {
    "type": "object",
    "required": ["family", "index_lo", "index_hi", "forced_lambda0", "lambda0_min", "lambda0_strict"],
    "properties": {
        "family": {
            "enum": [
                "OneDimensional",
                "TwoDimensionalOdd",
                "TwoDimensionalEven",
                "Fock",
                "AntiFock",
                "Unbounded",
            ]
        },
        "index_lo": _BOUND,
        "index_hi": _BOUND,
        "forced_lambda0": {"type": ["number", "null"]},
        "lambda0_min": {"type": ["number", "null"]},
        "lambda0_strict": {"type": "boolean"},
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": f"{SCHEMA_ID}/v{SCHEMA_VERSION}",
    "type": "object",
    "required": ["schema", "schema_version", "tool_version", "command", "params", "label", "tolerances"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "schema_version": {"const": SCHEMA_VERSION},
        "tool_version": {"type": "string"},
        "command": {"enum": ["classify", "spectrum", "matrix", "verify", "scan", "equiv", "limits"]},
        "params": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["q", "alpha"],
                    "properties": {"q": {"type": "number", "exclusiveMinimum": 0}, "alpha": _NUM},
                },
            ]
        },
        "label": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["nu0", "B", "lambda0"],
                    "properties": {"nu0": _NUM, "B": _NUM, "lambda0": {"type": "number", "minimum": 0}},
                },
            ]
        },
        "tolerances": {"type": "object", "additionalProperties": _NUM},
        "classes": {"type": "array", "items": _CLASS},
        "class": {"oneOf": [{"type": "null"}, _CLASS]},
        "thresholds": {
            "type": "object",
            "required": ["b_star", "d_plus", "d_minus", "e0"],
            "additionalProperties": _NUM,
        },
        "casimir": {
            "type": "object",
            "required": ["c1", "c2", "c3", "identity_residual"],
            "properties": {"c1": _COMPLEX, "c2": _COMPLEX, "c3": _COMPLEX, "identity_residual": _NUM},
        },
        "spectrum": {
            "type": "object",
            "required": ["lo", "hi", "values", "all_nonnegative"],
            "properties": {
                "lo": {"type": "integer"},
                "hi": {"type": "integer"},
                "values": {"type": "array", "items": _NUM},
                "all_nonnegative": {"type": "boolean"},
            },
        },
        "residuals": {
            "type": "object",
            "required": [
                "rel1_norm",
                "comm_n_a",
                "comm_n_adag",
                "anticomm_k_a",
                "anticomm_k_adag",
                "comm_n_k",
                "casimir_residual",
                "interior_dim",
                "scale",
            ],
            "properties": {"interior_dim": {"type": "integer", "minimum": 0}},
            "additionalProperties": {"type": "number", "minimum": 0},
        },
        "grid": {
            "type": "object",
            "required": ["q_values", "b_values", "cells", "boundary_cells"],
            "properties": {
                "q_values": {"type": "array", "items": _NUM},
                "b_values": {"type": "array", "items": _NUM},
                "cells": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
                },
                "boundary_cells": {
                    "type": "array",
                    "items": {"type": "array", "items": _NUM, "minItems": 2, "maxItems": 2},
                },
            },
        },
        "error": {"type": "object", "required": ["type", "message"]},
    },
}

"""JSON certificate documents (schema version 1).

Rationals travel as ``"p/q"`` strings so that nothing is ever rounded.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

from .exact import format_rational
from .twistor import FatnessCertificate

SCHEMA_VERSION = 1

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+/[1-9][0-9]*$"}

CERTIFICATE_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Twistor fatness certificate",
    "type": "object",
    "additionalProperties": False,
    "required": [
        "schema_version", "space", "label", "params", "root_counts", "dim_m",
        "t0", "status", "fiber", "note", "witness", "oracle", "warnings",
    ],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "space": {"enum": ["DGrass", "BGrass", "CGrass", "AGrass", "F4_SO9", "G2_SU3"]},
        "label": {"type": "string"},
        "params": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["n", "m"],
                    "properties": {
                        "n": {"type": "integer", "minimum": 0},
                        "m": {"type": "integer", "minimum": 0},
                    },
                },
            ]
        },
        "root_counts": {
            "type": "object",
            "additionalProperties": False,
            "required": ["ambient", "isotropy", "complement"],
            "properties": {
                k: {"type": "integer", "minimum": 0} for k in ("ambient", "isotropy", "complement")
            },
        },
        "dim_m": {"type": "integer", "minimum": 0},
        "t0": {"oneOf": [{"type": "null"}, {"type": "array", "items": _RATIONAL}]},
        "status": {"enum": ["certified", "infeasible", "not-applicable"]},
        "fiber": {"type": "string", "pattern": r"^SO\([0-9]+\)/U\([0-9]+\)$"},
        "note": {"type": "string"},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["roots", "relations"],
                    "properties": {
                        "roots": {"type": "array", "items": {"type": "array", "items": _RATIONAL}},
                        "relations": {"type": "array", "items": {"type": "string"}},
                    },
                },
            ]
        },
        "oracle": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["dim_m", "adT_square_ok", "fatness_det_nonzero"],
                    "properties": {
                        "dim_m": {"type": "integer", "minimum": 0},
                        "adT_square_ok": {"type": "boolean"},
                        "fatness_det_nonzero": {"type": "boolean"},
                        "bracket_closed": {"type": "boolean"},
                        "killing_orthogonal": {"type": "boolean"},
                        "fatness_pfaffian": _RATIONAL,
                    },
                },
            ]
        },
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
}


@dataclass(frozen=True)
class CertificateDocument:
    schema_version: int
    space: str
    label: str
    params: Optional[Dict[str, int]]
    root_counts: Dict[str, int]
    dim_m: int
    t0: Optional[List[str]]
    status: str
    fiber: str
    note: str
    witness: Optional[Dict[str, Any]]
    oracle: Optional[Dict[str, Any]]
    warnings: List[str]

    @classmethod
    def from_certificate(cls, cert: FatnessCertificate) -> "CertificateDocument":
        spec = cert.spec
        witness = None
        if cert.witness is not None:
            witness = {
                "roots": [[format_rational(x) for x in r.coords] for r in cert.witness.roots],
                "relations": cert.witness.describe(),
            }
        oracle = None
        rep = cert.oracle_report
        if rep is not None:
            oracle = {
                "dim_m": rep.dim_m,
                "adT_square_ok": rep.adT_square_ok,
                "fatness_det_nonzero": rep.fatness_det_nonzero,
                "bracket_closed": rep.bracket_closed,
                "killing_orthogonal": rep.killing_orthogonal,
                "fatness_pfaffian": format_rational(rep.fatness_pfaffian),
            }
        a, h, c = cert.root_counts
        return cls(
            schema_version=SCHEMA_VERSION,
            space=spec.family,
            label=spec.label,
            params=None if spec.is_exceptional else {"n": spec.n, "m": spec.m},
            root_counts={"ambient": a, "isotropy": h, "complement": c},
            dim_m=cert.dim_m,
            t0=None if cert.t0 is None else [format_rational(x) for x in cert.t0.t0],
            status=cert.status,
            fiber=cert.fiber,
            note=cert.note,
            witness=witness,
            oracle=oracle,
            warnings=list(cert.warnings),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CertificateDocument":
        return cls(**data)

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "CertificateDocument":
        return cls.from_dict(json.loads(text))


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)

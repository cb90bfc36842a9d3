"""Canonical JSON reports.

Byte-for-byte reproducibility is a contract here: two runs with the same
inputs must serialize identically. Hence sorted keys, sorted set contents,
a fixed indent, a trailing newline, and no timestamps or wall-clock numbers
anywhere in a report (work counters are deterministic; clocks are not).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

SCHEMA_VERSION = "1"


def to_jsonable(obj):
    """Coerce package objects into plain JSON-friendly structures."""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (frozenset, set)):
        return sorted(to_jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__} into a report")


def canonical_json(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


@dataclass
class ExperimentConfig:
    command: str
    params: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"command": self.command, "params": self.params}


def make_report(config: ExperimentConfig, results: dict, work: dict | None = None) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "config": to_jsonable(config),
        "results": to_jsonable(results),
    }
    if work is not None:
        report["work"] = to_jsonable(work)
    return report

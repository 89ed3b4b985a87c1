"""Structured JSON reports.

Reports are schema-versioned and deterministic for fixed inputs and
seeds; the ``timing`` block is the one field excluded from byte
comparisons.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = 1
TOOL = "tensq"


@dataclass
class Report:
    command: str
    input: dict
    results: dict
    seed: int | None = None
    timing: dict = field(default_factory=dict)
    version: str = ""

    def to_dict(self, include_timing=True):
        out = {
            "schema": SCHEMA,
            "tool": TOOL,
            "version": self.version,
            "command": self.command,
            "input": self.input,
            "seed": self.seed,
            "results": self.results,
        }
        if include_timing:
            out["timing"] = self.timing
        return out

    def to_json(self, include_timing=True):
        return canonical_json(self.to_dict(include_timing=include_timing))


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_report(report, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report.to_json())

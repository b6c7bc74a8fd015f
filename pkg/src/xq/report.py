"""Pass/fail reports for structure checkers and classification runs.

Reports are deterministic: sampling seeds come from the XQ_SEED environment
variable (default 0) and are recorded in the report metadata.  JSON output
uses sorted keys, and integers outside the 53-bit safe range are rendered as
decimal strings.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Any

SAFE_INT = 2 ** 53


def seed_from_env() -> int:
    raw = os.environ.get("XQ_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"XQ_SEED must be an integer, got {raw!r}")


def encode_numbers(obj: Any) -> Any:
    """Recursively stringify integers that exceed 53-bit safety."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return obj if -SAFE_INT < obj < SAFE_INT else str(obj)
    if isinstance(obj, (list, tuple)):
        return [encode_numbers(x) for x in obj]
    if isinstance(obj, dict):
        return {k: encode_numbers(v) for k, v in obj.items()}
    return obj


@dataclass
class Check:
    check_id: str
    passed: bool
    witness: str | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"id": self.check_id, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    axioms: list[str] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    obstructions: list[dict] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, passed: bool, witness: str | None = None,
            note: str | None = None) -> Check:
        check = Check(check_id, bool(passed), witness, note)
        self.checks.append(check)
        return check

    def merge(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.check_id, c.passed, c.witness, c.note))
        for a in other.axioms:
            if a not in self.axioms:
                self.axioms.append(a)
        self.witnesses.extend(other.witnesses)
        self.obstructions.extend(other.obstructions)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json_obj(self) -> dict:
        out: dict[str, Any] = {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.axioms:
            out["axioms"] = list(self.axioms)
        if self.witnesses:
            out["witnesses"] = self.witnesses
        if self.obstructions:
            out["obstructions"] = self.obstructions
        if self.meta:
            out["meta"] = self.meta
        return encode_numbers(out)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2) + "\n"

    def text(self) -> str:
        lines = [self.title]
        for key, value in sorted(self.meta.items()):
            lines.append(f"  {key}: {value}")
        for a in self.axioms:
            lines.append(f"  axiom: {a}")
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.check_id}"
            if c.note:
                line += f" ({c.note})"
            if c.witness and not c.passed:
                line += f" -- {c.witness}"
            lines.append(line)
        lines.append("OK" if self.ok else
                     f"FAILED ({len(self.failed())} of {len(self.checks)} checks)")
        return "\n".join(lines) + "\n"

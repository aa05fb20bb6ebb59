"""Run reports and their text/JSON renderings."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

STATUS_OK = "ok"
STATUS_ERROR = "error"
STATUS_FAILED = "FAILED"


@dataclass
class ProvenanceEntry:
    label: str
    ideal: list[str]
    colength: int | None
    oracle: int | str | None = None

    @property
    def oracle_agrees(self) -> bool:
        if self.colength is None:
            return not isinstance(self.oracle, int)
        return self.oracle == self.colength


@dataclass
class Report:
    task: str
    result: Any = None
    provenance: list[ProvenanceEntry] = field(default_factory=list)
    seed: int = 0
    oracle_checked: bool = False
    status: str = STATUS_OK
    error: str | None = None
    notes: list[str] = field(default_factory=list)
    timing: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        d = dict(d)
        d["provenance"] = [ProvenanceEntry(**p) for p in d.get("provenance", [])]
        return cls(**d)

    @classmethod
    def from_json(cls, data: bytes | str) -> Report:
        return cls.from_dict(json.loads(data))


def _fmt_colength(v) -> str:
    return "infinite" if v is None else str(v)


def _text(r: Report) -> str:
    lines = [f"task: {r.task}", f"seed: {r.seed}"]
    if r.error is not None:
        lines.append(f"error: {r.error}")
    elif isinstance(r.result, dict) and "mobius" in r.result:
        lines.append("mobius inverse:")
        for i, k, v in r.result["mobius"]:
            lines.append(f"  m[{i},{k}] = {v}")
    elif r.result is not None:
        lines.append(f"index = {r.result}")
    if r.provenance:
        lines.append("provenance:")
        for p in r.provenance:
            entry = f"  {p.label}: ({', '.join(p.ideal)}) colength {_fmt_colength(p.colength)}"
            if r.oracle_checked:
                mark = "" if p.oracle_agrees else "  MISMATCH"
                entry += f" | oracle {_fmt_colength(p.oracle)}{mark}"
            lines.append(entry)
    for note in r.notes:
        lines.append(f"note: {note}")
    lines.append(f"oracle checked: {'yes' if r.oracle_checked else 'no'}")
    lines.append(f"status: {r.status}")
    lines.append(f"time: {r.timing:.3f}s")
    return "\n".join(lines) + "\n"


def emit_report(r: Report, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(r.to_dict(), indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt == "text":
        return _text(r).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")

"""Scan/hunt reports with TSV and JSON ("berge-report/1") serializations.

Timing is kept out of the serialized forms so that equal seeds and budgets give
byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA = "berge-report/1"


@dataclass
class Violation:
    params: tuple
    lhs: Any
    rhs: Any
    note: str = ""

    def as_list(self) -> list:
        return [list(self.params), self.lhs, self.rhs, self.note]


@dataclass
class ScanReport:
    claim: str
    grid: dict
    columns: tuple[str, ...] = ()
    rows: list[tuple] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0
    skipped: int = 0
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "ScanReport") -> None:
        self.rows.extend(other.rows)
        self.violations.extend(other.violations)
        self.checked += other.checked
        self.skipped += other.skipped
        self.elapsed += other.elapsed

    def sort(self) -> None:
        self.rows.sort()
        self.violations.sort(key=lambda v: (v.params, str(v.lhs), str(v.rhs)))

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA,
            "claim": self.claim,
            "grid": self.grid,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": [v.as_list() for v in self.violations],
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
        }
        if self.extra:
            doc["extra"] = self.extra
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_tsv(self) -> str:
        lines = [f"# {SCHEMA} claim={self.claim} checked={self.checked} skipped={self.skipped} "
                 f"violations={len(self.violations)}"]
        if self.columns:
            lines.append("\t".join(self.columns))
            lines.extend("\t".join(map(str, r)) for r in self.rows)
        for v in self.violations:
            lines.append("VIOLATION\t" + "\t".join(map(str, v.params)) + f"\t{v.lhs}\t{v.rhs}\t{v.note}")
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        return (f"{self.claim}: checked={self.checked} skipped={self.skipped} "
                f"violations={len(self.violations)}")

"""Pass/fail records produced by the identity-verification operations.

A report is a flat list of records, one per checked instance.  Failure is
data, not an exception: callers inspect .passed and .first_failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckRecord:
    identity: str
    status: str                 # "pass" or "fail"
    params: dict = field(default_factory=dict)
    detail: str = ""

    def to_json_dict(self) -> dict:
        d = {"identity": self.identity}
        d.update(self.params)
        d["status"] = self.status
        if self.detail:
            d["detail"] = self.detail
        return d


class CheckReport:
    """Ordered collection of check records with merge and summary helpers."""

    def __init__(self, records=()):
        self.records = list(records)

    def add_pass(self, identity: str, **params):
        self.records.append(CheckRecord(identity, "pass", params))

    def add_fail(self, identity: str, detail: str = "", **params):
        self.records.append(CheckRecord(identity, "fail", params, detail))

    def check(self, identity: str, ok: bool, detail: str = "", **params):
        if ok:
            self.add_pass(identity, **params)
        else:
            self.add_fail(identity, detail, **params)
        return ok

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.records.extend(other.records)
        return self

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.records)

    @property
    def first_failure(self):
        for r in self.records:
            if r.status != "pass":
                return r
        return None

    def to_json_records(self):
        return [r.to_json_dict() for r in self.records]

    def to_json(self) -> str:
        return json.dumps(self.to_json_records(), separators=(",", ":"))

    def summary_lines(self):
        """One line per identity: ok/FAIL, the identity, instance count."""
        order, by_identity = [], {}
        for r in self.records:
            if r.identity not in by_identity:
                order.append(r.identity)
                by_identity[r.identity] = []
            by_identity[r.identity].append(r)
        lines = []
        for name in order:
            recs = by_identity[name]
            bad = [r for r in recs if r.status != "pass"]
            mark = "ok  " if not bad else "FAIL"
            lines.append(f"{mark} {name} ({len(recs) - len(bad)}/{len(recs)} instances)")
        return lines

    def __len__(self):
        return len(self.records)

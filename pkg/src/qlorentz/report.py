"""Verification report data model shared by all suites.

A report is a flat list of relation-check entries plus the configuration
that produced them.  `flagged` marks checks that reproduce a known printed
discrepancy on purpose; flagged entries never fail a run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"


@dataclass
class Entry:
    name: str
    anchor: str = ""
    backend: str = "symbolic"
    block: str = ""
    p: str = ""
    status: str = PASS
    residual: str = "0"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class VerificationReport:
    suite: str
    config: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)

    def add(self, name, *, anchor="", backend="symbolic", block="", p="",
            status=PASS, residual="0") -> Entry:
        e = Entry(name=name, anchor=anchor, backend=backend, block=block,
                  p=str(p), status=status, residual=residual)
        self.entries.append(e)
        return e

    def check(self, name, ok: bool, *, anchor="", backend="symbolic",
              block="", p="", residual="0", expected_failure=False) -> Entry:
        """Add a pass/fail entry; expected_failure turns a failing check into
        a flagged one (and a passing check into a fail, since the discrepancy
        should have been reproduced)."""
        if expected_failure:
            status = FLAGGED if not ok else FAIL
        else:
            status = PASS if ok else FAIL
        return self.add(name, anchor=anchor, backend=backend, block=block,
                        p=p, status=status,
                        residual="0" if ok else residual)

    def extend(self, entries) -> None:
        self.entries.extend(entries)

    @property
    def summary(self) -> dict:
        out = {PASS: 0, FAIL: 0, FLAGGED: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary[FAIL] == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "entries": [e.to_dict() for e in self.entries],
            "summary": self.summary,
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        rep = cls(suite=d["suite"], config=dict(d["config"]))
        for e in d["entries"]:
            rep.entries.append(Entry(**e))
        return rep

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        if self.config:
            cfg = ", ".join(f"{k}={v}" for k, v in self.config.items())
            lines.append(f"config: {cfg}")
        width = max((len(e.name) for e in self.entries), default=0)
        for e in self.entries:
            loc = " ".join(x for x in (e.backend, e.block,
                                       f"p={e.p}" if e.p else "") if x)
            line = f"  [{e.status.upper():7s}] {e.name:<{width}s}  ({loc})"
            if e.status != PASS and e.residual not in ("", "0"):
                line += f"  residual: {e.residual}"
            lines.append(line)
        s = self.summary
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, "
                     f"{s['flagged']} flagged")
        return "\n".join(lines)

"""Verification reports: one line per checked statement."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ._util import counterexample, fmt


@dataclass
class Check:
    id: str
    statement: str
    passed: bool | None
    witness: tuple | None = None
    bound: str | None = None

    def line(self):
        tag = {True: "PASS", False: "FAIL", None: "N/A "}[self.passed]
        s = f"[{tag}] {self.id}: {self.statement}"
        if self.bound:
            s += f"  (bound: {self.bound})"
        if self.witness is not None:
            s += f"  witness={fmt(tuple(self.witness))}"
        return s

    def to_dict(self):
        return {
            "id": self.id,
            "statement": self.statement,
            "passed": self.passed,
            "bound": self.bound,
            "witness": None if self.witness is None else [fmt(w) for w in self.witness],
        }


@dataclass
class Report:
    subject: str
    bound: str | None = None
    checks: list[Check] = field(default_factory=list)

    def add(self, id, statement, passed, witness=None, bound=None):
        if any(c.id == id for c in self.checks):
            raise ValueError(f"statement {id!r} already reported")
        if passed is False and witness is None:
            witness = ()
        c = Check(id, statement, passed, witness, bound if bound is not None else self.bound)
        self.checks.append(c)
        return c

    def scan(self, id, statement, predicate, *domains, bound=None):
        """Check ``predicate`` on every tuple of ``domains``; keep the first failure."""
        w = counterexample(predicate, *domains)
        return self.add(id, statement, w is None, w, bound)

    def extend(self, other: Report, prefix=""):
        for c in other.checks:
            self.add(prefix + c.id, c.statement, c.passed, c.witness, c.bound)
        return self

    def __getitem__(self, id) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def __contains__(self, id):
        return any(c.id == id for c in self.checks)

    @property
    def ok(self):
        return all(c.passed is not False for c in self.checks)

    @property
    def failed(self):
        return [c.id for c in self.checks if c.passed is False]

    def require(self):
        from .errors import VerificationError

        if not self.ok:
            bad = [c.line() for c in self.checks if c.passed is False]
            raise VerificationError(f"{self.subject}: " + "; ".join(bad), self)
        return self

    def to_text(self):
        head = self.subject + (f" [bound: {self.bound}]" if self.bound else "")
        return "\n".join([head] + ["  " + c.line() for c in self.checks])

    def to_dict(self):
        return {"subject": self.subject, "bound": self.bound, "ok": self.ok,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

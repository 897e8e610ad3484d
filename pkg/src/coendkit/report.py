"""Itemized pass/fail reports with basis-index witnesses."""
from __future__ import annotations

import numbers
from dataclasses import dataclass, field


def _plain(x):
    """JSON-friendly witness entries: ints for numpy integers, strings for field elements."""
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    if isinstance(x, numbers.Integral):
        return int(x)
    return str(x)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: tuple | None = None
    informational: bool = False
    detail: str = ""

    def to_dict(self):
        d = {"axiom": self.name, "pass": self.ok}
        if self.witness is not None:
            w = self.witness
            d["witness"] = [_plain(x) for x in w] if isinstance(w, (tuple, list)) else _plain(w)
        if self.informational:
            d["informational"] = True
        if self.detail:
            d["detail"] = self.detail
        return d

    def __str__(self):
        tag = "PASS" if self.ok else ("INFO" if self.informational else "FAIL")
        extra = f" witness={self.witness}" if self.witness is not None else ""
        return f"[{tag}] {self.name}{extra}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class ValidationReport:
    subject: str = ""
    checks: list = field(default_factory=list)

    def equal(self, name, lhs, rhs, informational=False, detail=""):
        """Record ``lhs == rhs`` for two matrices, with the first differing index as witness."""
        if lhs.shape != rhs.shape:
            self.checks.append(Check(name, False, None, informational, f"shape {lhs.shape} vs {rhs.shape}"))
            return False
        w = lhs.diff(rhs)
        self.checks.append(Check(name, w is None, w, informational, detail))
        return w is None

    def flag(self, name, ok, witness=None, informational=False, detail=""):
        self.checks.append(Check(name, bool(ok), witness, informational, detail))
        return bool(ok)

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness, c.informational, c.detail))
        return self

    @property
    def ok(self):
        return all(c.ok for c in self.checks if not c.informational)

    def __bool__(self):
        return self.ok

    def failures(self):
        return [c for c in self.checks if not c.ok and not c.informational]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        return {"subject": self.subject, "pass": self.ok, "checks": [c.to_dict() for c in self.checks]}

    def __str__(self):
        head = f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"
        return "\n".join([head] + ["  " + str(c) for c in self.checks])

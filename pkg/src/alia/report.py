"""Verdicts of identity checks, with witnesses for failed instances."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

MAX_WITNESSES = 16


class InternalConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagreed."""


class Violation(NamedTuple):
    identity: str
    index: tuple  # 0-based basis indices of the failing instance
    residual: tuple  # nonzero residual, flattened


@dataclass
class CheckReport:
    identity: str
    passed: bool = True
    violations: list = field(default_factory=list)
    checked: int = 0
    failures: int = 0
    parts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def witnesses(self, identity=None):
        return [v for v in self.violations if identity is None or v.identity == identity]

    def to_json(self, fmt=str):
        """JSON-ready dict; indices become 1-based and scalars pass through ``fmt``."""
        out = {
            "identity": self.identity,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "violations": [
                {
                    "identity": v.identity,
                    "index": [i + 1 for i in v.index],
                    "residual": [fmt(x) for x in v.residual],
                }
                for v in self.violations
            ],
        }
        if self.parts:
            out["parts"] = {k: p.to_json(fmt) for k, p in self.parts.items()}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


class Collector:
    """Accumulates instance results into a :class:`CheckReport`."""

    def __init__(self, identity, max_witnesses=MAX_WITNESSES):
        self.report = CheckReport(identity)
        self.max_witnesses = max_witnesses

    def check(self, index, residual, identity=None):
        """Record one instance; ``residual`` is any iterable of scalars."""
        rep = self.report
        rep.checked += 1
        residual = tuple(residual)
        if any(x != 0 for x in residual):
            rep.failures += 1
            rep.passed = False
            if len(rep.violations) < self.max_witnesses:
                rep.violations.append(
                    Violation(identity or rep.identity, tuple(index), residual)
                )
            return False
        return True

    def fail(self, index=(), residual=(), identity=None):
        rep = self.report
        rep.checked += 1
        rep.failures += 1
        rep.passed = False
        if len(rep.violations) < self.max_witnesses:
            rep.violations.append(Violation(identity or rep.identity, tuple(index), tuple(residual)))

    def done(self):
        return self.report


def combine(identity, parts, max_witnesses=MAX_WITNESSES, notes=()):
    """Conjunction of named sub-reports."""
    rep = CheckReport(identity, parts=dict(parts), notes=list(notes))
    for p in rep.parts.values():
        rep.checked += p.checked
        rep.failures += p.failures
        if not p.passed:
            rep.passed = False
            for v in p.violations:
                if len(rep.violations) < max_witnesses:
                    rep.violations.append(v)
    if not rep.passed and not rep.violations:
        # keep passed <=> violations empty even if every part hit its cap at zero
        rep.violations.append(Violation(identity, (), ()))
    return rep

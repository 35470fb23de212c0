"""Uniform pass/fail reports for axiom checkers.

Every ``check_*`` function walks a finite list of axioms over basis
tuples and produces a Report: the first violating witness per axiom, a
total violation count, and the lists of axioms that were checked or
skipped.  Reports serialise to plain JSON with scalars rendered as exact
strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import Vec, is_zero_vec


@dataclass(frozen=True)
class Violation:
    """First witness for one violated axiom: named basis indices + delta."""

    axiom: str
    witness: tuple  # tuple[(role, index), ...]
    delta: Vec | None = None

    def to_json(self) -> dict:
        out: dict = {"axiom": self.axiom}
        out.update({role: idx for role, idx in self.witness})
        if self.delta is not None:
            out["delta"] = [str(s) for s in self.delta]
        return out


@dataclass(frozen=True)
class Report:
    check: str
    instance: str = ""
    violations: tuple = ()
    violation_count: int = 0
    checked: tuple = ()
    skipped: tuple = ()
    weight: str | None = None
    trials: int | None = None

    @property
    def result(self) -> str:
        if self.violation_count:
            return "fail"
        if self.skipped and not self.checked:
            return "skipped"
        return "pass"

    @property
    def ok(self) -> bool:
        return self.result == "pass"

    def to_json(self) -> dict:
        out: dict = {
            "check": self.check,
            "instance": self.instance,
            "result": self.result,
        }
        if self.weight is not None:
            out["weight"] = self.weight
        if self.trials is not None:
            out["trials"] = self.trials
        if self.violations:
            out["witness"] = self.violations[0].to_json()
            out["violations"] = self.violation_count
        if self.skipped:
            out["skipped"] = list(self.skipped)
        return out


class Checker:
    """Accumulates axiom outcomes; keeps one witness per axiom."""

    def __init__(self, check: str, instance: str = "", weight: str | None = None):
        self._check = check
        self._instance = instance
        self._weight = weight
        self._trials: int | None = None
        self._violations: dict[str, Violation] = {}
        self._count = 0
        self._checked: list[str] = []
        self._skipped: list[str] = []

    def _touch(self, axiom: str) -> None:
        if axiom not in self._checked:
            self._checked.append(axiom)

    def fail(self, axiom: str, witness: tuple, delta: Vec | None = None) -> None:
        self._touch(axiom)
        self._count += 1
        if axiom not in self._violations:
            self._violations[axiom] = Violation(axiom, tuple(witness), delta)

    def require(self, axiom: str, witness: tuple, holds: bool) -> None:
        self._touch(axiom)
        if not holds:
            self.fail(axiom, witness)

    def equal_vec(self, axiom: str, witness: tuple, got: Vec, want: Vec) -> None:
        self._touch(axiom)
        if got != want:
            delta = tuple(a - b for a, b in zip(got, want))
            self.fail(axiom, witness, delta)

    def zero_vec(self, axiom: str, witness: tuple, v: Vec) -> None:
        self._touch(axiom)
        if not is_zero_vec(v):
            self.fail(axiom, witness, v)

    def skip(self, axiom: str) -> None:
        if axiom not in self._skipped:
            self._skipped.append(axiom)

    def set_trials(self, n: int) -> None:
        self._trials = n

    @property
    def failed(self) -> bool:
        return self._count > 0

    def report(self) -> Report:
        return Report(
            check=self._check,
            instance=self._instance,
            violations=tuple(self._violations.values()),
            violation_count=self._count,
            checked=tuple(self._checked),
            skipped=tuple(self._skipped),
            weight=self._weight,
            trials=self._trials,
        )

"""Per-axiom verdicts with reproducible counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .kernel import Matrix, render_rational


@dataclass(frozen=True)
class Verdict:
    label: str
    passed: bool
    witness: tuple | None = None
    defect: Any = None  # vector (tuple of Fraction) or Matrix
    note: str = ""

    def to_dict(self) -> dict:
        out: dict = {"label": self.label, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.defect is not None:
            out["defect"] = _jsonable(self.defect)
        if self.note:
            out["note"] = self.note
        return out

    def render(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.label}"
        parts = []
        if self.witness is not None:
            parts.append(f"witness={_text(self.witness)}")
        if self.defect is not None:
            parts.append(f"defect={_text(self.defect)}")
        if self.note:
            parts.append(self.note)
        return head + (" " + " ".join(parts) if parts else "")


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)

    def add(self, label: str, passed: bool, witness=None, defect=None, note: str = "") -> Verdict:
        v = Verdict(label, bool(passed), witness, defect, note)
        self.entries.append(v)
        return v

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for v in other.entries:
            self.entries.append(Verdict(prefix + v.label, v.passed, v.witness, v.defect, v.note))
        return self

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.entries)

    def __getitem__(self, label: str) -> Verdict:
        for v in self.entries:
            if v.label == label:
                return v
        raise KeyError(label)

    def __contains__(self, label: str) -> bool:
        return any(v.label == label for v in self.entries)

    def labels(self) -> list:
        return [v.label for v in self.entries]

    def failures(self) -> list:
        return [v for v in self.entries if not v.passed]

    def to_dict(self) -> dict:
        return {"passed": self.passed, "entries": [v.to_dict() for v in self.entries]}

    def render(self) -> str:
        return "\n".join(v.render() for v in self.entries)

    def __bool__(self):
        return self.passed


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if isinstance(obj, Matrix):
        return [[render_rational(a) for a in obj.row(i)] for i in range(obj.rows)]
    if isinstance(obj, (tuple, list)):
        return [_jsonable(o) for o in obj]
    return obj


def _text(obj) -> str:
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if isinstance(obj, Matrix):
        return "[" + "; ".join(" ".join(render_rational(a) for a in obj.row(i))
                               for i in range(obj.rows)) + "]"
    if isinstance(obj, (tuple, list)):
        return "(" + ", ".join(_text(o) for o in obj) + ")"
    return str(obj)

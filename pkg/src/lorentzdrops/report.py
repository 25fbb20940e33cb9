"""Structured pass/fail records for inequality and identity verification."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["BoundsEntry", "BoundsReport"]


@dataclass(frozen=True)
class BoundsEntry:
    """One verified relation, stored as 'lhs < rhs' (or <= when not strict).

    margin = rhs - lhs; identities are encoded with lhs = |deviation| and
    rhs = tolerance so the same convention applies.  low_confidence entries
    are evaluated and reported but never fail a report.
    """

    name: str
    formula: str
    lhs: float
    rhs: float
    strict: bool = True
    low_confidence: bool = False

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return self.margin > 0.0 if self.strict else self.margin >= 0.0

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        if self.low_confidence and not self.passed:
            status = "info"
        return (f"{status:4s}  {self.name:32s} lhs={self.lhs: .10e} "
                f"rhs={self.rhs: .10e} margin={self.margin: .3e}  {self.formula}")


@dataclass
class BoundsReport:
    """A batch of verified relations with the profile they were checked on."""

    entries: list[BoundsEntry] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, name: str, formula: str, lhs: float, rhs: float,
            strict: bool = True, low_confidence: bool = False):
        self.entries.append(BoundsEntry(name, formula, float(lhs), float(rhs),
                                        strict, low_confidence))

    def extend(self, other: "BoundsReport") -> "BoundsReport":
        self.entries.extend(other.entries)
        for key, val in other.meta.items():
            self.meta.setdefault(key, val)
        return self

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, name: str) -> BoundsEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    @property
    def failures(self) -> list[BoundsEntry]:
        return [e for e in self.entries if not e.passed and not e.low_confidence]

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def to_records(self) -> list[dict]:
        return [
            {"name": e.name, "formula": e.formula, "lhs": e.lhs, "rhs": e.rhs,
             "margin": e.margin, "strict": e.strict, "pass": e.passed,
             "low_confidence": e.low_confidence}
            for e in self.entries
        ]

    def to_text(self) -> str:
        head = [f"# {k} = {v}" for k, v in self.meta.items()]
        body = [e.line() for e in self.entries]
        n_fail = len(self.failures)
        tail = [f"# {len(self.entries)} checks, {n_fail} failures"]
        return "\n".join(head + body + tail) + "\n"

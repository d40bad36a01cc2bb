from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Fact:
    """One checked step of a double count: a relation between two integers, or a verdict."""

    name: str
    holds: bool
    lhs: int | None = None
    rhs: int | None = None
    relation: str = ""

    def __str__(self):
        mark = "ok  " if self.holds else "FAIL"
        if self.relation:
            return f"[{mark}] {self.name}: {self.lhs} {self.relation} {self.rhs}"
        return f"[{mark}] {self.name}"

    def as_dict(self) -> dict:
        d = {"name": self.name, "holds": self.holds}
        if self.relation:
            d.update(lhs=self.lhs, rhs=self.rhs, relation=self.relation)
        return d


def leq(name: str, lhs: int, rhs: int) -> Fact:
    return Fact(name, lhs <= rhs, lhs, rhs, "<=")


def eq(name: str, lhs: int, rhs: int) -> Fact:
    return Fact(name, lhs == rhs, lhs, rhs, "==")


def verdict(name: str, holds: bool) -> Fact:
    return Fact(name, bool(holds))

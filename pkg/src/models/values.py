"""
Vector sets and value sets
"""

from fractions import Fraction
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from ..geometry.linear import Polyhedron
from .rational import format_rational


class SccPolyhedron(BaseModel):
    """F_min(conv(S_C)) of one SCC, with LimSup coordinates flipped back"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scc: int
    polyhedron: Polyhedron


class VectorSet(BaseModel):
    """Union over reachable cycle-bearing SCCs of their F_min polyhedra"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    leaf_ids: tuple[str, ...]
    per_scc: tuple[SccPolyhedron, ...]
    flip_mask: frozenset[int] = frozenset()

    @property
    def dimension(self) -> int:
        return len(self.leaf_ids)

    def contains_point(self, point) -> bool:
        return any(entry.polyhedron.contains_point(point) for entry in self.per_scc)


class Interval(BaseModel):
    """Closed interval [lo, hi]"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lo: Fraction
    hi: Fraction

    @model_validator(mode="after")
    def _check_order(self) -> "Interval":
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        return self

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    def distance_to(self, value: Fraction) -> Fraction:
        if value < self.lo:
            return self.lo - value
        if value > self.hi:
            return value - self.hi
        return Fraction(0)

    def as_json(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


class IntervalUnion(BaseModel):
    """Sorted, disjoint, closed intervals; abutting intervals are merged"""
    model_config = ConfigDict(frozen=True)

    intervals: tuple[Interval, ...] = ()

    @classmethod
    def of(cls, intervals: Iterable[Interval]) -> "IntervalUnion":
        merged: list[Interval] = []
        for interval in sorted(intervals, key=lambda i: (i.lo, i.hi)):
            if merged and interval.lo <= merged[-1].hi:
                last = merged[-1]
                merged[-1] = Interval(lo=last.lo, hi=max(last.hi, interval.hi))
            else:
                merged.append(interval)
        return cls(intervals=tuple(merged))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def min(self) -> Optional[Fraction]:
        return self.intervals[0].lo if self.intervals else None

    @property
    def max(self) -> Optional[Fraction]:
        return self.intervals[-1].hi if self.intervals else None

    def contains(self, value: Fraction) -> bool:
        return any(interval.contains(value) for interval in self.intervals)

    def distance_to(self, value: Fraction) -> Optional[Fraction]:
        """Exact distance from value to the set; None for the empty set"""
        if not self.intervals:
            return None
        return min(interval.distance_to(value) for interval in self.intervals)

    def max_abs(self) -> Fraction:
        if not self.intervals:
            return Fraction(0)
        return max(abs(self.min), abs(self.max))

    def as_json(self) -> list[dict]:
        return [interval.as_json() for interval in self.intervals]

    def __str__(self) -> str:
        return " u ".join(str(i) for i in self.intervals) or "{}"

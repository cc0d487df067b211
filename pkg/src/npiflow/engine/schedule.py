"""Piecewise-constant exogenous inputs keyed by day index."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Schedule:
    """A step function over simulation days.

    ``default`` applies before the first breakpoint; each breakpoint
    ``(day_index, value)`` switches the value from that day onward.
    Lookups are right-inclusive: at exactly the breakpoint day the new
    value already applies.
    """

    default: float
    breakpoints: tuple[tuple[int, float], ...] = ()
    _days: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        bps = tuple((int(d), float(v)) for d, v in self.breakpoints)
        days = tuple(d for d, _ in bps)
        if any(b >= a for b, a in zip(days, days[1:])):
            raise ValueError(f"breakpoint days must be strictly increasing: {days}")
        if not math.isfinite(self.default) or any(
            not math.isfinite(v) for _, v in bps
        ):
            raise ValueError("schedule values must be finite")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "_days", days)

    def value_at(self, day: float) -> float:
        """Value in effect at ``day`` (the last breakpoint with day_index <= day)."""
        if day < 0:
            raise ValueError(f"day must be >= 0, got {day}")
        idx = bisect_right(self._days, day)
        if idx == 0:
            return self.default
        return self.breakpoints[idx - 1][1]

    def values(self) -> tuple[float, ...]:
        """Default plus every breakpoint value (handy for invariant checks)."""
        return (self.default,) + tuple(v for _, v in self.breakpoints)


def eval_schedule(schedule: Schedule, day: float) -> float:
    return schedule.value_at(day)

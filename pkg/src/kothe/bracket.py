"""Certified intervals.

Every limit/supremum estimator in the library returns a :class:`Bracket`
``[lower, upper]`` instead of a bare float, so truncation error is carried
explicitly instead of silently.  ``certified`` records whether both ends
are backed by an actual bound (integral test, closed form, ...) or the
upper end is merely heuristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

_SLOP = 1e-12


@dataclass(frozen=True)
class Bracket:
    lower: float
    upper: float
    certified: bool = True
    note: str = ""

    def __post_init__(self):
        if math.isnan(self.lower) or math.isnan(self.upper):
            raise ValueError("NaN bracket end")
        if self.lower > self.upper + _SLOP * max(1.0, abs(self.upper)):
            raise ValueError(f"inverted bracket [{self.lower}, {self.upper}]")

    # -- constructors -------------------------------------------------
    @staticmethod
    def point(value: float, certified: bool = True, note: str = "") -> "Bracket":
        return Bracket(value, value, certified, note)

    # -- diagnostics ---------------------------------------------------
    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def mid(self) -> float:
        if math.isinf(self.upper):
            return self.upper
        return 0.5 * (self.lower + self.upper)

    def rel_width(self) -> float:
        scale = max(abs(self.lower), abs(self.upper))
        return 0.0 if scale == 0 else self.width / scale

    def contains(self, value: float, slop: float = _SLOP) -> bool:
        pad = slop * max(1.0, abs(value))
        return self.lower - pad <= value <= self.upper + pad

    # -- arithmetic (monotone operations only) ------------------------
    def __add__(self, other: "Bracket | float") -> "Bracket":
        if isinstance(other, Bracket):
            return Bracket(self.lower + other.lower, self.upper + other.upper,
                           self.certified and other.certified)
        return Bracket(self.lower + other, self.upper + other, self.certified)

    __radd__ = __add__

    def scale(self, c: float) -> "Bracket":
        if c < 0:
            raise ValueError("scale by nonnegative constants only")
        return Bracket(self.lower * c, self.upper * c, self.certified)

    def apply_monotone(self, f) -> "Bracket":
        return Bracket(f(self.lower), f(self.upper), self.certified)

    def maximum(self, other: "Bracket | float") -> "Bracket":
        if not isinstance(other, Bracket):
            other = Bracket.point(other)
        return Bracket(max(self.lower, other.lower), max(self.upper, other.upper),
                       self.certified and other.certified)

    def uncertified(self, note: str = "") -> "Bracket":
        return replace(self, certified=False, note=note or self.note)

    def __str__(self) -> str:  # compact, for reports
        tag = "" if self.certified else " (heuristic)"
        if self.width <= _SLOP * max(1.0, abs(self.upper)):
            return f"{self.mid:.12g}{tag}"
        return f"[{self.lower:.12g}, {self.upper:.12g}]{tag}"


def merge_max(brackets) -> Bracket:
    """Bracket for the max of finitely many bracketed quantities."""
    brackets = list(brackets)
    if not brackets:
        return Bracket.point(0.0)
    lo = max(b.lower for b in brackets)
    hi = max(b.upper for b in brackets)
    return Bracket(lo, hi, all(b.certified for b in brackets))

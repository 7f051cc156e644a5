"""Sequences with symbolic tails.

A :class:`SequenceSpec` is a finite prefix (1-based indices 1..m) plus a
tail rule giving ``x_n`` for ``n > m``.  Tail rules carry the certificates
that every bracketed norm downstream relies on: exact suprema over tails,
integral-test bounds for tail power sums, and limsups.

Index convention: ``materialize(N)[i]`` is ``x_{i+1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bracket import Bracket
from .errors import DescriptorError, UnboundedTail, UnsupportedTail

INF = math.inf


def power_sum_tail(beta: float, m: int) -> Bracket:
    """Integral-test bracket for sum_{k>=m} k^(-beta), m >= 1."""
    if beta <= 1.0:
        return Bracket(INF, INF, note="divergent")
    integral = m ** (1.0 - beta) / (beta - 1.0)
    return Bracket(integral, m ** (-beta) + integral)


class TailRule:
    """Values of x_n beyond the prefix, with certificates."""

    is_zero = False

    def value(self, n: int) -> float:
        raise NotImplementedError

    def values(self, ns: np.ndarray) -> np.ndarray:
        return np.array([self.value(int(n)) for n in ns], dtype=float)

    def sup_from(self, n: int) -> float:
        """sup_{m >= n} |x_m|; raises UnboundedTail if infinite."""
        raise UnsupportedTail(f"{type(self).__name__}: no supremum certificate")

    def limsup_abs(self) -> float:
        raise UnsupportedTail(f"{type(self).__name__}: no limsup certificate")

    def pow_sum_from(self, p: float, n: int) -> Bracket:
        """Bracket for sum_{k >= n} |x_k|^p."""
        raise UnsupportedTail(f"{type(self).__name__}: no power-sum certificate")

    def majorant_rule(self) -> "TailRule":
        """A non-increasing rule dominating |x_n| with x~_n = sup_{m>=n}|x_m|."""
        raise UnsupportedTail(f"{type(self).__name__}: no majorant rule")

    def times_power(self, c: float, expo: float) -> "TailRule | None":
        """Rule for x_n * c * n^expo, or None if not closed under the product."""
        return None

    def nonincreasing_abs(self) -> bool:
        """Whether |x_n| is non-increasing on the whole tail."""
        return False


@dataclass(frozen=True)
class ZeroTail(TailRule):
    is_zero = True

    def value(self, n):
        return 0.0

    def sup_from(self, n):
        return 0.0

    def limsup_abs(self):
        return 0.0

    def pow_sum_from(self, p, n):
        return Bracket.point(0.0)

    def majorant_rule(self):
        return self

    def times_power(self, c, expo):
        return self

    def nonincreasing_abs(self):
        return True


@dataclass(frozen=True)
class PowerTail(TailRule):
    """x_n = c * (n - shift)^(-alpha).  alpha may be any real internally;
    user-facing power tails have alpha > 0."""

    c: float
    alpha: float
    shift: int = 0

    def value(self, n):
        return self.c * (n - self.shift) ** (-self.alpha)

    def values(self, ns):
        return self.c * (np.asarray(ns, dtype=float) - self.shift) ** (-self.alpha)

    def sup_from(self, n):
        if self.c == 0.0:
            return 0.0
        if self.alpha < 0.0:
            raise UnboundedTail("power tail with negative exponent is unbounded")
        return abs(self.value(n))

    def limsup_abs(self):
        if self.c == 0.0 or self.alpha > 0.0:
            return 0.0
        if self.alpha == 0.0:
            return abs(self.c)
        raise UnboundedTail("power tail with negative exponent is unbounded")

    def pow_sum_from(self, p, n):
        if self.c == 0.0:
            return Bracket.point(0.0)
        m = n - self.shift
        if m < 1:
            raise ValueError("tail index before rule start")
        return power_sum_tail(self.alpha * p, m).scale(abs(self.c) ** p)

    def majorant_rule(self):
        if self.alpha >= 0.0:
            return PowerTail(abs(self.c), self.alpha, self.shift)
        raise UnboundedTail("power tail with negative exponent is unbounded")

    def times_power(self, c, expo):
        if self.shift != 0:
            return None  # (n - s)^(-a) * n^e is not a pure power
        return PowerTail(self.c * c, self.alpha - expo)

    def nonincreasing_abs(self):
        return self.alpha >= 0.0


@dataclass(frozen=True)
class PowLogTail(TailRule):
    """x_n = c * n^a / log(n + 1)."""

    c: float
    a: float

    def value(self, n):
        return self.c * n ** self.a / math.log(n + 1)

    def sup_from(self, n):
        if self.c == 0.0:
            return 0.0
        if self.a > 0.0:
            raise UnboundedTail("log-power tail with positive exponent")
        return abs(self.value(n))

    def limsup_abs(self):
        if self.c == 0.0 or self.a <= 0.0:
            return 0.0
        raise UnboundedTail("log-power tail with positive exponent")

    def pow_sum_from(self, p, n):
        if self.c == 0.0:
            return Bracket.point(0.0)
        beta = -self.a * p
        scale = abs(self.c) ** p
        if beta > 1.0:
            # 1/log(k+1)^p <= 1/log(n+1)^p on the tail
            upper = power_sum_tail(beta, n).upper / math.log(n + 1) ** p
            return Bracket(0.0, scale * upper)
        if beta == 1.0 and p > 1.0:
            # sum 1/(k log^p(k+1)) <= integral of 1/(t log^p t) from n-1
            upper = math.log(max(n - 1, 2)) ** (1.0 - p) / (p - 1.0)
            return Bracket(0.0, scale * upper)
        return Bracket(INF, INF, note="divergent")

    def majorant_rule(self):
        if self.a <= 0.0:
            return PowLogTail(abs(self.c), self.a)
        raise UnboundedTail("log-power tail with positive exponent")

    def times_power(self, c, expo):
        return PowLogTail(self.c * c, self.a + expo)

    def nonincreasing_abs(self):
        return self.a <= 0.0


@dataclass(frozen=True)
class ConstPlusPowerTail(TailRule):
    """x_n = c0 + c * n^(-alpha), alpha > 0, with c0 >= 0 and c0 + c >= 0."""

    c0: float
    c: float
    alpha: float

    def __post_init__(self):
        if self.alpha <= 0.0:
            raise DescriptorError("const-plus-power tail needs alpha > 0")
        if self.c0 < 0.0 or self.c0 + self.c < 0.0:
            raise DescriptorError("const-plus-power tail must stay nonnegative")

    def value(self, n):
        return self.c0 + self.c * n ** (-self.alpha)

    def sup_from(self, n):
        if self.c >= 0.0:
            return self.value(n)
        return self.c0  # increasing toward the limit

    def limsup_abs(self):
        return self.c0

    def pow_sum_from(self, p, n):
        if self.c0 == 0.0:
            return PowerTail(self.c, self.alpha).pow_sum_from(p, n)
        return Bracket(INF, INF, note="divergent")

    def majorant_rule(self):
        if self.c >= 0.0:
            return self
        return ConstPlusPowerTail(self.c0, 0.0, self.alpha)

    def nonincreasing_abs(self):
        return self.c >= 0.0


@dataclass(frozen=True)
class AlternatingTail(TailRule):
    """x_n = base + amp * (-1)^n."""

    base: float
    amp: float

    def value(self, n):
        return self.base + self.amp * (-1.0) ** (n % 2)

    def _peak(self):
        return max(abs(self.base + self.amp), abs(self.base - self.amp))

    def sup_from(self, n):
        return self._peak()

    def limsup_abs(self):
        return self._peak()

    def pow_sum_from(self, p, n):
        if self.base == 0.0 and self.amp == 0.0:
            return Bracket.point(0.0)
        return Bracket(INF, INF, note="divergent")

    def majorant_rule(self):
        return ConstPlusPowerTail(self._peak(), 0.0, 1.0)


@dataclass(frozen=True)
class CompositeTail(TailRule):
    """Sum of nonnegative non-increasing power-type terms (majorant use)."""

    terms: tuple[TailRule, ...]

    def __post_init__(self):
        for t in self.terms:
            if not t.nonincreasing_abs():
                raise DescriptorError("composite tail terms must be non-increasing")

    def value(self, n):
        return sum(abs(t.value(n)) for t in self.terms)

    def sup_from(self, n):
        return self.value(n)

    def limsup_abs(self):
        return sum(t.limsup_abs() for t in self.terms)

    def pow_sum_from(self, p, n):
        # Minkowski upper bound; lower end left at zero.
        up = sum(t.pow_sum_from(p, n).upper ** (1.0 / p) for t in self.terms) ** p
        return Bracket(0.0, up)

    def majorant_rule(self):
        return self

    def times_power(self, c, expo):
        parts = [t.times_power(abs(c), expo) for t in self.terms]
        if any(p is None for p in parts):
            return None
        return CompositeTail(tuple(parts))

    def nonincreasing_abs(self):
        return True


ZERO = ZeroTail()


@dataclass(frozen=True)
class SequenceSpec:
    """Finite prefix + tail rule (+ optional non-increasing tail majorant)."""

    prefix: tuple[float, ...]
    tail: TailRule = ZERO
    tail_majorant: TailRule | None = None

    def __post_init__(self):
        if any(not math.isfinite(v) for v in self.prefix):
            raise DescriptorError("prefix entries must be finite")

    @staticmethod
    def of(*values: float) -> "SequenceSpec":
        return SequenceSpec(tuple(float(v) for v in values))

    @staticmethod
    def from_array(arr) -> "SequenceSpec":
        return SequenceSpec(tuple(float(v) for v in np.asarray(arr).ravel()))

    # -- basic access --------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.prefix)

    def value(self, n: int) -> float:
        if n < 1:
            raise IndexError("indices are 1-based")
        if n <= self.m:
            return self.prefix[n - 1]
        return self.tail.value(n)

    def materialize(self, n: int) -> np.ndarray:
        out = np.zeros(n)
        k = min(n, self.m)
        out[:k] = self.prefix[:k]
        if n > self.m and not self.tail.is_zero:
            out[self.m:] = self.tail.values(np.arange(self.m + 1, n + 1))
        return out

    @property
    def finite_support(self) -> bool:
        return self.tail.is_zero

    def effective_majorant(self) -> TailRule:
        """Tail majorant: the declared one, else derived from the rule."""
        if self.tail_majorant is not None:
            return self.tail_majorant
        return self.tail.majorant_rule()

    # -- elementwise helpers -------------------------------------------
    def abs(self) -> "SequenceSpec":
        tail = self.tail
        if isinstance(tail, PowerTail):
            tail = PowerTail(abs(tail.c), tail.alpha, tail.shift)
        elif isinstance(tail, PowLogTail):
            tail = PowLogTail(abs(tail.c), tail.a)
        elif not (tail.is_zero or tail.nonincreasing_abs()
                  or isinstance(tail, (ConstPlusPowerTail, AlternatingTail))):
            raise UnsupportedTail("cannot take |x| of this tail rule")
        # const-plus-power and alternating tails are nonnegative by contract
        return SequenceSpec(tuple(abs(v) for v in self.prefix), tail,
                            self.tail_majorant)

    def times_power_weight(self, c: float, expo: float) -> "SequenceSpec":
        """x_n * c * n^expo with the tail rule carried along."""
        pref = tuple(v * c * (i + 1) ** expo for i, v in enumerate(self.prefix))
        tail = self.tail.times_power(c, expo)
        if tail is None:
            raise UnsupportedTail("tail rule not closed under power weights")
        return SequenceSpec(pref, tail)

    def extended(self, n: int) -> "SequenceSpec":
        """Same sequence with the prefix materialized out to index n."""
        if n <= self.m:
            return self
        return SequenceSpec(tuple(self.materialize(n)), self.tail,
                            self.tail_majorant)


@dataclass(frozen=True)
class Truncation:
    """Working horizon + tail policy."""

    n: int = 2 ** 14
    policy: str = "certified"  # zero-exact | certified | heuristic

    _POLICIES = ("zero-exact", "certified", "heuristic")

    def __post_init__(self):
        if self.n < 1:
            raise DescriptorError("truncation horizon must be >= 1")
        if self.policy not in self._POLICIES:
            raise DescriptorError(f"unknown policy {self.policy!r}")

    def check(self, x: SequenceSpec) -> None:
        if self.policy == "zero-exact" and not x.finite_support:
            raise DescriptorError("zero-exact policy requires a zero tail")

    @property
    def certified(self) -> bool:
        return self.policy != "heuristic"


DEFAULT_TRUNCATION = Truncation()

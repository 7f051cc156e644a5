"""Elementary sequence transforms: rearrangement, majorant, Hardy/Copson,
dilation, products, tail restriction.

All operations are pure.  Where a tail rule survives the transform exactly
the output carries it; where only an envelope survives, the output's tail
is a certified majorant-style rule and downstream norms bracket honestly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergentTail, NonMonotoneTail, UnsupportedTail
from .seqspec import (CompositeTail, PowerTail, SequenceSpec, TailRule,
                      Truncation, ZERO)

_REARRANGE_CAP = 1 << 22  # crossover search guard


def _crossover_index(tail: TailRule, m: int, floor: float) -> int:
    """Smallest K >= m with |tail value| <= floor from K+1 on (tail decreasing)."""
    k = m + 1
    while tail.sup_from(k) > floor:
        k = 2 * k
        if k > _REARRANGE_CAP:
            raise NonMonotoneTail("tail does not cross the prefix floor")
    lo, hi = m + 1, k  # sup_from(hi) <= floor
    while lo < hi:
        mid = (lo + hi) // 2
        if tail.sup_from(mid) <= floor:
            hi = mid
        else:
            lo = mid + 1
    return lo - 1


def decreasing_rearrangement(x: SequenceSpec, trunc: Truncation) -> SequenceSpec:
    """|x| sorted non-increasingly, tail rule re-indexed exactly."""
    trunc.check(x)
    ax = x.abs()
    if ax.finite_support:
        vals = np.sort(ax.materialize(max(ax.m, 1)))[::-1]
        return SequenceSpec(tuple(vals))
    tail = ax.tail
    if not tail.nonincreasing_abs():
        raise NonMonotoneTail("rearrangement needs an eventually monotone tail")
    pref = np.asarray(ax.prefix)
    positive = pref[pref > 0.0]
    floor = float(positive.min()) if positive.size else math.inf
    zeros = ax.m - positive.size
    if not positive.size:
        # prefix contributes nothing: x* is the tail pulled forward by m slots
        return SequenceSpec((), _shift_rule(tail, -ax.m))
    if tail.sup_from(ax.m + 1) <= floor:
        # tail already below every nonzero prefix value: merge is trivial
        head = np.sort(pref)[::-1]
        if zeros:
            # zeros sink past the whole (positive) tail
            k = ax.m  # positions m'+1..m in x* are tail values shifted by -zeros
            return SequenceSpec(tuple(head[:positive.size]),
                                _shift_rule(tail, -zeros))
        return SequenceSpec(tuple(head), tail)
    limit = _tail_limit(tail)
    if limit > floor:
        raise NonMonotoneTail("tail limit exceeds a prefix value; "
                              "rearranged tail is not representable")
    k = _crossover_index(tail, ax.m, floor)
    merged = np.sort(np.concatenate([positive, tail.values(
        np.arange(ax.m + 1, k + 1))]))[::-1]
    return SequenceSpec(tuple(merged), _shift_rule(tail, -zeros))


def _shift_rule(tail: TailRule, delta: int) -> TailRule:
    """Re-index a decreasing tail: output value at n is tail value at n - delta."""
    if delta == 0 or tail.is_zero:
        return tail
    if isinstance(tail, PowerTail):
        return PowerTail(tail.c, tail.alpha, tail.shift + delta)
    raise UnsupportedTail("tail rule cannot be re-indexed")


def _tail_limit(tail: TailRule) -> float:
    try:
        return tail.limsup_abs()
    except Exception:
        return math.inf


def rearrangement_bracket(x: SequenceSpec, trunc: Truncation
                          ) -> tuple[SequenceSpec, SequenceSpec]:
    """(lower, upper) sandwich for x* when the exact merge is unavailable.

    lower: rearrangement of the truncation (pointwise <= x*); upper: prefix
    entries bumped to the tail sup with the original decreasing tail kept,
    using x*_{m+j} <= j-th largest tail value.
    """
    n = trunc.n
    ax = x.abs()
    vals = np.sort(ax.materialize(n))[::-1]
    lower = SequenceSpec(tuple(vals))
    if ax.finite_support and ax.m <= n:
        return lower, lower
    maj = ax.effective_majorant()
    t = maj.value(n + 1)
    upper = SequenceSpec(tuple(np.maximum(vals, t)), _as_power(maj))
    return lower, upper


def _as_power(rule: TailRule) -> TailRule:
    if rule.is_zero or isinstance(rule, (PowerTail, CompositeTail)):
        return rule
    if rule.nonincreasing_abs():
        return rule
    raise UnsupportedTail("majorant rule is not non-increasing")


def decreasing_majorant(x: SequenceSpec, trunc: Truncation) -> SequenceSpec:
    """x~_n = sup_{m >= n} |x_m|; exact, idempotent."""
    trunc.check(x)
    ax = x.abs()
    tail_sup = ax.tail.sup_from(ax.m + 1) if not ax.finite_support else 0.0
    out = np.empty(ax.m)
    run = tail_sup
    for i in range(ax.m - 1, -1, -1):
        run = max(run, ax.prefix[i])
        out[i] = run
    new_tail = ax.tail.majorant_rule() if not ax.finite_support else ZERO
    return SequenceSpec(tuple(out), new_tail)


@dataclass(frozen=True)
class HardyTail(TailRule):
    """Tail of H|x| for a power-tail input: exact values, enveloped bounds."""

    prefix_sum: float
    m: int
    inner: PowerTail

    def _running(self, n: int) -> float:
        ks = np.arange(self.m + 1, n + 1, dtype=float)
        return self.prefix_sum + float(np.sum(np.abs(self.inner.values(ks))))

    def value(self, n):
        return self._running(n) / n

    def values(self, ns):
        ns = np.asarray(ns)
        hi = int(ns.max())
        ks = np.arange(self.m + 1, hi + 1, dtype=float)
        csum = self.prefix_sum + np.cumsum(np.abs(self.inner.values(ks)))
        return csum[ns - (self.m + 1)] / ns

    def _envelope(self) -> CompositeTail:
        c, a = abs(self.inner.c), self.inner.alpha
        terms = [PowerTail(self.prefix_sum, 1.0)]
        if a < 1.0:
            terms.append(PowerTail(c / (1.0 - a), a))
        elif a > 1.0:
            terms.append(PowerTail(c * power_tail_total(a, self.m + 1), 1.0))
        else:
            raise UnsupportedTail("Hardy tail bound at alpha = 1 not implemented")
        return CompositeTail(tuple(terms))

    def sup_from(self, n):
        return self._envelope().sup_from(n)

    def limsup_abs(self):
        return 0.0

    def pow_sum_from(self, p, n):
        env = self._envelope().pow_sum_from(p, n)
        # lower: drop the tail of x entirely, keep the prefix mass
        low = PowerTail(self.prefix_sum, 1.0).pow_sum_from(p, n).lower
        return type(env)(low, env.upper) if low <= env.upper else env

    def majorant_rule(self):
        return self._envelope()

    def nonincreasing_abs(self):
        return False


def power_tail_total(beta: float, m: int) -> float:
    """Upper bound for sum_{k>=m} k^(-beta), beta > 1."""
    if beta <= 1.0:
        raise DivergentTail("power sum diverges")
    return m ** (-beta) + m ** (1.0 - beta) / (beta - 1.0)


def hardy(x: SequenceSpec, trunc: Truncation) -> SequenceSpec:
    """(Hx)_n = (1/n) sum_{k<=n} x_k, evaluated on the raw (signed) values."""
    trunc.check(x)
    n = max(x.m, 1) if x.finite_support else trunc.n
    vals = x.materialize(n)
    out = np.cumsum(vals) / np.arange(1, n + 1)
    total = float(np.sum(vals))
    if x.finite_support:
        return SequenceSpec(tuple(out), PowerTail(total, 1.0))
    if isinstance(x.tail, PowerTail) and x.tail.shift == 0:
        return SequenceSpec(tuple(out[:x.m or 1]),
                            HardyTail(float(np.sum(vals[:x.m or 1])),
                                      x.m or 1, x.tail))
    if trunc.policy == "heuristic":
        return SequenceSpec(tuple(out))
    raise UnsupportedTail("Hardy transform keeps certificates only for "
                          "zero and power tails")


def copson(x: SequenceSpec, trunc: Truncation) -> SequenceSpec:
    """(Cx)_n = sum_{k>=n} x_k / k (discrete transpose of the Hardy operator)."""
    trunc.check(x)
    m = max(x.m, 1)
    vals = x.materialize(m)
    if x.finite_support:
        out = np.cumsum((vals / np.arange(1, m + 1))[::-1])[::-1]
        return SequenceSpec(tuple(out))
    if isinstance(x.tail, PowerTail) and x.tail.shift == 0:
        beta = x.tail.alpha + 1.0
        if beta <= 1.0:
            raise DivergentTail("sum x_k / k diverges under the tail rule")
        ks = np.arange(m + 1, trunc.n + 1, dtype=float)
        tail_head = float(np.sum(x.tail.values(ks) / ks))
        rest = PowerTail(x.tail.c, beta).pow_sum_from(1.0, trunc.n + 1)
        t = tail_head + math.copysign(rest.mid, x.tail.c)
        out = np.cumsum((vals / np.arange(1, m + 1))[::-1])[::-1] + t
        maj = PowerTail(abs(x.tail.c) / x.tail.alpha, x.tail.alpha, 1)
        return SequenceSpec(tuple(out), _CopsonTail(x.tail, maj))
    if trunc.policy == "heuristic":
        vals = x.materialize(trunc.n)
        out = np.cumsum((vals / np.arange(1, trunc.n + 1))[::-1])[::-1]
        return SequenceSpec(tuple(out))
    raise UnsupportedTail("Copson transform keeps certificates only for "
                          "zero and power tails")


@dataclass(frozen=True)
class _CopsonTail(TailRule):
    inner: PowerTail
    envelope: PowerTail

    def value(self, n):
        beta = self.inner.alpha + 1.0
        b = PowerTail(self.inner.c, beta).pow_sum_from(1.0, n)
        return math.copysign(b.mid, self.inner.c)

    def sup_from(self, n):
        return self.envelope.sup_from(n)

    def limsup_abs(self):
        return 0.0

    def pow_sum_from(self, p, n):
        env = self.envelope.pow_sum_from(p, n)
        return type(env)(0.0, env.upper)

    def majorant_rule(self):
        return self.envelope

    def nonincreasing_abs(self):
        return False


def maximal_function(x: SequenceSpec, trunc: Truncation) -> SequenceSpec:
    """x** = H(x*): non-increasing, dominates x* pointwise."""
    return hardy(decreasing_rearrangement(x, trunc), trunc)


@dataclass(frozen=True)
class Dilate2Tail(TailRule):
    inner: TailRule
    m: int  # prefix length of the dilated spec (= 2 * inner prefix length)

    def value(self, n):
        return self.inner.value((n + 1) // 2)

    def sup_from(self, n):
        return self.inner.sup_from((n + 1) // 2)

    def limsup_abs(self):
        return self.inner.limsup_abs()

    def pow_sum_from(self, p, n):
        inner = self.inner.pow_sum_from(p, (n + 1) // 2)
        # each inner index shows up once or twice past the cut
        return type(inner)(inner.lower, 2.0 * inner.upper, inner.certified)

    def majorant_rule(self):
        return Dilate2Tail(self.inner.majorant_rule(), self.m)

    def nonincreasing_abs(self):
        return self.inner.nonincreasing_abs()


def dilate2(x: SequenceSpec, trunc: Truncation) -> SequenceSpec:
    """(D2 x)_n = x_{ceil(n/2)}."""
    trunc.check(x)
    pref = tuple(x.prefix[(i + 1) // 2 - 1] for i in range(1, 2 * x.m + 1))
    tail = ZERO if x.finite_support else Dilate2Tail(x.tail, 2 * x.m)
    return SequenceSpec(pref, tail)


def pointwise_product(x: SequenceSpec, y: SequenceSpec) -> SequenceSpec:
    m = max(x.m, y.m)
    pref = tuple(x.value(i) * y.value(i) for i in range(1, m + 1))
    if x.finite_support or y.finite_support:
        return SequenceSpec(pref)
    tx, ty = x.tail, y.tail
    if (isinstance(tx, PowerTail) and isinstance(ty, PowerTail)
            and tx.shift == 0 and ty.shift == 0):
        return SequenceSpec(pref, PowerTail(tx.c * ty.c, tx.alpha + ty.alpha))
    raise UnsupportedTail("pointwise product of these tail rules is not closed")


def tail_restrict(x: SequenceSpec, n: int) -> SequenceSpec:
    """Zero out indices < n (the chi_{n, n+1, ...} cut)."""
    if n <= 1:
        return x
    base = x.extended(n - 1) if n - 1 > x.m else x
    pref = (0.0,) * (n - 1) + tuple(base.prefix[n - 1:])
    return SequenceSpec(pref, base.tail, base.tail_majorant)

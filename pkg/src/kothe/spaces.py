"""Space descriptors and norm evaluation.

Constructors: Lp, C0, LInfty, Weighted, OrliczSp, MusielakOrlicz, NakanoSp,
LorentzSp, MarcinkiewiczSp, Symmetrized, Cesaro, Tandori.  ``norm`` returns
a certified :class:`Bracket`; truncation error enters through the tail
rules' certificates and through the rearrangement sandwich
``x*_trunc <= x* <= bumped prefix + re-indexed tail``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .bracket import Bracket
from .errors import (DescriptorError, NotInSpace, UnknownDual,
                     UnsupportedTail)
from .orlicz import (Delta2Report, ExponentRule, ModularFamily,
                     OrliczFunction, delta2_evidence, luxemburg_norm)
from .seqops import decreasing_majorant, hardy, rearrangement_bracket, tail_restrict
from .seqspec import (PowerTail, SequenceSpec, Truncation, power_sum_tail)

INF = math.inf


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PowerWeight:
    """w_n = c * n^expo (c > 0)."""

    c: float = 1.0
    expo: float = 0.0

    def __post_init__(self):
        if self.c <= 0.0:
            raise DescriptorError("weights must be strictly positive")

    def value(self, n: int) -> float:
        return self.c * float(n) ** self.expo

    def values(self, n: int) -> np.ndarray:
        return self.c * np.arange(1, n + 1, dtype=float) ** self.expo


@dataclass(frozen=True)
class ConcaveWeight:
    """Positive increasing concave phi on [1, inf); power rule or custom.

    Construction samples 256 log-spaced points and rejects rules that are
    not increasing or whose increments increase.
    """

    alpha: float | None = None      # phi(t) = t^alpha, 0 <= alpha <= 1
    fn: object = None               # custom callable
    label: str = ""

    def __post_init__(self):
        if (self.alpha is None) == (self.fn is None):
            raise DescriptorError("give exactly one of alpha / fn")
        if self.alpha is not None and not 0.0 <= self.alpha <= 1.0:
            raise DescriptorError("power weight exponent must be in [0, 1]")
        if self.fn is not None:
            ts = np.geomspace(1.0, 1e6, 256)
            vals = np.array([self.fn(t) for t in ts])
            if np.any(vals <= 0.0) or np.any(np.diff(vals) < -1e-12):
                raise DescriptorError("weight must be positive and increasing")
            dd = np.diff(self.values(257))
            if np.any(np.diff(dd) > 1e-9 * np.abs(dd[:-1]).max()):
                raise DescriptorError("weight increments must be non-increasing")

    @staticmethod
    def power(alpha: float) -> "ConcaveWeight":
        return ConcaveWeight(alpha=float(alpha), label=f"t^{alpha:g}")

    @property
    def is_power(self) -> bool:
        return self.alpha is not None

    def phi(self, t: float) -> float:
        if self.is_power:
            return float(t) ** self.alpha
        return float(self.fn(t))

    def values(self, n: int) -> np.ndarray:
        ns = np.arange(1, n + 1, dtype=float)
        if self.is_power:
            return ns ** self.alpha
        return np.array([self.fn(t) for t in ns])

    def deltas(self, n: int) -> np.ndarray:
        """Delta phi(k) = phi(k+1) - phi(k), k = 1..n."""
        ns = np.arange(1, n + 2, dtype=float)
        vals = ns ** self.alpha if self.is_power else np.array(
            [self.fn(t) for t in ns])
        return np.diff(vals)

    @property
    def unbounded(self) -> bool | None:
        if self.is_power:
            return self.alpha > 0.0
        return None


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

class SpaceDescriptor:
    has_fatou = True

    def short(self) -> str:
        return repr(self)


@dataclass(frozen=True)
class Lp(SpaceDescriptor):
    p: float

    def __post_init__(self):
        if not (self.p >= 1.0):
            raise DescriptorError("Lp needs p in [1, inf]")

    def short(self):
        return "l_inf" if math.isinf(self.p) else f"l_{self.p:g}"


@dataclass(frozen=True)
class C0(SpaceDescriptor):
    def short(self):
        return "c_0"


@dataclass(frozen=True)
class LInfty(SpaceDescriptor):
    def short(self):
        return "l_inf"


@dataclass(frozen=True)
class Weighted(SpaceDescriptor):
    base: SpaceDescriptor
    weight: PowerWeight

    def short(self):
        return f"{self.base.short()}(n^{self.weight.expo:g})"


@dataclass(frozen=True)
class OrliczSp(SpaceDescriptor):
    m: OrliczFunction

    def short(self):
        return f"l_{{{self.m.label or self.m.kind}}}"


@dataclass(frozen=True)
class MusielakOrlicz(SpaceDescriptor):
    family: ModularFamily

    def short(self):
        return "l_{M_n}"


@dataclass(frozen=True)
class NakanoSp(SpaceDescriptor):
    ps: ExponentRule

    def short(self):
        return f"l_{{p_n->{self.ps.tail:g}}}"


@dataclass(frozen=True)
class LorentzSp(SpaceDescriptor):
    phi: ConcaveWeight

    def short(self):
        return f"lambda_{{{self.phi.label or 'phi'}}}"


@dataclass(frozen=True)
class MarcinkiewiczSp(SpaceDescriptor):
    phi: ConcaveWeight

    def short(self):
        return f"m_{{{self.phi.label or 'phi'}}}"


@dataclass(frozen=True)
class Symmetrized(SpaceDescriptor):
    base: SpaceDescriptor
    weight: PowerWeight | None = None

    def short(self):
        w = f", n^{self.weight.expo:g}" if self.weight else ""
        return f"sym({self.base.short()}{w})"


@dataclass(frozen=True)
class Cesaro(SpaceDescriptor):
    base: SpaceDescriptor

    def short(self):
        return f"ces({self.base.short()})"


@dataclass(frozen=True)
class Tandori(SpaceDescriptor):
    base: SpaceDescriptor

    def short(self):
        return f"tand({self.base.short()})"


# ---------------------------------------------------------------------------
# norms
# ---------------------------------------------------------------------------

def norm(space: SpaceDescriptor, x: SequenceSpec,
         trunc: Truncation | None = None) -> Bracket:
    """Certified bracket around ||x|| in the space."""
    trunc = trunc or Truncation()
    trunc.check(x)
    return _norm(space, x, trunc)


def _norm(space, x, trunc) -> Bracket:
    if isinstance(space, Lp):
        return _lp_norm(space.p, x, trunc)
    if isinstance(space, (C0, LInfty)):
        return _lp_norm(INF, x, trunc)
    if isinstance(space, Weighted):
        return _norm(space.base, _weight_spec(x, space.weight, trunc), trunc)
    if isinstance(space, OrliczSp):
        return luxemburg_norm(ModularFamily(orlicz=space.m), x, trunc)
    if isinstance(space, MusielakOrlicz):
        return luxemburg_norm(space.family, x, trunc)
    if isinstance(space, NakanoSp):
        return luxemburg_norm(ModularFamily(nakano=space.ps), x, trunc)
    if isinstance(space, LorentzSp):
        return _lorentz_norm(space.phi, x, trunc)
    if isinstance(space, MarcinkiewiczSp):
        return _marcinkiewicz_norm(space.phi, x, trunc)
    if isinstance(space, Symmetrized):
        return _symmetrized_norm(space, x, trunc)
    if isinstance(space, Cesaro):
        return _cesaro_norm(space.base, x, trunc)
    if isinstance(space, Tandori):
        return _norm(space.base, decreasing_majorant(x, trunc), trunc)
    raise DescriptorError(f"no norm rule for {type(space).__name__}")


def _weight_spec(x: SequenceSpec, w: PowerWeight, trunc: Truncation
                 ) -> SequenceSpec:
    try:
        return x.times_power_weight(w.c, w.expo)
    except UnsupportedTail:
        if trunc.certified:
            raise
        vals = x.materialize(trunc.n) * w.values(trunc.n)
        return SequenceSpec.from_array(vals)


def _lp_norm(p: float, x: SequenceSpec, trunc: Truncation) -> Bracket:
    n = trunc.n if not x.finite_support else max(x.m, 1)
    vals = np.abs(x.materialize(n))
    if math.isinf(p):
        head = float(vals.max()) if vals.size else 0.0
        if x.finite_support:
            return Bracket.point(head)
        if trunc.policy == "heuristic":
            return Bracket.point(head, certified=False)
        return Bracket.point(max(head, x.tail.sup_from(n + 1)))
    head = float(np.sum(vals ** p))
    if x.finite_support:
        return Bracket.point(head ** (1.0 / p))
    if trunc.policy == "heuristic":
        return Bracket.point(head ** (1.0 / p), certified=False)
    tail = x.tail.pow_sum_from(p, n + 1)
    if math.isinf(tail.lower):
        raise NotInSpace("certified tail divergence in l_p")
    return Bracket((head + tail.lower) ** (1.0 / p),
                   (head + tail.upper) ** (1.0 / p))


def _lorentz_norm(phi: ConcaveWeight, x: SequenceSpec, trunc) -> Bracket:
    lo_spec, up_spec = rearrangement_bracket(x, trunc)
    n = trunc.n
    dphi = phi.deltas(max(lo_spec.m, 1))
    lo = K.lorentz_sum(np.ascontiguousarray(lo_spec.materialize(lo_spec.m)),
                       np.ascontiguousarray(dphi[:lo_spec.m]))
    if up_spec is lo_spec:
        return Bracket.point(lo)
    if trunc.policy == "heuristic":
        return Bracket.point(lo, certified=False)
    dphi_n = phi.deltas(n)
    head_up = K.lorentz_sum(np.ascontiguousarray(up_spec.materialize(n)),
                            np.ascontiguousarray(dphi_n))
    tail_up = _lorentz_tail_upper(phi, up_spec.tail, n + 1)
    if math.isinf(tail_up) and _lorentz_tail_divergent(phi, up_spec.tail, n + 1):
        raise NotInSpace("certified tail divergence in the Lorentz sum")
    return Bracket(lo, head_up + tail_up)


def _lorentz_tail_upper(phi: ConcaveWeight, tail, n0: int) -> float:
    if tail.is_zero:
        return 0.0
    if phi.is_power and isinstance(tail, PowerTail):
        a = phi.alpha
        if a == 0.0:
            return 0.0  # constant phi: increments vanish
        # Delta phi(n) <= a n^(a-1) <= a (n - shift)^(a-1)
        comp = PowerTail(abs(tail.c), tail.alpha - a + 1.0, tail.shift)
        return a * comp.pow_sum_from(1.0, n0).upper
    # non-power phi: increments are non-increasing, bound them by the last one
    dlast = float(phi.deltas(n0)[-1])
    return dlast * tail.pow_sum_from(1.0, n0).upper


def _lorentz_tail_divergent(phi: ConcaveWeight, tail, n0: int) -> bool:
    if not (phi.is_power and isinstance(tail, PowerTail)):
        return False
    a = phi.alpha
    if a == 0.0:
        return False
    # Delta phi(n) >= a (n+1)^(a-1): divergence is certified when the
    # comparison series with exponent alpha - a + 1 has exponent <= 1
    return tail.alpha - a + 1.0 <= 1.0 and tail.c != 0.0


def _marcinkiewicz_norm(phi: ConcaveWeight, x: SequenceSpec, trunc) -> Bracket:
    lo_spec, up_spec = rearrangement_bracket(x, trunc)
    m = max(lo_spec.m, 1)
    lo = K.marcinkiewicz_sup(np.ascontiguousarray(lo_spec.materialize(m)),
                             np.ascontiguousarray(phi.values(m)))
    if up_spec is lo_spec:
        return Bracket.point(lo)
    if trunc.policy == "heuristic":
        return Bracket.point(lo, certified=False)
    n = trunc.n
    head_vals = up_spec.materialize(n)
    head_up = K.marcinkiewicz_sup(np.ascontiguousarray(head_vals),
                                  np.ascontiguousarray(phi.values(n)))
    beyond = _marcinkiewicz_beyond(phi, float(np.sum(head_vals)),
                                   up_spec.tail, n)
    return Bracket(lo, max(head_up, beyond))


def _marcinkiewicz_beyond(phi: ConcaveWeight, head_sum: float, tail,
                          n0: int) -> float:
    """Upper bound for sup_{n > n0} phi(n)/n (head_sum + tail partial sums)."""
    if tail.is_zero:
        if phi.is_power:
            a = phi.alpha
            return head_sum * (n0 + 1) ** (a - 1.0) if a < 1.0 else head_sum
        return head_sum  # phi(n)/n <= phi(1) by concavity normalization
    limit = None
    try:
        limit = tail.limsup_abs()
    except Exception:
        pass
    if limit and phi.is_power and phi.alpha > 0.0:
        raise NotInSpace("certified divergence: non-vanishing tail under an "
                         "unbounded weight")
    if not (phi.is_power and isinstance(tail, PowerTail)):
        raise UnsupportedTail("no certified Marcinkiewicz tail bound here")
    a, c, al, s = phi.alpha, abs(tail.c), tail.alpha, tail.shift
    m = n0 + 1 - s
    if m < 1:
        raise UnsupportedTail("tail shift reaches past the horizon")
    if a == 1.0:  # the l1 regime
        total = tail.pow_sum_from(1.0, n0 + 1)
        if math.isinf(total.upper):
            raise NotInSpace("certified l1 divergence in the Marcinkiewicz sup")
        return head_sum + total.upper
    part1 = head_sum * (n0 + 1) ** (a - 1.0)
    if al > 1.0:
        return part1 + c * power_sum_tail(al, m).upper * (n0 + 1) ** (a - 1.0)
    if al == 1.0:
        # partial sums grow like c log; sup of n^(a-1) (head + c log n)
        def h(t):
            return t ** (a - 1.0) * (head_sum + c * (1.0 + math.log(t)))
        t_star = math.exp(1.0 / (1.0 - a))
        return max(h(n0 + 1), h(max(t_star, n0 + 1)))
    # al < 1: partial sums <= c [(n-s)^{1-al} - (n0-s)^{1-al}]/(1-al)
    if a > al:
        raise NotInSpace("certified divergence: weight outruns the tail decay")
    if s <= 0:
        # split the bound as S0 n^{a-1} + (c/(1-al)) n^{a-1}(n-s)^{1-al};
        # both pieces are non-increasing past n0 when a <= al and s <= 0,
        # so the sup sits at n0 + 1 and the bound vanishes with the horizon
        s0 = head_sum - c / (1.0 - al) * (n0 - s) ** (1.0 - al)
        lead = (n0 + 1.0) ** (a - 1.0)
        return max(s0, 0.0) * lead + \
            c / (1.0 - al) * lead * (n0 + 1.0 - s) ** (1.0 - al)
    # positive re-indexing shift: fall back to the sum-of-sups bound
    stretch = (1.0 + max(-s, 0) / (n0 + 1.0)) ** (1.0 - al)
    return part1 + c / (1.0 - al) * (n0 + 1) ** (a - al) * stretch


def _symmetrized_norm(space: Symmetrized, x: SequenceSpec, trunc) -> Bracket:
    lo_spec, up_spec = rearrangement_bracket(x, trunc)
    w = space.weight or PowerWeight()
    lo = _norm(space.base, _weight_spec(lo_spec, w, trunc), trunc)
    if up_spec is lo_spec:
        return lo
    up = _norm(space.base, _weight_spec(up_spec, w, trunc), trunc)
    return Bracket(lo.lower, up.upper, lo.certified and up.certified)


def _cesaro_norm(base: SpaceDescriptor, x: SequenceSpec, trunc) -> Bracket:
    ax = x.abs()
    if ax.finite_support:
        return _norm(base, hardy(ax, trunc), trunc)
    truncated = SequenceSpec(tuple(np.abs(ax.materialize(trunc.n))))
    lo = _norm(base, hardy(truncated, trunc), trunc)
    if trunc.policy == "heuristic":
        return Bracket.point(lo.lower, certified=False)
    up = _norm(base, hardy(ax.extended(trunc.n), trunc), trunc)
    return Bracket(lo.lower, up.upper, lo.certified and up.certified)


# ---------------------------------------------------------------------------
# fast point norms on plain arrays (finitely supported data, hot paths)
# ---------------------------------------------------------------------------

def point_norm(space: SpaceDescriptor, vec: np.ndarray) -> float:
    """Norm of a finitely supported vector (vec[i] = x_{i+1}), no brackets.

    This is the evaluator the search oracles hammer; it must stay cheap.
    """
    v = np.abs(np.asarray(vec, dtype=float))
    if isinstance(space, Lp):
        if math.isinf(space.p):
            return float(v.max()) if v.size else 0.0
        return float(np.sum(v ** space.p) ** (1.0 / space.p))
    if isinstance(space, (C0, LInfty)):
        return float(v.max()) if v.size else 0.0
    if isinstance(space, Weighted):
        return point_norm(space.base, v * space.weight.values(v.size))
    if isinstance(space, LorentzSp):
        s = np.sort(v)[::-1]
        return K.lorentz_sum(np.ascontiguousarray(s),
                             np.ascontiguousarray(space.phi.deltas(s.size)))
    if isinstance(space, MarcinkiewiczSp):
        s = np.sort(v)[::-1]
        return K.marcinkiewicz_sup(np.ascontiguousarray(s),
                                   np.ascontiguousarray(space.phi.values(s.size)))
    if isinstance(space, Symmetrized):
        s = np.sort(v)[::-1]
        if space.weight is not None:
            s = s * space.weight.values(s.size)
        return point_norm(space.base, s)
    if isinstance(space, Cesaro):
        spec = SequenceSpec(tuple(v))
        return _cesaro_norm(space.base, spec,
                            Truncation(max(v.size * 4, 64), "certified")).mid
    if isinstance(space, Tandori):
        return point_norm(space.base, np.maximum.accumulate(v[::-1])[::-1])
    if isinstance(space, (OrliczSp, MusielakOrlicz, NakanoSp)):
        spec = SequenceSpec(tuple(v))
        b = _norm(space, spec, Truncation(max(v.size, 1), "zero-exact"))
        return b.mid
    raise DescriptorError(f"no point norm for {type(space).__name__}")


# ---------------------------------------------------------------------------
# Köthe duals
# ---------------------------------------------------------------------------

def kothe_dual(space: SpaceDescriptor) -> SpaceDescriptor:
    """Rule-table Köthe dual; raises UnknownDual off the table."""
    if isinstance(space, Lp):
        if space.p == 1.0:
            return LInfty()
        if math.isinf(space.p):
            return Lp(1.0)
        return Lp(space.p / (space.p - 1.0))
    if isinstance(space, (LInfty, C0)):
        return Lp(1.0)
    if isinstance(space, Weighted):
        inv = PowerWeight(1.0 / space.weight.c, -space.weight.expo)
        return Weighted(kothe_dual(space.base), inv)
    if isinstance(space, LorentzSp):
        if not space.phi.is_power:
            raise UnknownDual("Lorentz dual implemented for power weights")
        return MarcinkiewiczSp(ConcaveWeight.power(1.0 - space.phi.alpha))
    if isinstance(space, Cesaro):
        return Tandori(kothe_dual(space.base))
    raise UnknownDual(f"no dual rule for {type(space).__name__}")


def fundamental_function(space: SpaceDescriptor, n: int) -> float:
    """||chi_{1..n}|| in the space."""
    ind = SequenceSpec((1.0,) * n)
    return norm(space, ind, Truncation(max(n, 4), "zero-exact")).mid


# ---------------------------------------------------------------------------
# order continuity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OcVerdict:
    status: str            # yes | no | unknown
    reason: str
    evidence: Delta2Report | None = None


def is_order_continuous(space: SpaceDescriptor) -> OcVerdict:
    if isinstance(space, Lp):
        if math.isinf(space.p):
            return OcVerdict("no", "sup-norm space: constants have no "
                             "vanishing tails")
        return OcVerdict("yes", "finite-exponent l_p is separable")
    if isinstance(space, C0):
        return OcVerdict("yes", "c_0 tails vanish by definition")
    if isinstance(space, LInfty):
        return OcVerdict("no", "sup-norm space: constants have no "
                         "vanishing tails")
    if isinstance(space, Weighted):
        inner = is_order_continuous(space.base)
        return OcVerdict(inner.status, f"weighting is an isometry; {inner.reason}",
                         inner.evidence)
    if isinstance(space, NakanoSp):
        if space.ps.all_finite:
            return OcVerdict("yes", "all Nakano exponents finite")
        return OcVerdict("no", "infinite Nakano exponents give a sup-norm part")
    if isinstance(space, (OrliczSp, MusielakOrlicz)):
        m = space.m if isinstance(space, OrliczSp) else space.family.orlicz
        if m is None:
            fam = space.family
            return is_order_continuous(NakanoSp(fam.nakano))
        if m.kind == "power":
            return OcVerdict("yes", "power Orlicz function satisfies Delta_2")
        rep = delta2_evidence(m)
        if rep.divergent:
            return OcVerdict("no", "Delta_2 ratio diverges on small arguments",
                             rep)
        return OcVerdict("yes", "empirical Delta_2 bound "
                         f"{rep.max_ratio:.3g}", rep)
    if isinstance(space, LorentzSp):
        ub = space.phi.unbounded
        if ub is None:
            return OcVerdict("unknown", "cannot certify phi(inf) for this rule")
        if ub:
            return OcVerdict("yes", "phi unbounded: Lorentz space is separable")
        return OcVerdict("no", "phi bounded: Lorentz space degenerates to l_inf")
    if isinstance(space, MarcinkiewiczSp):
        if space.phi.is_power:
            if space.phi.alpha == 1.0:
                return OcVerdict("yes", "phi(t) = t: the space is l_1")
            if space.phi.alpha == 0.0:
                return OcVerdict("no", "phi bounded: the space is l_inf")
        return OcVerdict("no", "proper Marcinkiewicz spaces are never separable")
    if isinstance(space, Symmetrized):
        return _symmetrized_oc(space)
    if isinstance(space, (Cesaro, Tandori)):
        inner = is_order_continuous(space.base)
        kind = "Cesaro" if isinstance(space, Cesaro) else "Tandori"
        return OcVerdict(inner.status,
                         f"{kind} construction inherits the base status; "
                         f"{inner.reason}", inner.evidence)
    return OcVerdict("unknown", f"no rule for {type(space).__name__}")


def _symmetrized_oc(space: Symmetrized) -> OcVerdict:
    w = space.weight
    if w is None:
        inner = is_order_continuous(space.base)
        return OcVerdict(inner.status, "trivial weight; " + inner.reason,
                         inner.evidence)
    if w.expo >= 0.0:
        return OcVerdict("unknown", "symmetrization rule needs a "
                         "non-increasing weight")
    # weight outside the base space: separable part commutes with the
    # symmetrization, so the verdict is the base verdict
    if isinstance(space.base, Lp) and not math.isinf(space.base.p):
        div = power_sum_tail(-w.expo * space.base.p, 1)
        if math.isinf(div.lower):
            inner = is_order_continuous(space.base)
            return OcVerdict(inner.status, "weight outside the base space; "
                             + inner.reason, inner.evidence)
        return OcVerdict("no", "weight inside the base space: sup-norm "
                         "behaviour on the tail")
    if isinstance(space.base, (LInfty, C0)):
        # weighted sup norm: decreasing weight w -> 0 keeps c_0-style tails
        inner = is_order_continuous(space.base)
        return OcVerdict(inner.status, "weighted sup norm; " + inner.reason,
                         inner.evidence)
    return OcVerdict("unknown", "no symmetrized rule for this base")


# ---------------------------------------------------------------------------
# order-continuity membership of a single element
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OcReport:
    tail_norms: tuple[tuple[int, Bracket], ...]
    limit: Bracket
    verdict: str          # member | non_member | inconclusive
    reason: str


def oc_membership(space: SpaceDescriptor, x: SequenceSpec,
                  n_grid=None, trunc: Truncation | None = None,
                  tol: float = 1e-9) -> OcReport:
    """Tail norms t_n = ||x chi_{n..}|| and a certified membership verdict."""
    trunc = trunc or Truncation()
    if n_grid is None:
        n_grid = [2 ** j for j in range(0, 15, 2)]
    pairs = []
    for n in n_grid:
        pairs.append((n, norm(space, tail_restrict(x, n), trunc)))
    limit = tail_norm_limit(space, x, pairs[-1][1])
    scale = max(pairs[0][1].upper, 1e-30)
    if limit.certified and limit.upper <= tol * scale:
        verdict, reason = "member", "certified tail-norm limit is zero"
    elif limit.certified and limit.lower > tol * scale:
        verdict, reason = "non_member", (
            f"certified tail-norm limit >= {limit.lower:.6g}")
    else:
        verdict, reason = "inconclusive", "no certified two-sided limit"
    return OcReport(tuple(pairs), limit, verdict, reason)


def tail_norm_limit(space: SpaceDescriptor, x: SequenceSpec,
                    last: Bracket | None = None) -> Bracket:
    """Certified bracket for lim_n ||x chi_{n..}||; honest fallback is
    [0, last upper]."""
    fallback = Bracket(0.0, last.upper if last else INF, certified=False)
    try:
        return _tail_limit(space, x)
    except UnsupportedTail:
        return fallback


def _tail_limit(space, x: SequenceSpec) -> Bracket:
    if x.finite_support:
        return Bracket.point(0.0)
    if isinstance(space, Lp) and not math.isinf(space.p):
        s = x.tail.pow_sum_from(space.p, x.m + 1)
        if math.isinf(s.lower):
            raise NotInSpace("tail diverges in l_p")
        return Bracket.point(0.0)
    if isinstance(space, (LInfty, C0, Lp)):
        return Bracket.point(x.tail.limsup_abs())
    if isinstance(space, Weighted):
        return _tail_limit(space.base,
                           x.times_power_weight(space.weight.c,
                                                space.weight.expo))
    if isinstance(space, Tandori):
        maj = SequenceSpec((), x.effective_majorant())
        return _tail_limit(space.base, maj)
    if isinstance(space, MarcinkiewiczSp) and space.phi.is_power \
            and isinstance(x.tail, PowerTail):
        return _marcinkiewicz_limit(space.phi.alpha, x.tail)
    if isinstance(space, NakanoSp) and space.ps.all_finite:
        s = x.tail.pow_sum_from(space.ps.tail, x.m + 1)
        if math.isinf(s.lower):
            raise NotInSpace("tail diverges in the Nakano modular")
        return Bracket.point(0.0)
    raise UnsupportedTail("no analytic tail-norm limit for this pair")


def _marcinkiewicz_limit(a: float, tail: PowerTail) -> Bracket:
    """lim_n sup_{m>=n} phi(m)/m sum_{k<=m} of the rearranged power tail."""
    c, al = abs(tail.c), tail.alpha
    if c == 0.0:
        return Bracket.point(0.0)
    if al < 1.0:
        if a < al:
            return Bracket.point(0.0)
        if a == al:
            return Bracket.point(c / (1.0 - al))
        raise NotInSpace("certified divergence: weight outruns the tail")
    # al >= 1: partial sums at worst logarithmic
    if a < 1.0:
        return Bracket.point(0.0)
    # a == 1: the l1 regime; limit is the vanishing tail mass iff summable
    s = tail.pow_sum_from(1.0, tail.shift + 1)
    if math.isinf(s.lower):
        raise NotInSpace("tail not summable in the l1 regime")
    return Bracket.point(0.0)


# ---------------------------------------------------------------------------
# structural embeddings (used by the multiplier rule table)
# ---------------------------------------------------------------------------

def embeds(x: SpaceDescriptor, y: SpaceDescriptor) -> bool:
    """True when a norm-one inclusion x -> y is on the rule table."""
    if x == y:
        return True
    if isinstance(x, Lp):
        if isinstance(y, Lp):
            return x.p <= y.p
        if isinstance(y, (C0, LInfty)):
            return True
        if isinstance(y, MarcinkiewiczSp) and y.phi.is_power:
            return not math.isinf(x.p) and y.phi.alpha == 1.0 / x.p
    if isinstance(x, C0) and isinstance(y, LInfty):
        return True
    if isinstance(x, LorentzSp) and isinstance(y, MarcinkiewiczSp):
        if x.phi.is_power and y.phi.is_power:
            return x.phi.alpha == y.phi.alpha
    return False

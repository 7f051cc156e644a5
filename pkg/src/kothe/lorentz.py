"""Lorentz/Marcinkiewicz analysis: dilation indices, multiplier-space
descriptors via the symmetrization identity, and the five compactness cases
for multipliers touching Lorentz or Marcinkiewicz sequence spaces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bracket import Bracket
from .errors import HypothesisUnmet, NotInSpace, UnboundedTail, UnsupportedTail
from .seqops import decreasing_rearrangement
from .seqspec import PowerTail, SequenceSpec, Truncation
from .spaces import (ConcaveWeight, LInfty, PowerWeight, SpaceDescriptor,
                     Symmetrized, kothe_dual, norm)

INF = math.inf


# ---------------------------------------------------------------------------
# dilation indices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DilationIndices:
    p_lower: Bracket
    q_upper: Bracket
    s_grid: tuple[float, ...]


def dilation_indices(phi: ConcaveWeight, s_grid=None, t_grid=None
                     ) -> DilationIndices:
    """Lower/upper dilation indices of phi via the dilation function
    ``sup_{t >= max(1, 1/s)} phi(st) / phi(t)``.

    Power weights get the analytic value 1/alpha with a tight bracket;
    other rules get grid estimates whose width reflects the drift of the
    log-ratio over the extreme decades (not a proof, and flagged so).
    """
    if phi.is_power:
        if phi.alpha == 0.0:
            return DilationIndices(Bracket(INF, INF), Bracket(INF, INF), ())
        v = 1.0 / phi.alpha
        b = Bracket(v * (1 - 1e-12), v * (1 + 1e-12))
        return DilationIndices(b, b, ())
    if s_grid is None:
        s_grid = np.geomspace(1e-8, 1e8, 33)
    if t_grid is None:
        t_grid = np.geomspace(1.0, 1e10, 4096)
    s_grid = np.asarray(s_grid, dtype=float)

    def bar_phi(s: float) -> float:
        ts = t_grid[t_grid >= max(1.0, 1.0 / s)]
        if ts.size == 0:
            ts = np.array([max(1.0, 1.0 / s)])
        return float(np.max([phi.phi(s * t) / phi.phi(t) for t in ts]))

    def index_at(s: float) -> float:
        b = bar_phi(s)
        if b in (0.0, 1.0):
            return INF
        return math.log(s) / math.log(b)

    small = sorted(s for s in s_grid if s < 1.0)[:4]
    large = sorted((s for s in s_grid if s > 1.0), reverse=True)[:4]
    p_est = [index_at(s) for s in small]
    q_est = [index_at(s) for s in large]
    p_spread = max(p_est) - min(p_est)
    q_spread = max(q_est) - min(q_est)
    p_br = Bracket(max(1.0, min(p_est) - p_spread), max(p_est) + p_spread,
                   certified=False, note="grid estimate")
    q_br = Bracket(max(1.0, min(q_est) - q_spread), max(q_est) + q_spread,
                   certified=False, note="grid estimate")
    return DilationIndices(p_br, q_br, tuple(s_grid))


# ---------------------------------------------------------------------------
# membership probes used by the descriptor rules
# ---------------------------------------------------------------------------

def _power_seq(expo: float) -> SequenceSpec:
    """The sequence n^expo as a pure tail rule."""
    return SequenceSpec((), PowerTail(1.0, -expo))


def sequence_in_space(x: SequenceSpec, space: SpaceDescriptor,
                      trunc: Truncation | None = None):
    """(True/False/None, reason) membership of x in the space."""
    trunc = trunc or Truncation()
    try:
        b = norm(space, x, trunc)
    except NotInSpace as exc:
        return False, str(exc)
    except (UnboundedTail, UnsupportedTail) as exc:
        return None, str(exc)
    if math.isinf(b.upper):
        return (False, "norm upper bound infinite") if math.isinf(b.lower) \
            else (None, "norm bracket reaches infinity")
    if not b.certified:
        return None, "only a heuristic norm value available"
    return True, f"certified norm <= {b.upper:.6g}"


# ---------------------------------------------------------------------------
# multiplier descriptors (symmetrization identity)
# ---------------------------------------------------------------------------

def multiplier_from_marcinkiewicz(phi: ConcaveWeight, y: SpaceDescriptor
                                  ) -> SpaceDescriptor:
    """Descriptor of the multipliers from the Marcinkiewicz space of phi
    into y: the symmetrized weighted space with weight 1/phi; degenerates
    to the sup-norm space when 1/phi already lies in y, and to y itself
    when phi is bounded."""
    if phi.is_power and phi.alpha == 0.0:
        return y  # bounded phi: source is the sup-norm space
    idx = dilation_indices(phi)
    if not idx.p_lower.lower > 1.0:
        raise HypothesisUnmet(
            f"lower dilation index bracket {idx.p_lower} does not clear 1")
    if not phi.is_power:
        raise UnsupportedTail("weight rules beyond powers not supported here")
    a = phi.alpha
    member, _ = sequence_in_space(_power_seq(-a), y)
    if member:
        return LInfty()
    return Symmetrized(y, PowerWeight(1.0, -a))


def multiplier_into_lorentz(x: SpaceDescriptor, phi: ConcaveWeight
                            ) -> SpaceDescriptor:
    """Descriptor of the multipliers from x into the Lorentz space of phi:
    the symmetrized Köthe-dual weighted by phi(t)/t."""
    idx = dilation_indices(phi)
    if not idx.q_upper.upper < INF:
        raise HypothesisUnmet(
            f"upper dilation index bracket {idx.q_upper} is not finite")
    if not phi.is_power:
        raise UnsupportedTail("weight rules beyond powers not supported here")
    a = phi.alpha
    xd = kothe_dual(x)
    member, _ = sequence_in_space(_power_seq(a - 1.0), xd)
    if member:
        return LInfty()
    return Symmetrized(xd, PowerWeight(1.0, a - 1.0))


# ---------------------------------------------------------------------------
# the five compactness cases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Prop42Report:
    case: str
    verdict: str        # compact | non_compact | inconclusive
    branch: str
    reason: str


def _limsup_is_zero(x: SequenceSpec):
    try:
        return x.tail.limsup_abs() == 0.0, "tail limsup certificate"
    except UnboundedTail:
        return False, "tail unbounded"
    except UnsupportedTail:
        return None, "no limsup certificate"


def _l1_verdict(x: SequenceSpec, expo: float, scale: float):
    """l1 membership of x_n * scale * n^expo via tail certificates.

    Constants in the increment sandwich b (n+1)^(b-1) <= Delta psi(n)
    <= b n^(b-1) do not affect summability, so one exponent decides."""
    w = x.times_power_weight(scale, expo)
    b = w.tail.pow_sum_from(1.0, w.m + 1)
    if not math.isinf(b.upper):
        return True, "integral-test tail bound converges"
    if math.isinf(b.lower):
        return False, "integral-test lower bound diverges"
    return None, "tail certificate inconclusive"


def prop42_check(case: str, params: dict, lam: SequenceSpec,
                 trunc: Truncation | None = None) -> Prop42Report:
    """Compactness cases for multipliers between r.i. spaces and
    Lorentz/Marcinkiewicz spaces.

    Cases (power weights only certify):
      i   params: x (reflexive r.i.), phi       -- x -> lorentz(phi)
      ii  params: phi, y (order continuous)     -- marcinkiewicz(phi) -> y
      iii params: z, phi                        -- z -> lorentz(phi)
      iv  params: phi, psi                      -- marcinkiewicz(phi) -> lorentz(psi)
      v   params: psi, phi                      -- lorentz(psi) -> lorentz(phi)

    The branch split in (i)-(iii) is decided by the weight sequence itself
    (whether it lies in the target-side space), the form under which the
    cases reduce to membership tests.
    """
    trunc = trunc or Truncation()
    lam_star = decreasing_rearrangement(lam, trunc)

    if case in ("i", "iii"):
        x = params["x" if case == "i" else "z"]
        phi: ConcaveWeight = params["phi"]
        if not phi.is_power or phi.alpha == 0.0:
            return Prop42Report(case, "inconclusive", "-",
                                "upper index hypothesis not certified")
        a = phi.alpha
        xd = kothe_dual(x)
        member, why = sequence_in_space(_power_seq(a - 1.0), xd)
        if member is None:
            return Prop42Report(case, "inconclusive", "-", why)
        if member:
            ok, why2 = _limsup_is_zero(lam)
            v = "compact" if ok else ("non_compact" if ok is False
                                      else "inconclusive")
            return Prop42Report(case, v, "degenerate (weight in dual)",
                                f"lambda in c_0? {why2}")
        derived = lam_star.times_power_weight(1.0, a - 1.0)
        got, why3 = sequence_in_space(derived, xd)
        v = {True: "compact", False: "non_compact", None: "inconclusive"}[got]
        return Prop42Report(case, v, "main", f"derived sequence in dual: {why3}")

    if case == "ii":
        phi, y = params["phi"], params["y"]
        if not phi.is_power or not 0.0 < phi.alpha < 1.0:
            return Prop42Report(case, "inconclusive", "-",
                                "lower index hypothesis not certified")
        a = phi.alpha
        member, why = sequence_in_space(_power_seq(-a), y)
        if member is None:
            return Prop42Report(case, "inconclusive", "-", why)
        if member:
            ok, why2 = _limsup_is_zero(lam)
            v = "compact" if ok else ("non_compact" if ok is False
                                      else "inconclusive")
            return Prop42Report(case, v, "degenerate (1/phi in target)",
                                f"lambda in c_0? {why2}")
        derived = lam_star.times_power_weight(1.0, -a)
        got, why3 = sequence_in_space(derived, y)
        v = {True: "compact", False: "non_compact", None: "inconclusive"}[got]
        return Prop42Report(case, v, "main", f"derived sequence in target: {why3}")

    if case == "iv":
        phi, psi = params["phi"], params["psi"]
        if not (phi.is_power and psi.is_power):
            return Prop42Report(case, "inconclusive", "-",
                                "limsup hypothesis certified for powers only")
        a, b = phi.alpha, psi.alpha
        if not (b > a and 0.0 < a < 1.0):
            return Prop42Report(case, "inconclusive", "-",
                                "hypotheses limsup psi/phi = inf, index > 1 "
                                "not certified")
        got, why = _l1_verdict(lam_star, b - 1.0 - a, b)
        v = {True: "compact", False: "non_compact", None: "inconclusive"}[got]
        return Prop42Report(case, v, "main",
                            f"increment-weighted sequence in l1: {why}")

    if case == "v":
        psi, phi = params["psi"], params["phi"]
        if not (phi.is_power and psi.is_power):
            return Prop42Report(case, "inconclusive", "-",
                                "limsup hypothesis certified for powers only")
        a, b = phi.alpha, psi.alpha
        if not (a > b and a > 0.0):
            return Prop42Report(case, "inconclusive", "-",
                                "hypotheses limsup phi/psi = inf, finite "
                                "upper index not certified")
        derived = lam_star.times_power_weight(1.0, a - b)
        ok, why = _limsup_is_zero(derived)
        v = "compact" if ok else ("non_compact" if ok is False
                                  else "inconclusive")
        return Prop42Report(case, v, "main",
                            f"ratio-weighted sequence in c_0: {why}")

    raise ValueError(f"unknown case {case!r}")

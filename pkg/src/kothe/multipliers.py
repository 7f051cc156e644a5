"""The pointwise-multiplier space M(X, Y).

Closed-form rule table first, then a search oracle for the operator norm
``sup{||lambda x||_Y : ||x||_X <= 1}``, the pointwise-product norm, a
factorization checker, and the compactness dichotomy predicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bracket import Bracket
from .errors import (ExponentOrder, HypothesisUnmet, InverseDomain,
                     UnknownDual, UnsupportedTail)
from .lorentz import multiplier_from_marcinkiewicz, multiplier_into_lorentz
from .orlicz import (ExponentRule, OrliczFunction, conjugate_function,
                     factorization_ratio, nakano_multiplier_exponents,
                     power_function)
from .seqspec import SequenceSpec, Truncation
from .spaces import (Cesaro, LInfty, LorentzSp, Lp, MarcinkiewiczSp,
                     NakanoSp, OrliczSp, SpaceDescriptor, Symmetrized,
                     embeds, is_order_continuous, kothe_dual, norm,
                     point_norm)

INF = math.inf


@dataclass(frozen=True)
class MultiplierResult:
    descriptor: SpaceDescriptor | None
    rule: str
    kind: str = "equality"            # equality | equivalence | unknown
    constants: tuple[float, float] | None = None

    @property
    def known(self) -> bool:
        return self.descriptor is not None


def _as_orlicz(space: SpaceDescriptor) -> OrliczFunction | None:
    if isinstance(space, OrliczSp):
        return space.m
    if isinstance(space, Lp) and not math.isinf(space.p):
        return power_function(space.p)
    return None


def _as_exponents(space: SpaceDescriptor) -> ExponentRule | None:
    if isinstance(space, NakanoSp):
        return space.ps
    if isinstance(space, Lp) and not math.isinf(space.p):
        return ExponentRule.constant(space.p)
    return None


def multiplier_space(x: SpaceDescriptor, y: SpaceDescriptor
                     ) -> MultiplierResult:
    """First matching rule wins; Unknown otherwise."""
    if isinstance(x, LInfty):
        x = Lp(INF)
    if isinstance(y, LInfty):
        y = Lp(INF)
    if x == y:
        return MultiplierResult(LInfty(), "same space: multipliers are the "
                                "bounded sequences", "equality", (1.0, 1.0))
    if isinstance(x, Lp) and isinstance(y, Lp):
        p, q = x.p, y.p
        if q < p:
            r = q if math.isinf(p) else p * q / (p - q)
            return MultiplierResult(Lp(r), "lp pair with decreasing exponent",
                                    "equality", (1.0, 1.0))
        return MultiplierResult(LInfty(), "lp pair with increasing exponent",
                                "equality", (1.0, 1.0))
    if embeds(x, y):
        return MultiplierResult(LInfty(), "source embeds into target",
                                "equivalence", None)
    ps, qs = _as_exponents(x), _as_exponents(y)
    if ps is not None and qs is not None:
        try:
            rs = nakano_multiplier_exponents(ps, qs)
        except ExponentOrder:
            return MultiplierResult(None, "mixed exponent order", "unknown")
        return MultiplierResult(NakanoSp(rs), "Nakano pair: exponent "
                                "difference rule", "equality", (1.0, 1.0))
    m0, m1 = _as_orlicz(x), _as_orlicz(y)
    if m0 is not None and m1 is not None:
        if m0.kind == "mtilde" and m1.kind == "power" and m1.param == 2.0:
            conj = conjugate_function()
        else:
            conj = _numeric_conjugate(m1, m0)
        return MultiplierResult(OrliczSp(conj), "Orlicz pair: generalized "
                                "Young conjugate", "equivalence", None)
    if isinstance(x, MarcinkiewiczSp):
        try:
            desc = multiplier_from_marcinkiewicz(x.phi, y)
        except (HypothesisUnmet, UnsupportedTail) as exc:
            return MultiplierResult(None, f"Marcinkiewicz source: {exc}",
                                    "unknown")
        return MultiplierResult(desc, "Marcinkiewicz source: symmetrized "
                                "weighted target", "equivalence", (0.5, 1.0))
    if isinstance(y, LorentzSp):
        try:
            desc = multiplier_into_lorentz(x, y.phi)
        except (HypothesisUnmet, UnsupportedTail, UnknownDual) as exc:
            return MultiplierResult(None, f"Lorentz target: {exc}", "unknown")
        return MultiplierResult(desc, "Lorentz target: symmetrized weighted "
                                "dual", "equivalence", (0.5, 1.0))
    if isinstance(x, Cesaro) and isinstance(y, Cesaro):
        from .essnorm import cesaro_multiplier_space
        return cesaro_multiplier_space(x.base, y.base)
    return MultiplierResult(None, "no rule matched", "unknown")


def _numeric_conjugate(n_fn: OrliczFunction, m_fn: OrliczFunction
                       ) -> OrliczFunction:
    from .orlicz import young_conjugate_generalized

    def ev(t: float) -> float:
        return young_conjugate_generalized(n_fn, m_fn, t, grid_size=512).lower

    return OrliczFunction("custom", fn=ev, label="numeric conjugate")


# ---------------------------------------------------------------------------
# operator-norm oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleBudget:
    restarts: int = 16
    sweeps: int = 40
    support_cap: int = 64
    heuristic_slack: float = 0.5


@dataclass(frozen=True)
class OracleResult:
    bracket: Bracket
    witness: np.ndarray
    upper_rule: str


def multiplier_norm_oracle(x_sp: SpaceDescriptor, y_sp: SpaceDescriptor,
                           lam: SequenceSpec, trunc: Truncation | None = None,
                           budget: OracleBudget | None = None,
                           seed: int = 0) -> OracleResult:
    """Bracket the multiplier norm by direct search over the unit ball.

    The lower end is always feasible (the returned witness reproduces it);
    the upper end is certified for sup-norm targets of equal spaces, lp
    pairs (sharp scaling argument) and Marcinkiewicz sources (pointwise
    domination of the unit ball by the reciprocal weight), and otherwise
    is lower * (1 + slack) flagged heuristic.
    """
    trunc = trunc or Truncation()
    budget = budget or OracleBudget()
    n = trunc.n if not lam.finite_support else max(lam.m, 1)
    lam_vec = lam.materialize(min(n, 4 * budget.support_cap))
    support = np.nonzero(lam_vec)[0]
    if support.size > budget.support_cap:
        top = np.argsort(np.abs(lam_vec[support]))[::-1][:budget.support_cap]
        support = np.sort(support[top])
    lam_s = np.abs(lam_vec[support]) if support.size else np.zeros(1)

    def ratio(xs: np.ndarray) -> float:
        full = np.zeros(int(support[-1]) + 1 if support.size else 1)
        if support.size:
            full[support] = xs
        num = point_norm(y_sp, full * np.abs(lam_vec[:full.size]))
        den = point_norm(x_sp, full)
        return num / den if den > 0 else 0.0

    best, best_x = 0.0, np.zeros_like(lam_s)
    rng = np.random.default_rng(seed)
    for x0 in _oracle_seeds(x_sp, y_sp, lam_s, budget.restarts, rng):
        val, xs = _coordinate_ascent(ratio, x0, budget.sweeps)
        if val > best:
            best, best_x = val, xs

    upper, rule = _oracle_upper(x_sp, y_sp, lam, trunc, best, budget)
    certified = rule != "heuristic slack"
    lo = min(best, upper)
    return OracleResult(Bracket(lo, upper, certified, rule),
                        _embed(best_x, support), rule)


def _embed(xs: np.ndarray, support: np.ndarray) -> np.ndarray:
    full = np.zeros(int(support[-1]) + 1 if support.size else 1)
    if support.size:
        full[support] = xs
    return full


def _oracle_seeds(x_sp, y_sp, lam_s, restarts, rng):
    k = lam_s.size
    seeds = [np.ones(k), lam_s + 1e-12]
    if isinstance(x_sp, Lp) and isinstance(y_sp, Lp) and y_sp.p < x_sp.p \
            and not math.isinf(x_sp.p):
        r = x_sp.p * y_sp.p / (x_sp.p - y_sp.p)
        seeds.append(np.maximum(lam_s, 1e-30) ** (r / x_sp.p))
    if isinstance(x_sp, MarcinkiewiczSp):
        ranks = np.empty(k)
        ranks[np.argsort(lam_s)[::-1]] = np.arange(1, k + 1)
        seeds.append(1.0 / np.array([x_sp.phi.phi(t) for t in ranks]))
    for i in range(min(k, 4)):
        e = np.zeros(k)
        e[np.argsort(lam_s)[::-1][i]] = 1.0
        seeds.append(e)
    while len(seeds) < restarts:
        seeds.append(rng.random(k) ** 2 + 1e-9)
    return seeds[:max(restarts, 6)]


def _coordinate_ascent(ratio, x0: np.ndarray, sweeps: int):
    xs = np.maximum(np.asarray(x0, dtype=float), 0.0)
    if not np.any(xs > 0.0):
        xs[0] = 1.0
    best = ratio(xs)
    for factor in (4.0, 2.0, 1.3, 1.05, 1.01):
        for _ in range(sweeps):
            improved = False
            for i in range(xs.size):
                old = xs[i]
                for cand in (old * factor, old / factor):
                    xs[i] = cand
                    val = ratio(xs)
                    if val > best * (1.0 + 1e-12):
                        best = val
                        old = cand
                        improved = True
                xs[i] = old
            if not improved:
                break
    return best, xs


def _oracle_upper(x_sp, y_sp, lam, trunc, lower, budget):
    if x_sp == y_sp:
        b = norm(LInfty(), lam, trunc)
        return b.upper, "sup norm on equal spaces"
    if isinstance(x_sp, Lp) and isinstance(y_sp, Lp):
        p, q = x_sp.p, y_sp.p
        if q >= p:
            return norm(LInfty(), lam, trunc).upper, "sup norm (embedding)"
        if math.isinf(p):
            return norm(Lp(q), lam, trunc).upper, "lq closed form"
        r = p * q / (p - q)
        return norm(Lp(r), lam, trunc).upper, "lr closed form"
    if isinstance(x_sp, MarcinkiewiczSp) and x_sp.phi.is_power:
        from .spaces import PowerWeight
        desc = Symmetrized(y_sp, PowerWeight(1.0, -x_sp.phi.alpha))
        b = norm(desc, lam, trunc)
        return b.upper, "reciprocal-weight ball relaxation"
    return lower * (1.0 + budget.heuristic_slack), "heuristic slack"


# ---------------------------------------------------------------------------
# pointwise-product norm oracle
# ---------------------------------------------------------------------------

def product_space_norm_oracle(e_sp: SpaceDescriptor, f_sp: SpaceDescriptor,
                              f: SequenceSpec, trunc: Truncation | None = None,
                              sweeps: int = 60) -> OracleResult:
    """inf{||g||_E ||h||_F : f = g h} for finitely supported nonnegative f.

    Upper end from log-space coordinate descent (always a valid split);
    lower end from the duality bound <|f|, |z|> / ||z||_{M(F, E^dual)}
    over a small candidate set of z.
    """
    trunc = trunc or Truncation()
    if not f.finite_support:
        raise UnsupportedTail("product norm oracle needs finite support")
    fv = np.abs(f.materialize(max(f.m, 1)))
    support = np.nonzero(fv)[0]
    if support.size == 0:
        return OracleResult(Bracket.point(0.0), fv, "zero input")
    fs = fv[support]

    def objective(g_log: np.ndarray) -> float:
        g = np.exp(g_log)
        gg = np.zeros_like(fv)
        hh = np.zeros_like(fv)
        gg[support] = g
        hh[support] = fs / g
        return point_norm(e_sp, gg) * point_norm(f_sp, hh)

    g_log = 0.5 * np.log(fs)
    if isinstance(e_sp, Lp) and isinstance(f_sp, Lp) \
            and not math.isinf(e_sp.p) and not math.isinf(f_sp.p):
        qq = 1.0 / (1.0 / e_sp.p + 1.0 / f_sp.p)
        g_log = (qq / e_sp.p) * np.log(fs)
    best = objective(g_log)
    step = 0.5
    for _ in range(sweeps):
        improved = False
        for i in range(g_log.size):
            for d in (step, -step):
                g_log[i] += d
                val = objective(g_log)
                if val < best * (1.0 - 1e-13):
                    best = val
                    improved = True
                else:
                    g_log[i] -= d
        if not improved:
            step *= 0.5
            if step < 1e-6:
                break

    lower = _product_lower(e_sp, f_sp, fv, support, best)
    g = np.zeros_like(fv)
    g[support] = np.exp(g_log)
    return OracleResult(Bracket(min(lower, best), best,
                               certified=lower > 0.0,
                               note="duality lower bound"), g, "descent")


def _product_lower(e_sp, f_sp, fv, support, upper) -> float:
    try:
        dual = kothe_dual(e_sp)
    except Exception:
        return 0.0
    best = 0.0
    fs = fv[support]
    cands = [np.ones_like(fs), fs, fs ** 0.5]
    if isinstance(e_sp, Lp) and isinstance(f_sp, Lp) \
            and not math.isinf(e_sp.p) and not math.isinf(f_sp.p):
        qq = 1.0 / (1.0 / e_sp.p + 1.0 / f_sp.p)
        cands.append(np.maximum(fs, 1e-300) ** (qq - 1.0))
    for zs in cands:
        z = np.zeros_like(fv)
        z[support] = zs
        pairing = float(np.dot(fv, z))
        mres = multiplier_space(f_sp, dual)
        zn = None
        if mres.known and mres.kind == "equality":
            zn = point_norm(mres.descriptor, z)
        elif f_sp == dual:
            zn = float(np.max(np.abs(z)))
        if zn and zn > 0.0:
            best = max(best, pairing / zn)
    return min(best, upper)


# ---------------------------------------------------------------------------
# factorization check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorizationReport:
    verdict: str            # holds | fails | inconclusive
    rule: str
    spread: float | None = None
    inf_decay: float | None = None
    samples: tuple = ()


def factorization_check(x_sp: SpaceDescriptor, y_sp: SpaceDescriptor,
                        sample_fs=None, decades: tuple[float, float] = (1e-9, 0.5),
                        grid_per_decade: int = 16, holds_spread: float = 1e3,
                        decay_tol: float = 1.2, monotone_frac: float = 0.7
                        ) -> FactorizationReport:
    """Does the source space times its multiplier space recover the target?

    Sup-norm multiplier spaces settle it structurally.  Orlicz pairs are
    decided by boundedness of the inverse-function ratio: walking from the
    largest arguments down, the running infimum of the ratio is tracked at
    decade checkpoints.  New lows appearing in at least ``monotone_frac``
    of the decade steps with total decay >= ``decay_tol`` is the failure
    witness (the infimum of a bounded-below ratio must flatten out);
    a spread <= ``holds_spread`` with no such drift certifies the bound.
    All three knobs are reported back.
    """
    mres = multiplier_space(x_sp, y_sp)
    if not mres.known:
        return FactorizationReport("inconclusive", "multiplier space unknown")
    if mres.descriptor == LInfty():
        if x_sp == y_sp:
            return FactorizationReport("holds", "sup-norm multipliers on "
                                       "equal spaces factor trivially")
        return FactorizationReport(
            "fails", "sup-norm multipliers: the product returns the source, "
            "which differs from the target")
    m0, m1 = _as_orlicz(x_sp), _as_orlicz(y_sp)
    if m0 is not None and m1 is not None:
        lo, hi = decades
        n_dec = int(math.ceil(math.log10(hi / lo)))
        ts = np.geomspace(lo, hi, max(n_dec * grid_per_decade, 24))
        vals = []
        for t in ts:
            try:
                vals.append(factorization_ratio(m0, m1, float(t)).mid)
            except InverseDomain:
                vals.append(math.nan)
        arr = np.array(vals)
        ok = np.isfinite(arr)
        if not np.any(ok):
            return FactorizationReport("fails", "conjugate inverse "
                                       "degenerate on the whole grid")
        arr, tsv = arr[ok], ts[ok]
        spread = float(np.max(arr) / np.min(arr))
        # running infimum from large t downward, read at decade checkpoints
        order = np.argsort(tsv)[::-1]
        run = np.minimum.accumulate(arr[order])
        dec_idx = np.floor(np.log10(tsv[order])).astype(int)
        checkpoints = []
        for d in sorted(set(dec_idx), reverse=True):
            checkpoints.append(float(run[dec_idx == d].min()))
        steps = len(checkpoints) - 1
        new_lows = sum(b < a * (1.0 - 1e-9)
                       for a, b in zip(checkpoints, checkpoints[1:]))
        decay = checkpoints[0] / checkpoints[-1] if checkpoints[-1] > 0 else INF
        drifting = steps > 0 and new_lows >= monotone_frac * steps \
            and decay >= decay_tol
        if drifting:
            return FactorizationReport("fails", "running infimum of the "
                                       "factorization ratio keeps making new "
                                       f"lows ({new_lows}/{steps} decades, "
                                       f"total decay {decay:.3g})",
                                       spread, decay,
                                       tuple(zip(tsv.tolist(), arr.tolist())))
        if spread <= holds_spread:
            return FactorizationReport("holds", "factorization ratio flat "
                                       "across decades", spread, decay,
                                       tuple(zip(tsv.tolist(), arr.tolist())))
        return FactorizationReport("inconclusive", "ratio neither flat nor "
                                   "drifting to new lows", spread, decay)
    # generic route: compare target norms with product-space norms on samples
    if sample_fs is None:
        return FactorizationReport("inconclusive", "no closed route and no "
                                   "samples supplied")
    ratios = []
    for f in sample_fs:
        target = norm(y_sp, f, Truncation(64, "zero-exact")).mid
        prod = product_space_norm_oracle(x_sp, mres.descriptor, f)
        if target > 0:
            ratios.append(prod.bracket.upper / target)
    if not ratios:
        return FactorizationReport("inconclusive", "no usable samples")
    spread = max(ratios) / min(ratios)
    if spread <= holds_spread and max(ratios) < INF:
        return FactorizationReport("holds", "empirical two-sided comparison",
                                   spread)
    return FactorizationReport("inconclusive", "sample ratios disperse",
                               spread)


# ---------------------------------------------------------------------------
# the compactness dichotomy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PittVerdict:
    verdict: str            # all_compact | some_non_compact | unknown
    reason: str


def pitt_predicate(x_sp: SpaceDescriptor, y_sp: SpaceDescriptor) -> PittVerdict:
    """Every bounded multiplier from x to y is compact iff the multiplier
    space is order continuous."""
    mres = multiplier_space(x_sp, y_sp)
    if not mres.known:
        return PittVerdict("unknown", f"multiplier space unknown: {mres.rule}")
    oc = is_order_continuous(mres.descriptor)
    if oc.status == "yes":
        return PittVerdict("all_compact",
                           f"M = {mres.descriptor.short()} is order "
                           f"continuous ({oc.reason})")
    if oc.status == "no":
        return PittVerdict("some_non_compact",
                           f"M = {mres.descriptor.short()} is not order "
                           f"continuous ({oc.reason})")
    return PittVerdict("unknown", oc.reason)

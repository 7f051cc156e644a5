"""Essential norms of multiplication operators and their relatives.

The engine is always the same: the tail norms
``t_n = ||lambda chi_{n, n+1, ...}||_M`` form a non-increasing sequence
whose limit is the essential norm; the limit bracket combines the last
computed upper value (always a bound) with an analytic tail certificate
where one exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bracket import Bracket
from .errors import NotInSpace, UnsupportedTail
from .multipliers import MultiplierResult, multiplier_space
from .seqops import decreasing_rearrangement, tail_restrict
from .seqspec import SequenceSpec, Truncation
from .spaces import (LInfty, Lp, NakanoSp, PowerWeight, SpaceDescriptor,
                     Tandori, Weighted, is_order_continuous, norm,
                     tail_norm_limit)

INF = math.inf

DEFAULT_GRID = tuple(2 ** j for j in range(0, 15, 2))


@dataclass(frozen=True)
class EssNormReport:
    tail_norms: tuple[tuple[int, Bracket], ...]
    limit: Bracket
    verdict: str                    # compact | non_compact | inconclusive
    certificate: str
    rule: str = ""
    warnings: tuple[str, ...] = ()


def _verdict_from_limit(limit: Bracket, scale: float, tol: float = 1e-9):
    if limit.certified and limit.upper <= tol * max(scale, 1e-30):
        return "compact", "certified tail-norm limit is zero"
    if limit.certified and limit.lower > tol * max(scale, 1e-30):
        return "non_compact", f"certified limit >= {limit.lower:.6g}"
    return "inconclusive", "no certified two-sided limit"


def _reflexive(space: SpaceDescriptor) -> bool | None:
    if isinstance(space, Lp):
        return 1.0 < space.p < INF
    if isinstance(space, NakanoSp):
        return space.ps.inf > 1.0 and space.ps.all_finite
    return None


def essential_norm(x_sp: SpaceDescriptor, y_sp: SpaceDescriptor,
                   lam: SequenceSpec, n_grid=None,
                   trunc: Truncation | None = None) -> EssNormReport:
    """Essential norm of the multiplication operator lambda: x_sp -> y_sp
    as the limit of multiplier-norm tails."""
    trunc = trunc or Truncation()
    n_grid = tuple(n_grid) if n_grid else DEFAULT_GRID
    warnings = []
    if _reflexive(x_sp) is not True and \
            is_order_continuous(y_sp).status != "yes":
        warnings.append("neither source reflexivity nor target order "
                        "continuity certified: the limit formula is only an "
                        "upper bound a priori")
    mres = multiplier_space(x_sp, y_sp)
    if not mres.known:
        return _essential_norm_by_oracle(x_sp, y_sp, lam, n_grid, trunc,
                                         mres.rule, tuple(warnings))
    desc = mres.descriptor
    pairs = []
    for n in n_grid:
        b = norm(desc, tail_restrict(lam, n), trunc)
        pairs.append((n, b))
    if math.isinf(pairs[0][1].upper):
        raise NotInSpace("lambda is not a bounded multiplier")
    limit = tail_norm_limit(desc, lam, pairs[-1][1])
    cap = min(limit.upper, pairs[-1][1].upper)
    limit = Bracket(min(limit.lower, cap), cap, limit.certified)
    if mres.kind == "equivalence":
        warnings.append("descriptor norm is an equivalent renorming; limits "
                        "are in descriptor units")
    verdict, cert = _verdict_from_limit(limit, pairs[0][1].upper)
    return EssNormReport(tuple(pairs), limit, verdict, cert, mres.rule,
                         tuple(warnings))


def _essential_norm_by_oracle(x_sp, y_sp, lam, n_grid, trunc, rule,
                              warnings) -> EssNormReport:
    """No closed multiplier space: estimate the tail norms by direct search.

    Oracle lowers stay valid, uppers are heuristic unless a certified
    relaxation applies, so the limit bracket is flagged accordingly."""
    from .multipliers import OracleBudget, multiplier_norm_oracle
    budget = OracleBudget(restarts=8, sweeps=12)
    pairs = []
    run_hi = INF
    for n in n_grid:
        res = multiplier_norm_oracle(x_sp, y_sp, tail_restrict(lam, n),
                                     trunc, budget=budget, seed=n)
        b = res.bracket
        # the true tail sequence is non-increasing, so earlier upper bounds
        # stay valid and the running minimum tightens the reported ones
        run_hi = min(run_hi, b.upper)
        pairs.append((n, Bracket(min(b.lower, run_hi), run_hi, b.certified,
                                 b.note)))
    last = pairs[-1][1]
    if lam.finite_support:
        limit = Bracket.point(0.0)  # finite-rank symbol
    else:
        limit = Bracket(0.0, last.upper, certified=False)
    verdict, cert = _verdict_from_limit(limit, pairs[0][1].upper)
    return EssNormReport(tuple(pairs), limit, verdict,
                         cert + " (search-oracle tails)",
                         rule + "; tails by direct search",
                         tuple(warnings) + ("multiplier space unknown: "
                                            "tail values are search results",))


def essential_norm_self(x_sp: SpaceDescriptor, lam: SequenceSpec,
                        n_grid=None) -> EssNormReport:
    """On a single order-continuous space the essential norm is the limsup
    of the symbol."""
    n_grid = tuple(n_grid) if n_grid else DEFAULT_GRID
    warnings = []
    oc = is_order_continuous(x_sp)
    if oc.status != "yes":
        warnings.append(f"space not certified order continuous: {oc.reason}")
    pairs = []
    for n in n_grid:
        pairs.append((n, norm(LInfty(), tail_restrict(lam, n), Truncation(
            max(n_grid[-1], 64), "certified"))))
    try:
        lim = lam.tail.limsup_abs() if not lam.finite_support else 0.0
        limit = Bracket.point(lim)
    except UnsupportedTail:
        limit = Bracket(0.0, pairs[-1][1].upper, certified=False)
    verdict, cert = _verdict_from_limit(limit, pairs[0][1].upper)
    return EssNormReport(tuple(pairs), limit, verdict, cert,
                         "limsup of the symbol", tuple(warnings))


def distance_to_oc_part(z_sp: SpaceDescriptor, z: SequenceSpec,
                        n_grid=None, trunc: Truncation | None = None
                        ) -> EssNormReport:
    """Distance from z to the order-continuous ideal of the space: the same
    tail-limit engine applied to the space itself."""
    trunc = trunc or Truncation()
    n_grid = tuple(n_grid) if n_grid else DEFAULT_GRID
    pairs = [(n, norm(z_sp, tail_restrict(z, n), trunc)) for n in n_grid]
    limit = tail_norm_limit(z_sp, z, pairs[-1][1])
    limit = Bracket(limit.lower, min(limit.upper, pairs[-1][1].upper),
                    limit.certified)
    verdict, cert = _verdict_from_limit(limit, pairs[0][1].upper)
    return EssNormReport(tuple(pairs), limit, verdict, cert,
                         "distance to the order-continuous ideal")


def approximation_numbers(lam: SequenceSpec, q: float, p: float,
                          n_grid=None, trunc: Truncation | None = None):
    """a_n of the multiplier from l_q into l_p for 1 < p < q < inf:
    the l_r norm of the rearranged symbol's tail from n on."""
    if not 1.0 < p < q < INF:
        raise ValueError("approximation-number formula needs 1 < p < q < inf")
    trunc = trunc or Truncation()
    r = 1.0 / (1.0 / p - 1.0 / q)
    n_grid = tuple(n_grid) if n_grid else tuple(range(1, 17))
    lam_star = decreasing_rearrangement(lam, trunc)
    out = []
    for n in n_grid:
        try:
            b = norm(Lp(r), tail_restrict(lam_star, n), trunc)
            out.append((n, b.mid if not math.isinf(b.upper) else INF))
        except NotInSpace:
            out.append((n, INF))
    return out


# ---------------------------------------------------------------------------
# Cesaro / Tandori multipliers
# ---------------------------------------------------------------------------

def cesaro_multiplier_space(x_sp: SpaceDescriptor, y_sp: SpaceDescriptor
                            ) -> MultiplierResult:
    """Multipliers between the Cesaro spaces built over x_sp and y_sp.

    When the target factorizes through the source, the answer is the
    majorant (Tandori) space over M(x, y); the increasing-exponent lp pair
    escapes the factorization hypothesis and gets its own weighted
    sup-norm rule.
    """
    from .multipliers import factorization_check
    if x_sp == y_sp:
        return MultiplierResult(LInfty(), "same Cesaro space", "equality",
                                (1.0, 1.0))
    if isinstance(x_sp, Lp) and isinstance(y_sp, Lp) and x_sp.p < y_sp.p:
        expo = 1.0 / y_sp.p - 1.0 / x_sp.p
        return MultiplierResult(Weighted(LInfty(), PowerWeight(1.0, expo)),
                                "increasing-exponent Cesaro pair: weighted "
                                "sup norm", "equality", (1.0, 1.0))
    fact = factorization_check(x_sp, y_sp)
    if fact.verdict != "holds":
        return MultiplierResult(None, "factorization hypothesis not "
                                f"certified ({fact.verdict}: {fact.rule})",
                                "unknown")
    inner = multiplier_space(x_sp, y_sp)
    if not inner.known:
        return MultiplierResult(None, "inner multiplier space unknown",
                                "unknown")
    return MultiplierResult(Tandori(inner.descriptor),
                            "majorant space over the inner multipliers "
                            "(factorization certified)", "equivalence", None)


def cesaro_compactness(x_sp: SpaceDescriptor, y_sp: SpaceDescriptor,
                       lam: SequenceSpec, n_grid=None,
                       trunc: Truncation | None = None) -> EssNormReport:
    """Compactness of the multiplier between the Cesaro spaces over x and y:
    essential-norm limit computed in the Cesaro multiplier descriptor."""
    trunc = trunc or Truncation()
    mres = cesaro_multiplier_space(x_sp, y_sp)
    if not mres.known:
        return EssNormReport((), Bracket(0.0, INF, certified=False),
                             "inconclusive", mres.rule)
    rep = distance_to_oc_part(mres.descriptor, lam, n_grid, trunc)
    return EssNormReport(rep.tail_norms, rep.limit, rep.verdict,
                         rep.certificate, mres.rule)


def fourier_multiplier_essnorm(e_sp: SpaceDescriptor, lam: SequenceSpec,
                               n_grid=None, trunc: Truncation | None = None
                               ) -> EssNormReport:
    """Essential norm of a coefficient multiplier from a disc-algebra-type
    space into a sequence space: reduces to the multiplier tails from l_2."""
    warnings = []
    oc = is_order_continuous(e_sp)
    if oc.status != "yes":
        warnings.append(f"target not certified order continuous: {oc.reason}")
    rep = essential_norm(Lp(2.0), e_sp, lam, n_grid, trunc)
    return EssNormReport(rep.tail_norms, rep.limit, rep.verdict,
                         rep.certificate, "tail norms from the l_2 reduction",
                         rep.warnings + tuple(warnings))

"""Orlicz / Musielak-Orlicz / Nakano machinery.

Covers Luxemburg norms by bisection on the modular, the generalized Young
conjugate ``(N (-) M)(t) = sup_{0<=s<=1} [N(ts) - M(s)]``, Delta_2
evidence, the Nakano compactness criterion, and the closed forms of the
piecewise-linear counterexample function and its conjugate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .bracket import Bracket
from .errors import (BranchOverflow, DescriptorError, ExponentOrder,
                     InverseDomain, ModularDivergent, UnsupportedTail)
from .seqspec import SequenceSpec, Truncation

INF = math.inf

_FACT = [float(math.factorial(n)) for n in range(K.BRANCH_CAP + 2)]

# kink ordinates of mtilde: v_n = n/(n!)^2, branch n covers values [v_{n+1}, v_n)
_MT_V = [INF] + [n / _FACT[n] ** 2 for n in range(1, K.BRANCH_CAP + 2)]


def _conj_eps(n: int) -> float:
    """Exact crossing offset of adjacent conjugate branches."""
    return (n * n + n - 1.0) / (n ** 4 + 4.0 * n ** 3 + 5.0 * n * n - 3.0)


# conjugate branch boundaries: branch n is active on (u_n, u_{n-1}]
_CJ_U = [INF] + [2.0 * math.sqrt(n + _conj_eps(n)) / (n + 1.0)
                 for n in range(1, K.BRANCH_CAP + 1)]
# conjugate value at the crossing u_n
_CJ_W = [INF] + [_conj_eps(n) / _FACT[n] ** 2 for n in range(1, K.BRANCH_CAP + 1)]


@dataclass(frozen=True)
class OrliczFunction:
    """Monotone convex function on [0, inf) vanishing at 0.

    ``kind`` is one of ``power`` (param = p), ``mtilde``, ``mconj`` or
    ``custom`` (callable, numeric inverse).
    """

    kind: str
    param: float = 0.0
    fn: object = None
    label: str = ""

    def __post_init__(self):
        if self.kind == "power" and self.param < 1.0:
            raise DescriptorError("power Orlicz function needs p >= 1")
        if self.kind == "custom" and not callable(self.fn):
            raise DescriptorError("custom Orlicz function needs a callable")
        if self.kind not in ("power", "mtilde", "mconj", "custom"):
            raise DescriptorError(f"unknown Orlicz kind {self.kind!r}")

    # -- evaluation ----------------------------------------------------
    def __call__(self, t: float) -> float:
        return float(self.eval_many(np.array([t]))[0])

    def eval_many(self, ts: np.ndarray) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        if self.kind == "custom":
            return np.array([self.fn(float(t)) for t in ts.ravel()]
                            ).reshape(ts.shape)
        code = {"power": K.KIND_POWER, "mtilde": K.KIND_MTILDE,
                "mconj": K.KIND_MCONJ}[self.kind]
        try:
            return np.asarray(K.orlicz_eval(code, self.param, ts))
        except ValueError as exc:
            raise BranchOverflow(str(exc)) from exc

    @property
    def kernel_code(self) -> int | None:
        return {"power": K.KIND_POWER, "mtilde": K.KIND_MTILDE,
                "mconj": K.KIND_MCONJ}.get(self.kind)

    def domain_floor(self) -> float:
        return K.MTILDE_FLOOR if self.kind == "mtilde" else 0.0

    # -- inverse --------------------------------------------------------
    def inverse(self, u: float) -> float:
        """t with M(t) = u; closed form where available, else bisection."""
        if u < 0.0:
            raise InverseDomain("negative value")
        if u == 0.0:
            return 0.0
        if self.kind == "power":
            return u ** (1.0 / self.param)
        if self.kind == "mtilde":
            return _mtilde_inverse(u)
        if self.kind == "mconj":
            return _mconj_inverse(u)
        return _bisect_inverse(self, u)

    def slope_at(self, t: float) -> float:
        """One-sided secant slope, used for Lipschitz slack bounds."""
        h = max(t, 1.0) * 1e-6
        return (self(t + h) - self(t)) / h

    def breakpoints(self) -> tuple[float, ...]:
        """Corner locations; between them the function is smooth and convex.

        A sup of ``N(ts) - M(s)`` restricted to a corner-free interval of
        both arguments is attained at the interval ends, so feeding these
        into the search grid makes the grid maximum exact up to the corner
        set.
        """
        if self.kind == "mtilde":
            return tuple((n + 1.0) / (2.0 * _FACT[n])
                         for n in range(1, K.BRANCH_CAP + 1)) + (1.0,)
        if self.kind == "mconj":
            return tuple(_CJ_U[1:])
        return ()


def power_function(p: float) -> OrliczFunction:
    return OrliczFunction("power", float(p), label=f"t^{p:g}")


def mtilde_function() -> OrliczFunction:
    """The piecewise-linear Orlicz function of the factorization example."""
    return OrliczFunction("mtilde", label="mtilde")


def conjugate_function() -> OrliczFunction:
    """Closed form of (t^2 (-) mtilde)."""
    return OrliczFunction("mconj", label="t^2 (-) mtilde")


def appendix_mtilde(t: float) -> float:
    """Scalar closed-form evaluation (branch cap raises BranchOverflow)."""
    return mtilde_function()(t)


def appendix_conjugate(t: float) -> float:
    """Closed-form conjugate; values needing branches past the cap flush to 0."""
    return conjugate_function()(t)


def _mtilde_inverse(u: float) -> float:
    if u >= 1.0:
        return math.sqrt(u)
    for n in range(1, K.BRANCH_CAP + 1):
        if u >= _MT_V[n + 1]:  # value range of branch n is [v_{n+1}, v_n)
            f = _FACT[n]
            return (u * f * f + 1.0) / (2.0 * f)
    raise BranchOverflow("value below the branch-cap range of mtilde")


def _mconj_inverse(u: float) -> float:
    for n in range(1, K.BRANCH_CAP + 1):
        if u > _CJ_W[n]:  # value range of branch n is (w_n, w_{n-1}]
            f = _FACT[n]
            return 2.0 * math.sqrt(u * f * f + n) / (n + 1.0)
    raise InverseDomain("value below the branch-cap resolution of the conjugate")


def _bisect_inverse(m: OrliczFunction, u: float, rel_tol: float = 1e-12,
                    cap: float = 1e9) -> float:
    hi = 1.0
    while m(hi) < u:
        hi *= 2.0
        if hi > cap:
            raise InverseDomain("value beyond invertible range")
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if m(mid) < u:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rel_tol * hi:
            break
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# exponent rules and modulars
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentRule:
    """p_n >= 1: finite table followed by a constant tail (inf allowed)."""

    head: tuple[float, ...] = ()
    tail: float = 2.0

    def __post_init__(self):
        if any(p < 1.0 for p in self.head) or self.tail < 1.0:
            raise DescriptorError("exponents must be >= 1")

    @staticmethod
    def constant(p: float) -> "ExponentRule":
        return ExponentRule((), float(p))

    def value(self, n: int) -> float:
        return self.head[n - 1] if n <= len(self.head) else self.tail

    def values(self, n: int) -> np.ndarray:
        out = np.full(n, self.tail)
        k = min(n, len(self.head))
        out[:k] = self.head[:k]
        return out

    @property
    def sup(self) -> float:
        return max((*self.head, self.tail))

    @property
    def inf(self) -> float:
        return min((*self.head, self.tail))

    @property
    def all_finite(self) -> bool:
        return self.sup < INF


def nakano_multiplier_exponents(ps: ExponentRule, qs: ExponentRule
                                ) -> ExponentRule:
    """1/r_n = 1/q_n - 1/p_n for a multiplier from exponents p into q <= p.

    Equal exponents give the infinity sentinel; q_n > p_n anywhere raises
    ExponentOrder (callers route that case to the sup-norm rule).
    """
    k = max(len(ps.head), len(qs.head))
    head = []
    for n in range(1, k + 1):
        head.append(_r_of(ps.value(n), qs.value(n)))
    return ExponentRule(tuple(head), _r_of(ps.tail, qs.tail))


def _r_of(p: float, q: float) -> float:
    if q > p:
        raise ExponentOrder(f"target exponent {q} exceeds source exponent {p}")
    if q == p:
        return INF
    return 1.0 / (1.0 / q - 1.0 / p)


# ---------------------------------------------------------------------------
# Luxemburg norm
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModularFamily:
    """Index-wise Orlicz functions: an optional explicit head followed by
    either one Orlicz function for every remaining index or a Nakano
    exponent rule."""

    orlicz: OrliczFunction | None = None
    nakano: ExponentRule | None = None
    head: tuple[OrliczFunction, ...] = ()

    def __post_init__(self):
        if (self.orlicz is None) == (self.nakano is None):
            raise DescriptorError("exactly one of orlicz/nakano must be set")


def _modular(family: ModularFamily, xs: np.ndarray, rho: float) -> float:
    acc = 0.0
    k = min(len(family.head), len(xs))
    for m, v in zip(family.head, xs[:k]):
        acc += m(abs(float(v)) / rho)
    xs = xs[k:]
    if xs.size == 0:
        return acc
    if family.nakano is not None:
        ps = family.nakano.values(len(xs) + k)[k:]
        finite = np.isfinite(ps)
        if np.any(~finite):
            if np.max(np.abs(xs[~finite])) > rho:
                return INF
        if np.any(finite):
            acc += K.nakano_modular(np.ascontiguousarray(xs[finite]), rho,
                                    np.ascontiguousarray(ps[finite]))
        return acc
    m = family.orlicz
    code = m.kernel_code
    if code is not None:
        return acc + K.modular(code, m.param, np.ascontiguousarray(xs), rho)
    return acc + float(np.sum(m.eval_many(np.abs(xs) / rho)))


def _modular_tail_upper(family: ModularFamily, x: SequenceSpec, n0: int,
                        rho: float) -> float:
    """Certified upper bound for the modular mass beyond the horizon."""
    if x.finite_support and x.m < n0:
        return 0.0
    if family.nakano is not None:
        p = family.nakano.tail
        if not math.isfinite(p):
            return 0.0 if x.tail.sup_from(n0) <= rho else INF
        return x.tail.pow_sum_from(p, n0).upper / rho ** p
    m = family.orlicz
    if m.kind == "power":
        return x.tail.pow_sum_from(m.param, n0).upper / rho ** m.param
    if m.kind in ("mtilde", "mconj"):
        # both sit below t^2 for t <= 1 (quadratic envelope)
        sup = x.tail.sup_from(n0)
        if sup > rho:
            raise UnsupportedTail("tail not inside the quadratic-envelope zone")
        return x.tail.pow_sum_from(2.0, n0).upper / rho ** 2
    raise UnsupportedTail("no certified modular tail for a custom function")


def luxemburg_norm(family: ModularFamily, x: SequenceSpec,
                   trunc: Truncation, rel_tol: float = 1e-13) -> Bracket:
    """inf{rho > 0 : sum_n M_n(|x_n| / rho) <= 1} as a certified bracket."""
    trunc.check(x)
    n = trunc.n if not x.finite_support else max(x.m, 1)
    xs = np.abs(x.materialize(n))
    if not np.any(xs > 0.0) and (x.finite_support or x.tail.sup_from(n + 1) == 0):
        return Bracket.point(0.0)

    if x.finite_support or trunc.policy == "heuristic":
        def mod_lo(rho):
            return _modular(family, xs, rho)
        mod_hi = mod_lo
        certified = x.finite_support
    else:
        # a tail whose certified bound is infinite at a huge scaling is
        # divergent at every scaling (power bounds scale by rho^-p)
        probe = 2.0 * (x.tail.sup_from(n + 1) + float(np.max(xs)) + 1.0)
        if math.isinf(_modular_tail_upper(family, x, n + 1, probe)):
            raise ModularDivergent("certified tail modular diverges")

        def mod_lo(rho):
            return _modular(family, xs, rho)

        def mod_hi(rho):
            return _modular(family, xs, rho) + _modular_tail_upper(
                family, x, n + 1, rho)
        certified = True

    lo = _lux_root(mod_lo, xs, rel_tol)
    hi = _lux_root(mod_hi, xs, rel_tol)
    return Bracket(min(lo, hi), max(lo, hi), certified)


def _lux_root(modular, xs: np.ndarray, rel_tol: float) -> float:
    """Root of modular(rho) = 1 for a non-increasing modular."""
    rho_hi = max(float(np.max(xs)), 1e-300)
    grow = 0
    while modular(rho_hi) > 1.0:
        rho_hi *= 2.0
        grow += 1
        if grow > 2000:
            raise ModularDivergent("no scaling brings the modular below 1")
    rho_lo = rho_hi
    shrink = 0
    while modular(rho_lo) <= 1.0:
        rho_lo *= 0.5
        shrink += 1
        if shrink > 2000:
            return 0.0
    for _ in range(200):
        mid = 0.5 * (rho_lo + rho_hi)
        if modular(mid) <= 1.0:
            rho_hi = mid
        else:
            rho_lo = mid
        if rho_hi - rho_lo <= rel_tol * rho_hi:
            break
    return rho_hi


# ---------------------------------------------------------------------------
# generalized Young conjugate, numerically
# ---------------------------------------------------------------------------

def young_conjugate_generalized(n_fn: OrliczFunction, m_fn: OrliczFunction,
                                t: float, grid_size: int = 4096,
                                refine_iters: int = 120) -> Bracket:
    """sup_{0<=s<=1} [N(t s) - M(s)] with a grid + local refinement.

    The grid is logarithmic so that maxima sitting at tiny breakpoints (the
    counterexample function has them at s ~ (n+1)/(2 n!)) are resolved; the
    floor is paired with the closed-form branch cap so both evaluators
    truncate at the same depth.  Lower end is the best value found (always
    feasible), the upper end adds a secant-Lipschitz slack over the final
    bracket width.
    """
    if t < 0.0:
        raise DescriptorError("conjugate argument must be >= 0")
    if t == 0.0:
        return Bracket.point(0.0)
    floor = K.CONJ_GRID_FLOOR
    if n_fn.kind == "mtilde":
        floor = max(floor, K.MTILDE_FLOOR / t * 1.0000001)
    corners = [b for b in m_fn.breakpoints() if floor <= b <= 1.0]
    corners += [b / t for b in n_fn.breakpoints() if floor <= b / t <= 1.0]
    grid = np.concatenate([[0.0], np.geomspace(floor, 1.0, grid_size),
                           np.asarray(corners, dtype=float)])
    grid = np.unique(grid)

    cn, cm = n_fn.kernel_code, m_fn.kernel_code
    if cn is not None and cm is not None:
        best, idx = K.conj_grid_max(cn, n_fn.param, cm, m_fn.param, t, grid)
    else:
        g = n_fn.eval_many(t * grid) - m_fn.eval_many(grid)
        idx = int(np.argmax(g))
        best = max(float(g[idx]), 0.0)

    def g1(s: float) -> float:
        return n_fn(t * s) - m_fn(s)

    lo = grid[idx - 1] if idx > 0 else 0.0
    hi = grid[idx + 1] if idx + 1 < len(grid) else 1.0
    a, b = lo, hi
    for _ in range(refine_iters):
        s1 = a + (b - a) / 3.0
        s2 = b - (b - a) / 3.0
        v1 = g1(s1) if s1 >= floor or s1 == 0.0 else -INF
        v2 = g1(s2) if s2 >= floor else -INF
        best = max(best, v1, v2)
        if v1 < v2:
            a = s1
        else:
            b = s2
        if b - a <= 1e-15 * max(b, 1e-30):
            break
    best = max(best, 0.0)
    lip = t * n_fn.slope_at(t) + m_fn.slope_at(1.0)
    return Bracket(best, best + lip * (b - a))


# ---------------------------------------------------------------------------
# Delta_2 evidence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Delta2Report:
    max_ratio: float
    witness: float
    divergent: bool
    decade_maxima: tuple[tuple[int, float], ...]
    threshold: float


def delta2_evidence(m: OrliczFunction, t_grid=None,
                    threshold: float = 1e6) -> Delta2Report:
    """Empirical sup of M(2t)/M(t) on small arguments with a divergence flag.

    Flags divergent when the ratio tops the threshold or the per-decade
    maxima grow monotonically toward small t.
    """
    if t_grid is None:
        lo = max(m.domain_floor() * 2.0, 1e-12)
        t_grid = np.geomspace(0.5, lo, 600)
    t_grid = np.asarray(t_grid, dtype=float)
    ratios, witness, max_ratio = [], 0.0, 0.0
    by_decade: dict[int, float] = {}
    for t in t_grid:
        mt = m(t)
        m2t = m(min(2.0 * t, 1e150))
        if mt <= 0.0:
            if m2t > 0.0:
                return Delta2Report(INF, float(t), True, (), threshold)
            continue
        r = m2t / mt
        ratios.append(r)
        d = int(math.floor(math.log10(t)))
        by_decade[d] = max(by_decade.get(d, 0.0), r)
        if r > max_ratio:
            max_ratio, witness = r, float(t)
    decs = sorted(by_decade.items(), reverse=True)  # toward small t
    vals = [v for _, v in decs]
    steps = len(vals) - 1
    ups = sum(b > a * 1.0001 for a, b in zip(vals, vals[1:]))
    growing = (steps >= 3 and ups >= 0.75 * steps
               and vals[-1] > 1.5 * vals[0])
    divergent = max_ratio > threshold or growing
    return Delta2Report(max_ratio, witness, divergent, tuple(decs), threshold)


# ---------------------------------------------------------------------------
# Nakano compactness criterion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NakanoReport:
    verdict: str                       # compact | non_compact | not_bounded | inconclusive
    reason: str
    sums: tuple[tuple[float, float, float], ...] = ()   # (ell, k, sum upper)
    witness: tuple[float, float] | None = None


def nakano_compactness(lam: SequenceSpec, ps: ExponentRule, qs: ExponentRule,
                       ell_grid=(2.0, 4.0, 16.0), k_grid=None,
                       trunc: Truncation | None = None) -> NakanoReport:
    """Compactness of the multiplier between Nakano spaces with source
    exponents ``ps`` and target exponents ``qs`` (q_n <= p_n).

    Criterion: for every ell > 1 the sums of (|lambda_n| ell)^{r_n} over
    the indices with r_n above log(k)/log(ell) must vanish as k grows;
    infinite r_n contributes 0 when |lambda_n| ell <= 1 and +inf otherwise.
    """
    trunc = trunc or Truncation()
    rs = nakano_multiplier_exponents(ps, qs)

    # boundedness: lambda must live in the Nakano space of the r_n
    try:
        norm = luxemburg_norm(ModularFamily(nakano=rs), lam, trunc)
    except ModularDivergent:
        return NakanoReport("not_bounded", "modular divergent at every scale")
    if math.isinf(norm.upper):
        return NakanoReport("not_bounded", "norm upper bound infinite")

    if k_grid is None:
        k_grid = [2.0 ** j for j in range(1, 24)]
    n = trunc.n
    lam_abs = np.abs(lam.materialize(n))
    r_vals = rs.values(n)
    tail_r = rs.tail
    tail_limsup = 0.0 if lam.finite_support else lam.tail.limsup_abs()

    sums, witness = [], None
    ok = True
    for ell in ell_grid:
        if ell <= 1.0:
            raise DescriptorError("ell grid must be > 1")
        # infinite exponents: any surviving |lambda| ell > 1 blows up forever
        inf_mask = ~np.isfinite(r_vals) & (lam_abs * ell > 1.0)
        if np.any(inf_mask) or (not math.isfinite(tail_r)
                                and tail_limsup * ell > 1.0):
            witness = (ell, INF)
            ok = False
            sums.append((ell, INF, INF))
            continue
        last = None
        for k in k_grid:
            thr = math.log(k) / math.log(ell)
            mask = np.isfinite(r_vals) & (r_vals > thr) & (lam_abs > 0.0)
            s = float(np.sum((lam_abs[mask] * ell) ** r_vals[mask]))
            if math.isfinite(tail_r) and tail_r > thr and not lam.finite_support:
                s += lam.tail.pow_sum_from(tail_r, n + 1).upper * ell ** tail_r
            last = (ell, k, s)
        sums.append(last)
        # past k = ell^{sup r}, the finite-exponent index set is empty for good
        if rs.all_finite and math.log(k_grid[-1]) / math.log(ell) > rs.sup:
            continue
        if last[2] > 1e-9:
            ok = False
            witness = (ell, last[2])
    if ok:
        return NakanoReport("compact", "all index sums vanish", tuple(sums))
    if witness is not None and math.isinf(witness[1]):
        return NakanoReport("non_compact",
                            "infinite-exponent indices keep unit mass",
                            tuple(sums), witness)
    return NakanoReport("inconclusive", "sums did not certifiably vanish",
                        tuple(sums), witness)


# ---------------------------------------------------------------------------
# factorization ratio
# ---------------------------------------------------------------------------

def _power_pair_conjugate(p0: float, p1: float):
    """Closed form of (t^{p1} (-) t^{p0}) for p0 > p1 >= 1."""
    def conj(u: float) -> float:
        if u <= 0.0:
            return 0.0
        s_star = (p1 * u ** p1 / p0) ** (1.0 / (p0 - p1))
        if s_star >= 1.0:
            return max(u ** p1 - 1.0, 0.0)
        return max(u ** p1 * s_star ** p1 - s_star ** p0, 0.0)
    return conj


def conjugate_inverse(m0: OrliczFunction, m1: OrliczFunction, u: float,
                      grid_size: int = 4096, cap: float = 1e8) -> float:
    """(M1 (-) M0)^{-1}(u) by monotone bisection (closed forms fast-pathed)."""
    if m0.kind == "mtilde" and m1.kind == "power" and m1.param == 2.0:
        return _mconj_inverse(u)
    if m0.kind == "power" and m1.kind == "power":
        if m0.param == m1.param:
            raise InverseDomain("conjugate vanishes identically on [0, 1]")
        if m0.param < m1.param:
            raise ExponentOrder("conjugate degenerate: source grows slower")
        conj = _power_pair_conjugate(m0.param, m1.param)
    else:
        def conj(t):
            return young_conjugate_generalized(m1, m0, t,
                                               grid_size=grid_size).lower
    hi = 1.0
    while conj(hi) < u:
        hi *= 2.0
        if hi > cap:
            if conj(cap) == 0.0:
                raise InverseDomain("conjugate vanishes identically")
            raise InverseDomain("value beyond invertible range")
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if conj(mid) < u:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * hi:
            break
    return 0.5 * (lo + hi)


def factorization_ratio(m0: OrliczFunction, m1: OrliczFunction, t: float,
                        grid_size: int = 4096) -> Bracket:
    """R(t) = M0^{-1}(t) (M1 (-) M0)^{-1}(t) / M1^{-1}(t) for 0 < t < 1.

    Boundedness of R above and below over (0, 1) is the factorization
    criterion for the Orlicz pair; a sliding infimum is the witness of
    failure.
    """
    if not 0.0 < t < 1.0:
        raise DescriptorError("factorization ratio needs 0 < t < 1")
    a = m0.inverse(t)
    b = conjugate_inverse(m0, m1, t, grid_size=grid_size)
    c = m1.inverse(t)
    r = a * b / c
    tol = 1e-9
    return Bracket(r * (1.0 - tol), r * (1.0 + tol))

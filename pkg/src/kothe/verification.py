"""The desk-scale verification suite.

Each criterion is a named callable returning a :class:`CriterionResult`;
the CLI command ``verify-paper`` and the acceptance tests both run these,
so there is exactly one source of truth for the pass/fail logic and the
tolerances pinned here.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .essnorm import (approximation_numbers, cesaro_compactness,
                      cesaro_multiplier_space, essential_norm,
                      essential_norm_self)
from .multipliers import (OracleBudget, factorization_check,
                          multiplier_norm_oracle, pitt_predicate)
from .orlicz import (ExponentRule, appendix_conjugate, factorization_ratio,
                     mtilde_function, nakano_compactness, power_function,
                     young_conjugate_generalized)
from .rademacher import (Integrand, MeasurePartition, lemma_r_demo,
                         rademacher_inner_product)
from .seqops import decreasing_majorant, tail_restrict
from .seqspec import (AlternatingTail, ConstPlusPowerTail, PowerTail,
                      PowLogTail, SequenceSpec, Truncation)
from .spaces import (Cesaro, ConcaveWeight, LInfty, LorentzSp, Lp,
                     MarcinkiewiczSp, NakanoSp, OrliczSp, PowerWeight,
                     Symmetrized, Tandori, Weighted, norm, point_norm)

INF = math.inf


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    elapsed: float = 0.0
    subchecks: tuple[tuple[str, bool, str], ...] = ()

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name:<6} {status}  ({self.elapsed:.2f}s)  {self.detail}"


def _result(name, subs, t0) -> CriterionResult:
    passed = all(ok for _, ok, _ in subs)
    bad = [f"{label}: {msg}" for label, ok, msg in subs if not ok]
    detail = "; ".join(bad) if bad else subs[0][2] if len(subs) == 1 else \
        f"{len(subs)} checks"
    return CriterionResult(name, passed, detail, time.time() - t0,
                           tuple(subs))


# -- AC-1 -------------------------------------------------------------------

def ac1_holder_multiplier_oracle(seed: int = 0) -> CriterionResult:
    """Multiplier norms from l_4 to l_2 match the l_4 closed form to 1e-6."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    worst = 0.0
    budget = OracleBudget(restarts=6, sweeps=12)
    for _ in range(100):
        k = int(rng.integers(1, 13))
        lam = SequenceSpec(tuple(rng.random(k) + 0.05))
        res = multiplier_norm_oracle(Lp(4), Lp(2), lam,
                                     Truncation(32, "zero-exact"),
                                     budget=budget,
                                     seed=int(rng.integers(0, 2 ** 31)))
        target = point_norm(Lp(4), lam.materialize(k))
        worst = max(worst, abs(res.bracket.mid - target) / target)
    subs = [("closed-form match", worst <= 1e-6,
             f"max relative gap {worst:.3g}")]
    return _result("AC-1", subs, t0)


# -- AC-2 -------------------------------------------------------------------

def ac2_self_essential_norm(seed: int = 0) -> CriterionResult:
    """limsup of 1 + (-1)^n / 2 comes out exactly 1.5."""
    t0 = time.time()
    lam = SequenceSpec((), AlternatingTail(1.0, 0.5))
    rep = essential_norm_self(Lp(2), lam)
    err = abs(rep.limit.mid - 1.5)
    subs = [("limsup value", err <= 1e-12, f"|limit - 1.5| = {err:.3g}"),
            ("verdict", rep.verdict == "non_compact", rep.verdict)]
    return _result("AC-2", subs, t0)


# -- AC-3 -------------------------------------------------------------------

def ac3_pitt_predicate(seed: int = 0) -> CriterionResult:
    t0 = time.time()
    cases = [
        (Lp(4), Lp(2), "all_compact"),
        (Lp(2), Lp(4), "some_non_compact"),
        (OrliczSp(mtilde_function()), Lp(2), "some_non_compact"),
    ]
    subs = []
    for x, y, want in cases:
        got = pitt_predicate(x, y)
        subs.append((f"{x.short()} -> {y.short()}", got.verdict == want,
                     f"{got.verdict} (want {want})"))
    return _result("AC-3", subs, t0)


# -- AC-4 -------------------------------------------------------------------

def ac4_conjugate_closed_form(seed: int = 0) -> CriterionResult:
    """Closed-form conjugate vs the brute-force sup, 200 samples."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    n_fn, m_fn = power_function(2.0), mtilde_function()
    worst, worst_t = 0.0, None
    for t in rng.uniform(0.05, 1.0, 200):
        cf = appendix_conjugate(float(t))
        bf = young_conjugate_generalized(n_fn, m_fn, float(t)).lower
        denom = max(cf, bf)
        err = 0.0 if denom == 0.0 else abs(cf - bf) / denom
        if err > worst:
            worst, worst_t = err, float(t)
    subs = [("closed vs brute force", worst <= 1e-4,
             f"max rel err {worst:.3g} at t = {worst_t}")]
    return _result("AC-4", subs, t0)


# -- AC-5 -------------------------------------------------------------------

def ac5_ratio_values() -> list[float]:
    return [factorization_ratio(mtilde_function(), power_function(2.0),
                                1.0 / math.factorial(n) ** 2).mid
            for n in range(2, 8)]


def ac5_factorization_failure(seed: int = 0) -> CriterionResult:
    t0 = time.time()
    rs = ac5_ratio_values()
    decreasing = all(b < a for a, b in zip(rs, rs[1:]))
    halved = rs[-1] <= 0.5 * rs[0]
    mt = factorization_check(OrliczSp(mtilde_function()), Lp(2))
    hp = factorization_check(Lp(4), Lp(2))
    subs = [
        ("ratio strictly decreasing", decreasing,
         "R(2..7) = " + ", ".join(f"{v:.4f}" for v in rs)),
        ("ratio halves by n = 7", halved,
         f"R(7) = {rs[-1]:.6f} vs 0.5 R(2) = {0.5 * rs[0]:.6f}"),
        ("counterexample pair fails", mt.verdict == "fails",
         f"{mt.verdict}: {mt.rule}"),
        ("power pair holds", hp.verdict == "holds"
         and hp.spread is not None and hp.spread - 1.0 <= 1e-3,
         f"{hp.verdict}, spread - 1 = {hp.spread - 1.0:.3g}"),
    ]
    return _result("AC-5", subs, t0)


# -- AC-6 -------------------------------------------------------------------

def ac6_nakano_compactness(seed: int = 0) -> CriterionResult:
    t0 = time.time()
    p4, p2 = ExponentRule.constant(4.0), ExponentRule.constant(2.0)
    half = SequenceSpec((), PowerTail(1.0, 0.5))
    quarter = SequenceSpec((), PowerTail(1.0, 0.25))
    ones = SequenceSpec((), ConstPlusPowerTail(1.0, 0.0, 1.0))
    r1 = nakano_compactness(half, p4, p2)
    r2 = nakano_compactness(quarter, p4, p2)
    r3 = nakano_compactness(ones, p2, p2)
    subs = [
        ("n^-1/2 compact", r1.verdict == "compact", r1.verdict),
        ("n^-1/4 not bounded", r2.verdict == "not_bounded", r2.verdict),
        ("constant symbol non-compact", r3.verdict == "non_compact",
         r3.verdict),
    ]
    return _result("AC-6", subs, t0)


# -- AC-7 -------------------------------------------------------------------

def ac7_cesaro_remark(seed: int = 0) -> CriterionResult:
    t0 = time.time()
    up = cesaro_multiplier_space(Lp(2), Lp(4))
    down = cesaro_multiplier_space(Lp(4), Lp(2))
    want_up = Weighted(LInfty(), PowerWeight(1.0, 0.25 - 0.5))
    want_down = Tandori(Lp(4))
    lam_c = SequenceSpec((), PowLogTail(1.0, 0.25))
    lam_nc = SequenceSpec((), PowerTail(1.0, -0.25))
    rc = cesaro_compactness(Lp(2), Lp(4), lam_c)
    rnc = cesaro_compactness(Lp(2), Lp(4), lam_nc)
    subs = [
        ("increasing pair descriptor", up.descriptor == want_up,
         up.descriptor.short() if up.known else up.rule),
        ("decreasing pair descriptor", down.descriptor == want_down,
         down.descriptor.short() if down.known else down.rule),
        ("log-damped symbol compact", rc.verdict == "compact", rc.verdict),
        ("bare power symbol non-compact", rnc.verdict == "non_compact",
         rnc.verdict),
    ]
    return _result("AC-7", subs, t0)


# -- AC-8 -------------------------------------------------------------------

def ac8_rademacher_exactness(seed: int = 0) -> CriterionResult:
    t0 = time.time()
    part = MeasurePartition(((0.0, 1.0),))
    vals, _ = lemma_r_demo(Integrand("poly", (0.0, 1.0)), part, 12)
    worst = max(abs(v + 2.0 ** -(n + 1)) for n, v in vals)
    gram_err = 0.0
    for n in range(1, 13):
        for m in range(1, 13):
            want = 1.0 if n == m else 0.0
            gram_err = max(gram_err,
                           abs(rademacher_inner_product(n, m) - want))
    subs = [
        ("linear integrand", worst <= 1e-14, f"max error {worst:.3g}"),
        ("orthonormality", gram_err <= 1e-12, f"max Gram error {gram_err:.3g}"),
    ]
    return _result("AC-8", subs, t0)


# -- AC-9 -------------------------------------------------------------------

def ac9_marcinkiewicz_bracket(seed: int = 0) -> CriterionResult:
    """Formula norm vs oracle for the weighted-symmetrized descriptor."""
    t0 = time.time()
    rng = np.random.default_rng(seed)
    phi = ConcaveWeight.power(0.5)
    src = MarcinkiewiczSp(phi)
    desc = Symmetrized(Lp(2), PowerWeight(1.0, -0.5))
    ok = True
    worst = ""
    for i in range(50):
        k = int(rng.integers(1, 9))
        lam = SequenceSpec(tuple(rng.random(k)))
        sym = norm(desc, lam, Truncation(64, "zero-exact")).mid
        res = multiplier_norm_oracle(src, Lp(2), lam,
                                     Truncation(64, "zero-exact"), seed=i)
        hi, lo = res.bracket.upper, res.bracket.lower
        good = (sym <= hi * (1 + 1e-9) <= 2.0 * sym + 1e-6
                and lo >= sym / 2.0 - 1e-9)
        if not good:
            ok = False
            worst = f"sym={sym:.6g} oracle=[{lo:.6g}, {hi:.6g}]"
            break
    subs = [("two-sided sandwich", ok, worst or "all 50 samples inside")]
    return _result("AC-9", subs, t0)


# -- AC-10 --------------------------------------------------------------------

def _battery_spaces():
    return [
        Lp(1), Lp(2), Lp(4), Lp(INF),
        LorentzSp(ConcaveWeight.power(0.5)),
        MarcinkiewiczSp(ConcaveWeight.power(0.5)),
        OrliczSp(power_function(3.0)),
        NakanoSp(ExponentRule((2.0, 3.0), 2.0)),
        Symmetrized(Lp(2), PowerWeight(1.0, -0.25)),
        Cesaro(Lp(2)), Tandori(Lp(2)),
        Weighted(Lp(2), PowerWeight(1.0, -0.25)),
    ]


_RI_SPACES = (Lp, LorentzSp, MarcinkiewiczSp, OrliczSp, Symmetrized)


def ac10_property_batteries(seed: int = 0) -> CriterionResult:
    t0 = time.time()
    rng = np.random.default_rng(seed)
    spaces = _battery_spaces()
    fails = []
    count = 0

    def vec(k):
        return rng.random(k) * rng.choice((1.0, 10.0))

    # norm axioms + ideal property + rearrangement invariance
    for sp in spaces:
        for _ in range(20):
            k = int(rng.integers(2, 33))
            x, y = vec(k), vec(k)
            nx, ny = point_norm(sp, x), point_norm(sp, y)
            c = float(rng.random() * 4 + 0.25)
            count += 3
            if abs(point_norm(sp, c * x) - c * nx) > 1e-12 * max(1.0, c * nx):
                fails.append(f"homogeneity {sp.short()}")
            if point_norm(sp, x + y) > nx + ny + 1e-9 * max(1.0, nx + ny):
                fails.append(f"triangle {sp.short()}")
            small = x * rng.random(k)
            if point_norm(sp, small) > nx * (1 + 1e-12) + 1e-12:
                fails.append(f"ideal {sp.short()}")
            if isinstance(sp, _RI_SPACES):
                count += 1
                perm = rng.permutation(k)
                if abs(point_norm(sp, x[perm]) - nx) > 1e-10 * max(1.0, nx):
                    fails.append(f"rearrangement {sp.short()}")

    # tail-norm monotonicity of the essential-norm engine
    for _ in range(30):
        lam = SequenceSpec(tuple(vec(6)), PowerTail(1.0, 0.75))
        rep = essential_norm(Lp(4), Lp(2), lam,
                             n_grid=[1, 2, 4, 8, 16, 64, 256])
        ups = [b.upper for _, b in rep.tail_norms]
        count += 1
        if any(b > a * (1 + 1e-12) for a, b in zip(ups, ups[1:])):
            fails.append("tail-norm monotonicity")

    # majorant / restriction commutation on the coordinates >= n
    # (below n the majorant of the restricted sequence is a constant head)
    tr = Truncation(64, "certified")
    for _ in range(100):
        k = int(rng.integers(2, 17))
        x = SequenceSpec(tuple(vec(k)), PowerTail(float(rng.random()), 1.5))
        n = int(rng.integers(1, k + 1))
        a = tail_restrict(decreasing_majorant(tail_restrict(x, n), tr), n)
        b = tail_restrict(decreasing_majorant(x, tr), n)
        count += 1
        if not np.array_equal(a.materialize(2 * k), b.materialize(2 * k)):
            fails.append("majorant/restriction commutation")

    # approximation numbers: monotone, and the deep tail meets the
    # essential-norm limit
    for _ in range(25):
        lam = SequenceSpec(tuple(np.sort(vec(6))[::-1] + 1.0),
                           PowerTail(0.5, 1.0))
        ns = [1, 2, 4, 8, 16, 64, 256, 1024]
        a = approximation_numbers(lam, 4.0, 2.0, ns)
        vals = [v for _, v in a]
        count += 2
        if any(b > x * (1 + 1e-10) for x, b in zip(vals, vals[1:])):
            fails.append("a_n monotonicity")
        rep = essential_norm(Lp(4), Lp(2), lam, n_grid=ns)
        if not (rep.limit.lower - 1e-9 <= vals[-1]
                <= rep.tail_norms[-1][1].upper + 1e-9):
            fails.append("a_n vs essential-norm limit")

    # homogeneity/triangle on bracketed norms with tails (certified path)
    for _ in range(40):
        x = SequenceSpec(tuple(vec(4)), PowerTail(float(rng.random()), 1.25))
        sp = spaces[int(rng.integers(0, 4))]
        b1 = norm(sp, x, Truncation(512, "certified"))
        count += 1
        if not (b1.lower <= b1.upper):
            fails.append("bracket sanity")

    uniq = sorted(set(fails))
    subs = [("property batteries", not fails,
             f"{count} cases, failures: {uniq if uniq else 'none'}")]
    return _result("AC-10", subs, t0)


ALL_CRITERIA = (
    ("AC-1", ac1_holder_multiplier_oracle),
    ("AC-2", ac2_self_essential_norm),
    ("AC-3", ac3_pitt_predicate),
    ("AC-4", ac4_conjugate_closed_form),
    ("AC-5", ac5_factorization_failure),
    ("AC-6", ac6_nakano_compactness),
    ("AC-7", ac7_cesaro_remark),
    ("AC-8", ac8_rademacher_exactness),
    ("AC-9", ac9_marcinkiewicz_bracket),
    ("AC-10", ac10_property_batteries),
)


def run_all(seed: int = 0, names=None):
    results = []
    for name, fn in ALL_CRITERIA:
        if names and name not in names:
            continue
        results.append(fn(seed))
    return results

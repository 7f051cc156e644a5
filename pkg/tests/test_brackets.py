"""Containment checks: certified norm brackets against high-resolution
brute force.

The brute value B materializes the sequence far past the bracket's horizon
(200k vs 512), so B is a lower bound of the truth and ``B <= upper`` must
hold.  The matching check on the lower end is ``lower <= B + R`` with R an
*independently computed* remainder bound for the mass past the brute
horizon (for sup-type norms the 512-point supremum can never exceed the
200k-point one, so R = 0 there).
"""

import math

import numpy as np
import pytest

from kothe.orlicz import ModularFamily, luxemburg_norm, mtilde_function
from kothe.seqspec import PowerTail, SequenceSpec, Truncation
from kothe.spaces import (Cesaro, ConcaveWeight, LorentzSp, Lp,
                          MarcinkiewiczSp, PowerWeight, Symmetrized, Tandori,
                          Weighted, norm)

BIG = 200_000
T = Truncation(512, "certified")


def p_remainder(c, beta, p):
    """Norm remainder of sum_{k>BIG} (c k^-beta)^p via the integral test
    and the subadditivity (S + T)^(1/p) <= S^(1/p) + T^(1/p)."""
    mass = abs(c) ** p * (BIG ** (1.0 - beta * p) / (beta * p - 1.0)
                          + BIG ** (-beta * p))
    return mass ** (1.0 / p)


def brute_and_remainder(space, x: SequenceSpec):
    v = np.abs(x.materialize(BIG))
    tail = x.tail
    assert isinstance(tail, PowerTail) and tail.shift == 0
    c, al = abs(tail.c), tail.alpha
    if isinstance(space, Lp):
        if math.isinf(space.p):
            return float(v.max()), 0.0
        b = float(np.sum(v ** space.p) ** (1.0 / space.p))
        return b, p_remainder(c, al, space.p)
    if isinstance(space, Weighted):
        w = space.weight.values(BIG)
        inner = Lp(space.base.p)
        b = float(np.sum((v * w) ** inner.p) ** (1.0 / inner.p))
        return b, p_remainder(c * space.weight.c, al - space.weight.expo,
                              inner.p)
    if isinstance(space, LorentzSp):
        s = np.sort(v)[::-1]
        b = float(np.dot(s, space.phi.deltas(BIG)))
        a = space.phi.alpha
        # Delta phi(n) <= a n^(a-1); rearranged tail values <= c n^-al
        return b, c * a * (BIG ** (a - al) / (al - a)
                           + BIG ** (a - al - 1.0))
    if isinstance(space, MarcinkiewiczSp):
        s = np.sort(v)[::-1]
        csum = np.cumsum(s)
        b = float(np.max(space.phi.values(BIG)
                         / np.arange(1, BIG + 1) * csum))
        return b, 0.0  # a longer horizon only raises the supremum
    if isinstance(space, Symmetrized):
        s = np.sort(v)[::-1] * space.weight.values(BIG)
        b = float(np.sum(s ** space.base.p) ** (1.0 / space.base.p))
        return b, p_remainder(c * space.weight.c,
                              al - space.weight.expo, space.base.p)
    if isinstance(space, Cesaro):
        h = np.cumsum(v) / np.arange(1, BIG + 1)
        p = space.base.p
        if math.isinf(p):
            return float(h.max()), 0.0
        b = float(np.sum(h ** p) ** (1.0 / p))
        total = float(np.sum(v)) + c * (BIG ** (1 - al) / (al - 1.0)
                                        if al > 1 else math.inf)
        return b, p_remainder(total, 1.0, p)
    if isinstance(space, Tandori):
        m = np.maximum.accumulate(v[::-1])[::-1]
        b = float(np.sum(m ** space.base.p) ** (1.0 / space.base.p))
        return b, p_remainder(c, al, space.base.p)
    raise AssertionError(f"no brute force for {type(space).__name__}")


CASES = [
    (Lp(2), PowerTail(1.0, 0.75)),
    (Lp(1.5), PowerTail(0.5, 1.0)),
    (Lp(math.inf), PowerTail(2.0, 0.5)),
    (Weighted(Lp(2), PowerWeight(1.0, -0.25)), PowerTail(1.0, 0.5)),
    (LorentzSp(ConcaveWeight.power(0.5)), PowerTail(1.0, 1.0)),
    (LorentzSp(ConcaveWeight.power(0.25)), PowerTail(2.0, 0.75)),
    (MarcinkiewiczSp(ConcaveWeight.power(0.5)), PowerTail(1.0, 0.5)),
    (MarcinkiewiczSp(ConcaveWeight.power(0.25)), PowerTail(1.0, 0.75)),
    (Symmetrized(Lp(2), PowerWeight(1.0, -0.5)), PowerTail(1.0, 0.6)),
    (Cesaro(Lp(2)), PowerTail(1.0, 1.5)),
    (Cesaro(Lp(math.inf)), PowerTail(1.0, 0.5)),
    (Tandori(Lp(2)), PowerTail(1.0, 0.75)),
]


@pytest.mark.parametrize("space,tail", CASES,
                         ids=[s.short() for s, _ in CASES])
def test_bracket_contains_brute_force(space, tail):
    rng = np.random.default_rng(abs(hash((type(space).__name__, tail.alpha)))
                                % (2 ** 31))
    x = SequenceSpec(tuple(rng.random(5) * 2.0), tail)
    b = norm(space, x, T)
    assert b.certified
    ref, rem = brute_and_remainder(space, x)
    assert ref <= b.upper * (1 + 1e-9), (ref, b)
    assert b.lower <= ref + rem + 1e-9 * ref, (ref, rem, b)


@pytest.mark.parametrize("space,tail", CASES,
                         ids=[s.short() for s, _ in CASES])
def test_bracket_tightens_with_horizon(space, tail):
    x = SequenceSpec((1.5, 0.5), tail)
    coarse = norm(space, x, Truncation(128, "certified"))
    fine = norm(space, x, Truncation(4096, "certified"))
    assert fine.width <= coarse.width * (1 + 1e-9)
    # the two brackets describe the same number
    assert max(coarse.lower, fine.lower) <= min(coarse.upper, fine.upper) \
        * (1 + 1e-12)


def test_luxemburg_bracket_contains_brute_force():
    x = SequenceSpec((1.0, 0.7), PowerTail(1.0, 0.75))
    fam = ModularFamily(orlicz=mtilde_function())
    b = luxemburg_norm(fam, x, T)
    v = np.abs(x.materialize(BIG))

    def modular(rho):
        return float(np.sum(mtilde_function().eval_many(v / rho)))

    lo, hi = 1e-6, 1e6
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if modular(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    ref = hi  # truncated-modular root: a lower bound of the true norm
    # remainder: the modular sits below the quadratic envelope, so the mass
    # past the horizon at scale rho is at most zeta-tail(1.5) / rho^2
    rem_mass = (BIG ** -0.5 * 2.0 + BIG ** -1.5) / ref ** 2
    assert b.lower <= ref * (1.0 + rem_mass) + 1e-9
    assert ref <= b.upper * (1 + 1e-9)

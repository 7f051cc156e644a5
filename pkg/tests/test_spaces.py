import math

import numpy as np
import pytest

from kothe.errors import DescriptorError, UnknownDual
from kothe.seqspec import (ConstPlusPowerTail, PowerTail, SequenceSpec,
                           Truncation)
from kothe.spaces import (C0, Cesaro, ConcaveWeight, LInfty, LorentzSp, Lp,
                          MarcinkiewiczSp, PowerWeight, Symmetrized, Tandori,
                          Weighted, fundamental_function,
                          is_order_continuous, kothe_dual, norm,
                          oc_membership, point_norm)

TZ = Truncation(64, "zero-exact")
TC = Truncation(2048, "certified")
SQRT = ConcaveWeight.power(0.5)


def test_norm_examples():
    assert norm(Lp(2), SequenceSpec.of(3, 4), TZ).mid == pytest.approx(5.0)
    assert norm(LorentzSp(ConcaveWeight.power(1.0)), SequenceSpec.of(1, 2),
                TZ).mid == pytest.approx(3.0)
    assert norm(MarcinkiewiczSp(ConcaveWeight.power(1.0)),
                SequenceSpec.of(1, 2), TZ).mid == pytest.approx(3.0)
    assert norm(Cesaro(LInfty()), SequenceSpec.of(1), TC).mid == \
        pytest.approx(1.0)


def test_lp_tail_bracket_contains_truth():
    x = SequenceSpec((), PowerTail(1.0, 0.75))
    b = norm(Lp(2), x, TC)
    truth = math.sqrt(2.6123753486854883)  # zeta(3/2)
    assert b.lower <= truth <= b.upper
    assert b.rel_width() < 1e-4


def test_tandori_and_weighted():
    x = SequenceSpec.of(1, 3, 2)
    assert norm(Tandori(LInfty()), x, TZ).mid == pytest.approx(3.0)
    w = Weighted(Lp(1), PowerWeight(1.0, 1.0))
    assert norm(w, SequenceSpec.of(1, 1), TZ).mid == pytest.approx(3.0)


def test_kothe_dual_table():
    assert kothe_dual(Lp(2)) == Lp(2)
    assert kothe_dual(Lp(1)) == LInfty()
    assert kothe_dual(LInfty()) == Lp(1)
    assert kothe_dual(C0()) == Lp(1)
    assert kothe_dual(LorentzSp(SQRT)) == MarcinkiewiczSp(SQRT)
    assert kothe_dual(Cesaro(Lp(2))) == Tandori(Lp(2))
    with pytest.raises(UnknownDual):
        kothe_dual(Symmetrized(Lp(2), PowerWeight(1.0, -0.5)))


def test_fundamental_function():
    assert fundamental_function(Lp(2), 4) == pytest.approx(2.0)
    assert fundamental_function(LInfty(), 9) == pytest.approx(1.0)
    for n in range(1, 33):
        prod = fundamental_function(Lp(3), n) * \
            fundamental_function(kothe_dual(Lp(3)), n)
        assert prod == pytest.approx(n, rel=1e-12)


def test_order_continuity_rules():
    assert is_order_continuous(Lp(4)).status == "yes"
    assert is_order_continuous(LInfty()).status == "no"
    assert is_order_continuous(C0()).status == "yes"
    assert is_order_continuous(MarcinkiewiczSp(SQRT)).status == "no"
    assert is_order_continuous(MarcinkiewiczSp(ConcaveWeight.power(1.0))
                               ).status == "yes"  # the l1 regime
    assert is_order_continuous(MarcinkiewiczSp(ConcaveWeight.power(0.0))
                               ).status == "no"  # the sup-norm regime
    assert is_order_continuous(LorentzSp(SQRT)).status == "yes"
    assert is_order_continuous(LorentzSp(ConcaveWeight.power(0.0))
                               ).status == "no"
    assert is_order_continuous(Tandori(Lp(2))).status == "yes"
    assert is_order_continuous(Tandori(LInfty())).status == "no"


def test_oc_membership_examples():
    r = oc_membership(LInfty(), SequenceSpec((), PowerTail(1.0, 1.0)))
    assert r.verdict == "member"
    r = oc_membership(LInfty(),
                      SequenceSpec((), ConstPlusPowerTail(1.0, 0.0, 1.0)))
    assert r.verdict == "non_member"
    r = oc_membership(MarcinkiewiczSp(SQRT),
                      SequenceSpec((), PowerTail(1.0, 0.5)), [1, 4, 16, 64])
    assert r.verdict == "non_member"
    assert r.limit.mid == pytest.approx(2.0)
    ups = [b.upper for _, b in r.tail_norms]
    assert all(b <= a * (1 + 1e-12) for a, b in zip(ups, ups[1:]))


def test_lorentz_marcinkiewicz_sandwich():
    # at matched fundamental function the Marcinkiewicz norm sits below the
    # l_p norm; the Lorentz norm dominates it up to the first-increment
    # offset that the forward-difference weight convention introduces
    # ("phi(n+1) - phi(n)" makes ||e_1|| = phi(2) - phi(1) < phi(1), so the
    # plain sandwich needs the sup-norm correction term)
    rng = np.random.default_rng(3)
    p = 2.0
    phi = ConcaveWeight.power(1.0 / p)
    for _ in range(40):
        x = rng.random(int(rng.integers(1, 24)))
        lo = point_norm(MarcinkiewiczSp(phi), x)
        mid = point_norm(Lp(p), x)
        hi = point_norm(LorentzSp(phi), x)
        assert lo <= mid * (1 + 1e-10)
        assert mid <= hi + float(np.max(x)) + 1e-10


def test_marcinkiewicz_vs_symmetrized_sup():
    # m_phi against the symmetrized weighted sup norm: equivalent with a
    # constant at most p/(p-1) for phi = t^(1/p)
    rng = np.random.default_rng(4)
    p = 2.0
    phi = ConcaveWeight.power(1.0 / p)
    sym = Symmetrized(LInfty(), PowerWeight(1.0, 1.0 / p))
    worst = 0.0
    for _ in range(60):
        x = rng.random(int(rng.integers(1, 33)))
        a = point_norm(sym, x)
        b = point_norm(MarcinkiewiczSp(phi), x)
        assert a <= b * (1 + 1e-12)
        worst = max(worst, b / a)
    assert worst <= p / (p - 1.0) + 0.05


def test_concave_weight_validation():
    with pytest.raises(DescriptorError):
        ConcaveWeight(fn=lambda t: -t)
    with pytest.raises(DescriptorError):
        ConcaveWeight(fn=lambda t: t * t)  # convex increments
    ConcaveWeight(fn=lambda t: math.sqrt(t))  # fine


def test_weighted_weight_positive():
    with pytest.raises(DescriptorError):
        PowerWeight(-1.0, 0.5)


def test_norm_monotone_in_modulus():
    rng = np.random.default_rng(5)
    spaces = [Lp(1.5), LorentzSp(SQRT), MarcinkiewiczSp(SQRT),
              Cesaro(Lp(2)), Tandori(Lp(2))]
    for sp in spaces:
        for _ in range(25):
            x = rng.random(12)
            y = x * rng.random(12)
            assert point_norm(sp, y) <= point_norm(sp, x) * (1 + 1e-12) + 1e-12

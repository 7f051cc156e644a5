import math

import numpy as np
import pytest

from kothe.errors import NotInSpace
from kothe.essnorm import (approximation_numbers, cesaro_compactness,
                           cesaro_multiplier_space, distance_to_oc_part,
                           essential_norm, essential_norm_self,
                           fourier_multiplier_essnorm)
from kothe.seqspec import (AlternatingTail, ConstPlusPowerTail, PowerTail,
                           PowLogTail, SequenceSpec)
from kothe.spaces import LInfty, Lp, PowerWeight, Tandori, Weighted


def test_essential_norm_examples():
    lam = SequenceSpec((), ConstPlusPowerTail(1.0, 1.0, 1.0))  # 1 + 1/n
    rep = essential_norm(Lp(2), Lp(2), lam)
    assert rep.limit.mid == pytest.approx(1.0)
    assert rep.verdict == "non_compact"

    rep = essential_norm(Lp(4), Lp(2), SequenceSpec.of(1, 1, 0, 0))
    assert rep.limit.mid == 0.0 and rep.verdict == "compact"

    rep = essential_norm(Lp(4), Lp(2), SequenceSpec((), PowerTail(1.0, 0.5)))
    assert rep.verdict == "compact"
    ups = [b.upper for _, b in rep.tail_norms]
    assert all(b <= a * (1 + 1e-12) for a, b in zip(ups, ups[1:]))


def test_essential_norm_not_bounded():
    with pytest.raises(NotInSpace):
        essential_norm(Lp(4), Lp(2), SequenceSpec((), PowerTail(1.0, 0.25)))


def test_essential_norm_below_multiplier_norm():
    lam = SequenceSpec((2.0, 1.5), ConstPlusPowerTail(1.0, 1.0, 1.0))
    rep = essential_norm(Lp(2), Lp(2), lam)
    t1 = rep.tail_norms[0][1]
    assert rep.limit.upper <= t1.upper + 1e-9


def test_essential_norm_self_examples():
    rep = essential_norm_self(Lp(2), SequenceSpec((), AlternatingTail(0.0, 1.0)))
    assert rep.limit.mid == pytest.approx(1.0)
    rep = essential_norm_self(Lp(2),
                              SequenceSpec((), ConstPlusPowerTail(2.0, -1.0, 1.0)))
    assert rep.limit.mid == pytest.approx(2.0)
    rep = essential_norm_self(Lp(2), SequenceSpec((), PowerTail(1.0, 0.5)))
    assert rep.verdict == "compact"


def test_self_vs_pair_consistency():
    rng = np.random.default_rng(21)
    for _ in range(50):
        lam = SequenceSpec(tuple(rng.random(int(rng.integers(1, 8)))),
                           PowerTail(float(rng.random()),
                                     float(rng.uniform(0.3, 2.0))))
        a = essential_norm_self(Lp(2), lam)
        b = essential_norm(Lp(2), Lp(2), lam)
        assert a.verdict == b.verdict
        assert abs(a.limit.mid - b.limit.mid) <= 1e-9


def test_distance_to_oc_part():
    ones = SequenceSpec((), ConstPlusPowerTail(1.0, 0.0, 1.0))
    rep = distance_to_oc_part(LInfty(), ones)
    assert rep.limit.mid == pytest.approx(1.0)
    rep = distance_to_oc_part(LInfty(),
                              SequenceSpec((), ConstPlusPowerTail(1.0, 1.0, 1.0)))
    assert rep.limit.mid == pytest.approx(1.0)
    rep = distance_to_oc_part(LInfty(), SequenceSpec((), PowerTail(3.0, 0.5)))
    assert rep.limit.mid == 0.0


def test_distance_matches_essential_norm():
    lam = SequenceSpec((3.0,), ConstPlusPowerTail(0.5, 1.0, 1.0))
    pair = essential_norm(Lp(3), Lp(3), lam)
    dist = distance_to_oc_part(LInfty(), lam)
    assert abs(pair.limit.mid - dist.limit.mid) <= 1e-9


def test_approximation_numbers_example():
    vals = dict(approximation_numbers(SequenceSpec.of(3, 2, 1), 4.0, 2.0,
                                      [1, 2, 3, 4]))
    assert vals[1] == pytest.approx(98.0 ** 0.25)
    assert vals[2] == pytest.approx(17.0 ** 0.25)
    assert vals[3] == pytest.approx(1.0)
    assert vals[4] == 0.0


def test_approximation_numbers_divergent_flag():
    lam = SequenceSpec((), ConstPlusPowerTail(1.0, 0.0, 1.0))
    vals = approximation_numbers(lam, 4.0, 2.0, [1, 2])
    assert all(math.isinf(v) for _, v in vals)


def test_approximation_numbers_meet_essential_norm():
    lam = SequenceSpec((2.0, 1.0), PowerTail(1.0, 1.0))
    ns = [1, 4, 16, 64, 256, 1024]
    a = dict(approximation_numbers(lam, 4.0, 2.0, ns))
    rep = essential_norm(Lp(4), Lp(2), lam, n_grid=ns)
    assert rep.limit.lower - 1e-9 <= a[1024] <= rep.tail_norms[-1][1].upper + 1e-9


def test_cesaro_multiplier_space():
    down = cesaro_multiplier_space(Lp(4), Lp(2))
    assert down.descriptor == Tandori(Lp(4))
    up = cesaro_multiplier_space(Lp(2), Lp(4))
    assert up.descriptor == Weighted(LInfty(), PowerWeight(1.0, -0.25))
    same = cesaro_multiplier_space(Lp(3), Lp(3))
    assert same.descriptor == LInfty()


def test_cesaro_compactness():
    ok = cesaro_compactness(Lp(2), Lp(4), SequenceSpec((), PowLogTail(1.0, 0.25)))
    assert ok.verdict == "compact"
    bad = cesaro_compactness(Lp(2), Lp(4), SequenceSpec((), PowerTail(1.0, -0.25)))
    assert bad.verdict == "non_compact"
    down = cesaro_compactness(Lp(4), Lp(2), SequenceSpec((), PowerTail(1.0, 0.5)))
    assert down.verdict == "compact"


def test_fourier_multiplier():
    rep = fourier_multiplier_essnorm(Lp(1), SequenceSpec((), PowerTail(1.0, 1.0)))
    assert rep.verdict == "compact"
    ones = SequenceSpec((), ConstPlusPowerTail(1.0, 0.0, 1.0))
    rep = fourier_multiplier_essnorm(Lp(4), ones)
    assert rep.verdict == "non_compact"
    assert rep.limit.mid == pytest.approx(1.0)
    rep = fourier_multiplier_essnorm(Lp(4), SequenceSpec.of(5.0, 2.0))
    assert rep.verdict == "compact"

import numpy as np
import pytest

from kothe.errors import OutsideSupport
from kothe.rademacher import (Integrand, MeasurePartition, glued_rademacher,
                              integrate_against_rademacher, lemma_r_demo,
                              rademacher, rademacher_inner_product)

UNIT = MeasurePartition(((0.0, 1.0),))


def test_sign_examples():
    assert rademacher(1, 0.25) == 1
    assert rademacher(1, 0.75) == -1
    assert rademacher(2, 3.0 / 8.0) == -1
    assert rademacher(1, 0.5) == 0  # breakpoint


def test_glued_reduces_to_standard():
    for t in (0.1, 0.3, 0.8):
        for n in (1, 2, 5):
            assert glued_rademacher(UNIT, n, t) == rademacher(n, t)


def test_glued_shift():
    part = MeasurePartition(((0.0, 1.0), (1.0, 2.0)))
    assert glued_rademacher(part, 1, 1.25) == 1
    with pytest.raises(OutsideSupport):
        glued_rademacher(part, 1, 2.5)


def test_glued_balance_monte_carlo():
    part = MeasurePartition(((0.0, 1.0), (1.0, 2.0)))
    rng = np.random.default_rng(0)
    pts = rng.uniform(1e-9, 2.0, 4096)
    mean = np.mean([glued_rademacher(part, 3, float(p)) for p in pts])
    assert -0.05 <= mean <= 0.05


def test_zero_mean_exact():
    for n in range(1, 13):
        val = integrate_against_rademacher(Integrand("poly", (1.0,)), n,
                                           (0.0, 1.0))
        assert val == 0.0


def test_linear_integrand_closed_form():
    vals, _ = lemma_r_demo(Integrand("poly", (0.0, 1.0)), UNIT, 12)
    for n, v in vals:
        assert abs(v + 2.0 ** -(n + 1)) <= 1e-14


def test_indicator_exact_zero():
    vals, tail = lemma_r_demo(Integrand("indicator", window=(0.0, 1.0)),
                              UNIT, 10)
    assert all(v == 0.0 for _, v in vals)
    assert tail == 0.0


def test_two_piece_superposition():
    part = MeasurePartition(((0.0, 1.0), (1.0, 2.0)))
    vals, tail = lemma_r_demo(Integrand("poly", (0.0, 1.0)), part, 12)
    # integral over (1, 2] of t r_n(t - 1) = integral of (1 + s) r_n(s)
    # = -2^-(n+1); together with the unit piece the total is -2^-n
    for n, v in vals:
        assert v == pytest.approx(-(2.0 ** -n), abs=1e-14)
    assert tail == pytest.approx(2.0 ** -9, abs=1e-14)


def test_geometric_decay_invariant():
    vals, _ = lemma_r_demo(Integrand("poly", (0.0, 1.0)), UNIT, 12)
    seq = [abs(v) for _, v in vals]
    assert all(b <= a / 2 + 1e-12 for a, b in zip(seq, seq[1:]))


def test_orthonormality():
    for n in range(1, 13):
        for m in range(1, 13):
            want = 1.0 if n == m else 0.0
            assert abs(rademacher_inner_product(n, m) - want) <= 1e-12

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kothe.errors import DivergentTail
from kothe.seqops import (copson, decreasing_majorant,
                          decreasing_rearrangement, dilate2, hardy,
                          maximal_function, pointwise_product, tail_restrict)
from kothe.seqspec import PowerTail, SequenceSpec, Truncation

T = Truncation(256, "certified")
TZ = Truncation(64, "zero-exact")


def seq(*vals):
    return SequenceSpec.of(*vals)


def test_rearrangement_examples():
    assert decreasing_rearrangement(seq(3, 1, 2), TZ).prefix == (3.0, 2.0, 1.0)
    assert decreasing_rearrangement(seq(0, 0, 0), TZ).prefix == (0.0, 0.0, 0.0)
    assert decreasing_rearrangement(seq(1, 1, 2), TZ).prefix == (2.0, 1.0, 1.0)


def test_rearrangement_with_power_tail():
    x = SequenceSpec((0.5, 0.1), PowerTail(1.0, 1.0))  # tail 1/3, 1/4, ...
    xs = decreasing_rearrangement(x, T)
    full = xs.materialize(40)
    brute = np.sort(np.abs(x.materialize(4000)))[::-1][:40]
    assert np.allclose(full, brute, rtol=0, atol=1e-15)


def test_majorant_examples():
    assert decreasing_majorant(seq(1, 3, 2), TZ).prefix == (3.0, 3.0, 2.0)
    assert decreasing_majorant(seq(3, 2, 1), TZ).prefix == (3.0, 2.0, 1.0)


def test_majorant_restriction_commutes_on_tail():
    x = seq(5, 1, 4, 2)
    a = decreasing_majorant(tail_restrict(x, 3), TZ)
    b = tail_restrict(decreasing_majorant(x, TZ), 3)
    assert a.prefix[2:] == b.prefix[2:] == (4.0, 2.0)


def test_hardy_examples():
    assert hardy(seq(1, 1, 1), TZ).prefix == (1.0, 1.0, 1.0)
    got = hardy(seq(1, 0, 0), TZ).prefix
    assert got == pytest.approx((1.0, 0.5, 1.0 / 3.0))
    assert hardy(seq(1, 2, 3), TZ).prefix == (1.0, 1.5, 2.0)


def test_hardy_tail_is_mass_over_n():
    h = hardy(seq(1, 2, 3), TZ)
    assert h.value(6) == pytest.approx(1.0)
    assert h.value(12) == pytest.approx(0.5)


def test_copson_examples():
    assert copson(seq(1, 0, 0), TZ).prefix == (1.0, 0.0, 0.0)
    assert copson(seq(1, 1, 0), TZ).prefix == pytest.approx((1.5, 0.5, 0.0))


def test_copson_divergent_tail():
    with pytest.raises(DivergentTail):
        copson(SequenceSpec((), PowerTail(1.0, 0.0)), T)


def test_adjoint_identity_example():
    x, y = seq(1, 2), seq(3, 4)
    hx = hardy(x, TZ).materialize(2)
    cy = copson(y, TZ).materialize(2)
    assert float(hx @ y.materialize(2)) == pytest.approx(9.0)
    assert float(x.materialize(2) @ cy) == pytest.approx(9.0)


@given(st.lists(st.floats(-10, 10), min_size=1, max_size=16),
       st.lists(st.floats(-10, 10), min_size=1, max_size=16),
       st.integers(4, 32))
@settings(max_examples=60, deadline=None)
def test_adjoint_identity_random(xs, ys, n):
    x, y = SequenceSpec.of(*xs), SequenceSpec.of(*ys)
    n = max(n, x.m, y.m)
    hx = hardy(x, TZ).materialize(n)
    cy = copson(y, TZ).materialize(n)
    lhs = float(hx @ y.materialize(n))
    rhs = float(x.materialize(n) @ cy)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_maximal_function_examples():
    assert maximal_function(seq(1, 0, 0), TZ).prefix == pytest.approx(
        (1.0, 0.5, 1.0 / 3.0))
    assert maximal_function(seq(1, 1, 1), TZ).prefix == (1.0, 1.0, 1.0)
    assert maximal_function(seq(0, 2, 0), TZ).prefix == pytest.approx(
        (2.0, 1.0, 2.0 / 3.0))


def test_maximal_dominates_rearrangement():
    rng = np.random.default_rng(1)
    for _ in range(40):
        x = SequenceSpec(tuple(rng.random(8)))
        mf = maximal_function(x, TZ).materialize(8)
        xr = decreasing_rearrangement(x, TZ).materialize(8)
        assert np.all(mf >= xr - 1e-15)
        assert np.all(np.diff(mf) <= 1e-15)


def test_dilate2():
    assert dilate2(seq(1, 2, 3), TZ).prefix == (1.0, 1.0, 2.0, 2.0, 3.0, 3.0)
    assert dilate2(seq(0, 0), TZ).prefix == (0.0, 0.0, 0.0, 0.0)
    d = dilate2(SequenceSpec((3.0, 2.0), PowerTail(1.0, 1.0)), T)
    vals = d.materialize(10)
    assert np.all(np.diff(vals) <= 1e-15)


def test_products_and_restriction():
    assert pointwise_product(seq(1, 2), seq(3, 4)).prefix == (3.0, 8.0)
    assert pointwise_product(seq(1, 2), SequenceSpec(())).prefix == (0.0, 0.0)
    assert tail_restrict(seq(5, 6, 7), 2).prefix == (0.0, 6.0, 7.0)


@given(st.lists(st.floats(-100, 100), min_size=1, max_size=64),
       st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_rearrangement_idempotent_and_permutation_invariant(xs, rnd):
    x = SequenceSpec.of(*xs)
    perm = list(range(len(xs)))
    rnd.shuffle(perm)
    shuffled = SequenceSpec.of(*[xs[i] for i in perm])
    a = decreasing_rearrangement(x, TZ)
    b = decreasing_rearrangement(shuffled, TZ)
    assert a.prefix == b.prefix
    assert decreasing_rearrangement(a, TZ).prefix == a.prefix


@given(st.lists(st.floats(-50, 50), min_size=1, max_size=32))
@settings(max_examples=80, deadline=None)
def test_majorant_idempotent_and_dominating(xs):
    x = SequenceSpec.of(*xs)
    m = decreasing_majorant(x, TZ)
    assert np.all(np.asarray(m.prefix) >= np.abs(xs) - 1e-15)
    assert decreasing_majorant(m, TZ).prefix == m.prefix
    assert all(a >= b for a, b in zip(m.prefix, m.prefix[1:]))


def test_unbounded_and_nonmonotone_tail_errors():
    from kothe.errors import NonMonotoneTail, UnboundedTail
    from kothe.seqspec import AlternatingTail

    growing = SequenceSpec((), PowerTail(1.0, -0.5))
    with pytest.raises(UnboundedTail):
        decreasing_majorant(growing, T)
    wiggly = SequenceSpec((1.0,), AlternatingTail(1.0, 0.5))
    with pytest.raises(NonMonotoneTail):
        decreasing_rearrangement(wiggly, T)

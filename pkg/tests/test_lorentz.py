from kothe.lorentz import (dilation_indices, multiplier_from_marcinkiewicz,
                           multiplier_into_lorentz, prop42_check)
from kothe.seqspec import PowerTail, SequenceSpec
from kothe.spaces import (ConcaveWeight, LInfty, Lp, PowerWeight, Symmetrized)

SQRT = ConcaveWeight.power(0.5)


def test_dilation_indices_powers():
    for alpha in (0.25, 1.0 / 3.0, 0.5, 0.75):
        idx = dilation_indices(ConcaveWeight.power(alpha))
        assert idx.p_lower.contains(1.0 / alpha)
        assert idx.q_upper.contains(1.0 / alpha)
        assert idx.p_lower.width <= 0.05 and idx.q_upper.width <= 0.05
    idx = dilation_indices(ConcaveWeight.power(1.0))
    assert idx.p_lower.contains(1.0)


def test_dilation_indices_custom_rule_brackets_honestly():
    import math
    idx = dilation_indices(ConcaveWeight(fn=lambda t: math.sqrt(t)))
    assert not idx.p_lower.certified
    assert idx.p_lower.lower <= 2.0 <= idx.p_lower.upper


def test_multiplier_from_marcinkiewicz():
    got = multiplier_from_marcinkiewicz(SQRT, Lp(2))
    assert got == Symmetrized(Lp(2), PowerWeight(1.0, -0.5))
    assert multiplier_from_marcinkiewicz(SQRT, Lp(4)) == LInfty()
    assert multiplier_from_marcinkiewicz(ConcaveWeight.power(0.0),
                                         Lp(3)) == Lp(3)


def test_multiplier_into_lorentz():
    got = multiplier_into_lorentz(Lp(2), SQRT)
    assert got == Symmetrized(Lp(2), PowerWeight(1.0, -0.5))
    assert multiplier_into_lorentz(Lp(1), ConcaveWeight.power(1.0)) == LInfty()


def test_prop42_examples():
    r = prop42_check("iv", {"phi": ConcaveWeight.power(0.25),
                            "psi": ConcaveWeight.power(0.75)},
                     SequenceSpec((), PowerTail(1.0, 1.0)))
    assert r.verdict == "compact"
    r = prop42_check("v", {"psi": ConcaveWeight.power(0.5),
                           "phi": ConcaveWeight.power(0.75)},
                     SequenceSpec((), PowerTail(1.0, 0.25)))
    assert r.verdict == "non_compact"
    r = prop42_check("i", {"x": Lp(2), "phi": SQRT},
                     SequenceSpec((), PowerTail(1.0, 0.5)))
    assert r.verdict == "compact"


def test_prop42_degenerate_branch():
    # phi = sqrt(t) with target l_4: the reciprocal weight lies in the
    # target, so compactness reduces to c_0 membership of the symbol
    r = prop42_check("ii", {"phi": SQRT, "y": Lp(4)},
                     SequenceSpec((), PowerTail(1.0, 0.1)))
    assert r.branch.startswith("degenerate")
    assert r.verdict == "compact"


def test_prop42_antitone_in_symbol():
    # shrinking the symbol never flips a compact verdict to non-compact
    params = {"phi": ConcaveWeight.power(0.25),
              "psi": ConcaveWeight.power(0.75)}
    big = SequenceSpec((), PowerTail(1.0, 1.0))
    small = SequenceSpec((), PowerTail(0.25, 1.5))
    assert prop42_check("iv", params, big).verdict == "compact"
    assert prop42_check("iv", params, small).verdict != "non_compact"


def test_index_ordering():
    for alpha in (0.25, 0.5, 0.9):
        idx = dilation_indices(ConcaveWeight.power(alpha))
        assert 1.0 <= idx.p_lower.lower
        assert idx.p_lower.upper <= idx.q_upper.lower * (1 + 1e-9)

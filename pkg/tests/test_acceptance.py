"""Acceptance suite: one test per verification criterion.

Runs the same named checks as ``kothe verify-paper`` and prints the
pass/fail line for each.  The halving clause of the factorization-ratio
criterion is asserted exactly as pinned; the computed decay of the ratio
at the sample family t = 1/(n!)^2 is 2 sqrt(n - 1 + n^-2) / n (verified
against the brute-force conjugate), which gives R(7)/R(2) ~ 0.627, so that
single clause fails by direct evaluation while the surrounding claims
(strict decrease, failure verdicts) hold.  See the test docstring below.
"""

from kothe import verification as V

_RESULTS = {}


def _run(name, fn, seed=0):
    res = _RESULTS.get(name)
    if res is None:
        res = fn(seed)
        _RESULTS[name] = res
        print("\n" + res.line())
    return res


def _assert_sub(res, label):
    for sub_label, ok, msg in res.subchecks:
        if sub_label == label:
            assert ok, f"{res.name} / {sub_label}: {msg}"
            return
    raise AssertionError(f"{res.name}: no subcheck named {label!r}")


def test_ac1_holder_multiplier_oracle():
    res = _run("AC-1", V.ac1_holder_multiplier_oracle)
    assert res.passed, res.detail


def test_ac2_self_essential_norm():
    res = _run("AC-2", V.ac2_self_essential_norm)
    assert res.passed, res.detail


def test_ac3_pitt_predicate():
    res = _run("AC-3", V.ac3_pitt_predicate)
    assert res.passed, res.detail


def test_ac4_conjugate_closed_form():
    res = _run("AC-4", V.ac4_conjugate_closed_form)
    assert res.passed, res.detail


def test_ac5_ratio_strictly_decreasing():
    res = _run("AC-5", V.ac5_factorization_failure)
    _assert_sub(res, "ratio strictly decreasing")


def test_ac5_ratio_halves_by_n7():
    """Pinned as stated: R at t = 1/(7!)^2 at most half of R at t = 1/(2!)^2.

    Direct evaluation gives R(n) = 2 sqrt(n - 1 + n^-2)/n along this
    family (the brute-force conjugate agrees to 1e-12), so the true drop
    factor is sqrt((6 + 1/49) / (1 + 1/4)) * 2/7 / (2/2) ~ 0.627, not 0.5.
    The assertion is kept faithful rather than loosened; the failure is a
    recorded discrepancy, not a regression.
    """
    res = _run("AC-5", V.ac5_factorization_failure)
    _assert_sub(res, "ratio halves by n = 7")


def test_ac5_counterexample_pair_fails():
    res = _run("AC-5", V.ac5_factorization_failure)
    _assert_sub(res, "counterexample pair fails")


def test_ac5_power_pair_holds():
    res = _run("AC-5", V.ac5_factorization_failure)
    _assert_sub(res, "power pair holds")


def test_ac6_nakano_compactness():
    res = _run("AC-6", V.ac6_nakano_compactness)
    assert res.passed, res.detail


def test_ac7_cesaro_remark():
    res = _run("AC-7", V.ac7_cesaro_remark)
    assert res.passed, res.detail


def test_ac8_rademacher_exactness():
    res = _run("AC-8", V.ac8_rademacher_exactness)
    assert res.passed, res.detail


def test_ac9_marcinkiewicz_bracket():
    res = _run("AC-9", V.ac9_marcinkiewicz_bracket)
    assert res.passed, res.detail


def test_ac10_property_batteries():
    res = _run("AC-10", V.ac10_property_batteries)
    assert res.passed, res.detail


def test_total_runtime_budget():
    # every criterion has run by now (cached); the whole suite targets
    # less than 60 s single-threaded
    total = sum(r.elapsed for r in _RESULTS.values())
    assert total < 60.0, f"suite took {total:.1f}s"

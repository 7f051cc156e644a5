"""Parity between the compiled kernels and the NumPy fallback."""

import numpy as np
import pytest

from kothe import _kernels as K
from kothe._kernels import pykernels as P

HAVE_C = K.IMPL == "c"

pytestmark = pytest.mark.skipif(not HAVE_C,
                                reason="compiled extension not built")


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_orlicz_eval_parity():
    ts = np.geomspace(1e-18, 10.0, 7531)
    for kind, param in ((K.KIND_POWER, 3.5), (K.KIND_MTILDE, 0.0),
                        (K.KIND_MCONJ, 0.0)):
        a = np.asarray(K.orlicz_eval(kind, param, ts))
        b = P.orlicz_eval(kind, param, ts)
        assert np.allclose(a, b, rtol=1e-13, atol=0.0)


def test_mtilde_floor_raises_both():
    bad = np.array([1e-22])
    with pytest.raises(ValueError):
        K.orlicz_eval(K.KIND_MTILDE, 0.0, bad)
    with pytest.raises(ValueError):
        P.orlicz_eval(P.KIND_MTILDE, 0.0, bad)


def test_modular_parity():
    rng = np.random.default_rng(0)
    xs = rng.random(257)
    for rho in (0.5, 1.0, 3.0):
        assert _rel(K.modular(K.KIND_MTILDE, 0.0, xs, rho),
                    P.modular(P.KIND_MTILDE, 0.0, xs, rho)) < 1e-13
        ps = rng.uniform(1.0, 5.0, xs.size)
        assert _rel(K.nakano_modular(xs, rho, ps),
                    P.nakano_modular(xs, rho, ps)) < 1e-13


def test_norm_kernels_parity():
    rng = np.random.default_rng(1)
    xs = np.sort(rng.random(100))[::-1].copy()
    phi = np.sqrt(np.arange(1.0, 101.0))
    dphi = np.diff(np.sqrt(np.arange(1.0, 102.0)))
    assert _rel(K.marcinkiewicz_sup(xs, phi),
                P.marcinkiewicz_sup(xs, phi)) < 1e-13
    assert _rel(K.lorentz_sum(xs, dphi), P.lorentz_sum(xs, dphi)) < 1e-13
    assert _rel(K.weighted_lp(xs, phi, 2.5),
                P.weighted_lp(xs, phi, 2.5)) < 1e-13
    assert _rel(K.weighted_lp(xs, phi, np.inf),
                P.weighted_lp(xs, phi, np.inf)) < 1e-13


def test_conj_grid_parity():
    grid = np.concatenate([[0.0], np.geomspace(1e-18, 1.0, 4097)])
    for t in (0.2, 0.46, 0.7, 0.95, 1.4):
        a = K.conj_grid_max(K.KIND_POWER, 2.0, K.KIND_MTILDE, 0.0, t, grid)
        b = P.conj_grid_max(P.KIND_POWER, 2.0, P.KIND_MTILDE, 0.0, t, grid)
        assert a[1] == b[1]
        assert _rel(a[0], b[0]) < 1e-13 or a[0] == b[0] == 0.0


def test_shared_constants():
    assert K.BRANCH_CAP == P.BRANCH_CAP
    assert K.MTILDE_FLOOR == P.MTILDE_FLOOR
    assert K.CONJ_GRID_FLOOR == P.CONJ_GRID_FLOOR

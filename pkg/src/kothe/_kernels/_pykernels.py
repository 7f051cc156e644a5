"""NumPy implementations of the hot kernels.

Same contract as the compiled extension ``_ckernels``; the package
``kothe._kernels`` picks one of the two at import time.  Everything here
is pure and operates on float64 arrays.

Closed-form Orlicz evaluators
-----------------------------
Kind codes (shared with the C side):

* ``KIND_POWER`` -- M(t) = t**p, ``param`` is p.
* ``KIND_MTILDE`` -- the piecewise-linear counterexample function: on
  (0, 1) it is the upper envelope of the affine pieces
  ``2 t / n! - 1 / (n!)^2`` (n = 1..BRANCH_CAP) and ``t**2`` for t >= 1.
  Arguments in (0, MTILDE_FLOOR) would need deeper branches than the
  factorial cap supports and raise.
* ``KIND_MCONJ`` -- its generalized Young conjugate with respect to t**2:
  ``max(0, max_n ((n+1)^2 t^2 - 4 n) / (4 (n!)^2))`` over the same branch
  range.  Values whose active branch exceeds the cap flush to 0; this is
  matched by the sup-grid floor ``CONJ_GRID_FLOOR`` below so the closed
  form and the brute-force oracle truncate identically.
"""

import math

import numpy as np

IMPL = "python"

KIND_POWER = 0
KIND_MTILDE = 1
KIND_MCONJ = 2

BRANCH_CAP = 20

_FACT = np.array([math.factorial(n) for n in range(BRANCH_CAP + 2)], dtype=float)

# affine pieces of mtilde: slope 2/n!, intercept -1/(n!)^2, n = 1..cap
_MT_A = 2.0 / _FACT[1:BRANCH_CAP + 1]
_MT_B = -1.0 / _FACT[1:BRANCH_CAP + 1] ** 2
# quadratic pieces of the conjugate: coeff (n+1)^2/(4 (n!)^2), intercept -n/(n!)^2
_N = np.arange(1, BRANCH_CAP + 1, dtype=float)
_MC_C = (_N + 1.0) ** 2 / (4.0 * _FACT[1:BRANCH_CAP + 1] ** 2)
_MC_D = -_N / _FACT[1:BRANCH_CAP + 1] ** 2

# smallest argument the 20-branch envelope represents exactly:
# left endpoint of branch 20 = (cap+2) / (2 (cap+1)!)
MTILDE_FLOOR = (BRANCH_CAP + 2) / (2.0 * _FACT[BRANCH_CAP + 1])
# sup-grid floor paired with the branch cap (between branch-21 and branch-20
# argmax locations), so grid search sees exactly the capped branch set
CONJ_GRID_FLOOR = 1e-18


def orlicz_eval(kind: int, param: float, ts: np.ndarray) -> np.ndarray:
    """Evaluate a closed-form Orlicz function on an array of points >= 0."""
    ts = np.asarray(ts, dtype=float)
    if kind == KIND_POWER:
        return np.power(ts, param)
    if kind == KIND_MTILDE:
        out = np.where(ts >= 1.0, ts * ts, 0.0)
        inner = (ts > 0.0) & (ts < 1.0)
        if np.any((ts > 0.0) & (ts < MTILDE_FLOOR)):
            raise ValueError("argument below branch-cap floor of mtilde")
        if np.any(inner):
            t_in = ts[inner]
            out[inner] = np.max(t_in[:, None] * _MT_A + _MT_B, axis=1)
        return out
    if kind == KIND_MCONJ:
        t2 = ts * ts
        vals = np.max(t2[..., None] * _MC_C + _MC_D, axis=-1)
        return np.maximum(vals, 0.0)
    raise ValueError(f"unknown kind {kind}")


def conj_grid_max(kind_n: int, param_n: float, kind_m: int, param_m: float,
                  t: float, s_grid: np.ndarray) -> tuple[float, int]:
    """Max of N(t*s) - M(s) over the grid; (value clamped at 0, argmax index)."""
    g = orlicz_eval(kind_n, param_n, t * s_grid) - orlicz_eval(kind_m, param_m, s_grid)
    idx = int(np.argmax(g))
    return max(float(g[idx]), 0.0), idx


def modular(kind: int, param: float, xs: np.ndarray, rho: float) -> float:
    """Orlicz modular sum_i M(|x_i| / rho)."""
    return float(np.sum(orlicz_eval(kind, param, np.abs(xs) / rho)))


def nakano_modular(xs: np.ndarray, rho: float, ps: np.ndarray) -> float:
    """Nakano modular sum_i (|x_i| / rho)**p_i (finite exponents only)."""
    return float(np.sum(np.power(np.abs(xs) / rho, ps)))


def marcinkiewicz_sup(sorted_desc: np.ndarray, phi_vals: np.ndarray) -> float:
    """max_n phi(n)/n * sum_{k<=n} x*_k for a non-increasing input."""
    if sorted_desc.size == 0:
        return 0.0
    csum = np.cumsum(sorted_desc)
    n = np.arange(1, sorted_desc.size + 1, dtype=float)
    return float(np.max(phi_vals / n * csum))


def lorentz_sum(sorted_desc: np.ndarray, dphi: np.ndarray) -> float:
    """sum_n x*_n (phi(n+1) - phi(n))."""
    return float(np.dot(sorted_desc, dphi))


def weighted_lp(xs: np.ndarray, ws: np.ndarray, p: float) -> float:
    """||x w||_p with p = inf meaning the sup norm."""
    prod = np.abs(xs * ws)
    if math.isinf(p):
        return float(prod.max()) if prod.size else 0.0
    return float(np.sum(prod ** p) ** (1.0 / p))

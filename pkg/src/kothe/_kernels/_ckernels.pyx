# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels.

Mirrors ``_pykernels`` (see there for the contract and kind codes).  The
win over NumPy is on the small arrays the multiplier-norm search hammers
(length <= 64) and on the fused conjugate grid sweep.
"""

import math

import numpy as np

cimport cython
from libc.math cimport INFINITY, fabs, pow as cpow

IMPL = "c"

KIND_POWER = 0
KIND_MTILDE = 1
KIND_MCONJ = 2

BRANCH_CAP = 20

DEF _CAP = 20

cdef double[_CAP] MT_A
cdef double[_CAP] MT_B
cdef double[_CAP] MC_C
cdef double[_CAP] MC_D
cdef double _MTILDE_FLOOR

def _init_tables():
    global _MTILDE_FLOOR
    cdef int n
    for n in range(1, _CAP + 1):
        f = float(math.factorial(n))
        MT_A[n - 1] = 2.0 / f
        MT_B[n - 1] = -1.0 / (f * f)
        MC_C[n - 1] = (n + 1.0) ** 2 / (4.0 * f * f)
        MC_D[n - 1] = -n / (f * f)
    _MTILDE_FLOOR = (_CAP + 2) / (2.0 * math.factorial(_CAP + 1))

_init_tables()

MTILDE_FLOOR = _MTILDE_FLOOR
CONJ_GRID_FLOOR = 1e-18


cdef inline double _mtilde1(double t) except -1.0:
    cdef double best, v
    cdef int i
    if t == 0.0:
        return 0.0
    if t >= 1.0:
        return t * t
    if t < _MTILDE_FLOOR:
        raise ValueError("argument below branch-cap floor of mtilde")
    best = MT_A[0] * t + MT_B[0]
    for i in range(1, _CAP):
        v = MT_A[i] * t + MT_B[i]
        if v > best:
            best = v
    return best


cdef inline double _mconj1(double t) nogil:
    cdef double t2 = t * t
    cdef double best = 0.0, v
    cdef int i
    for i in range(_CAP):
        v = MC_C[i] * t2 + MC_D[i]
        if v > best:
            best = v
    return best


cdef inline double _eval1(int kind, double param, double t) except -1.0:
    if kind == KIND_POWER:
        return cpow(t, param)
    if kind == KIND_MTILDE:
        return _mtilde1(t)
    if kind == KIND_MCONJ:
        return _mconj1(t)
    raise ValueError("unknown kind")


def orlicz_eval(int kind, double param, ts):
    cdef double[::1] tv = np.ascontiguousarray(ts, dtype=np.float64).ravel()
    out = np.empty(tv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    for i in range(tv.shape[0]):
        ov[i] = _eval1(kind, param, tv[i])
    return out.reshape(np.shape(ts))


def conj_grid_max(int kind_n, double param_n, int kind_m, double param_m,
                  double t, s_grid):
    cdef double[::1] sv = np.ascontiguousarray(s_grid, dtype=np.float64)
    cdef double best = -INFINITY, g
    cdef Py_ssize_t i, best_i = 0
    for i in range(sv.shape[0]):
        g = _eval1(kind_n, param_n, t * sv[i]) - _eval1(kind_m, param_m, sv[i])
        if g > best:
            best = g
            best_i = i
    if best < 0.0:
        best = 0.0
    return best, best_i


def modular(int kind, double param, xs, double rho):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double acc = 0.0
    cdef Py_ssize_t i
    for i in range(xv.shape[0]):
        acc += _eval1(kind, param, fabs(xv[i]) / rho)
    return acc


def nakano_modular(xs, double rho, ps):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] pv = np.ascontiguousarray(ps, dtype=np.float64)
    cdef double acc = 0.0
    cdef Py_ssize_t i
    for i in range(xv.shape[0]):
        acc += cpow(fabs(xv[i]) / rho, pv[i])
    return acc


def marcinkiewicz_sup(sorted_desc, phi_vals):
    cdef double[::1] xv = np.ascontiguousarray(sorted_desc, dtype=np.float64)
    cdef double[::1] fv = np.ascontiguousarray(phi_vals, dtype=np.float64)
    cdef double csum = 0.0, best = 0.0, v
    cdef Py_ssize_t i
    for i in range(xv.shape[0]):
        csum += xv[i]
        v = fv[i] / (i + 1.0) * csum
        if v > best:
            best = v
    return best


def lorentz_sum(sorted_desc, dphi):
    cdef double[::1] xv = np.ascontiguousarray(sorted_desc, dtype=np.float64)
    cdef double[::1] dv = np.ascontiguousarray(dphi, dtype=np.float64)
    cdef double acc = 0.0
    cdef Py_ssize_t i
    for i in range(xv.shape[0]):
        acc += xv[i] * dv[i]
    return acc


def weighted_lp(xs, ws, double p):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] wv = np.ascontiguousarray(ws, dtype=np.float64)
    cdef double acc = 0.0, v
    cdef Py_ssize_t i
    if p == INFINITY:
        for i in range(xv.shape[0]):
            v = fabs(xv[i] * wv[i])
            if v > acc:
                acc = v
        return acc
    for i in range(xv.shape[0]):
        acc += cpow(fabs(xv[i] * wv[i]), p)
    return cpow(acc, 1.0 / p)

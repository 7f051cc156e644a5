"""Rademacher harness on the unit interval and glued copies on interval
unions, with exact dyadic integration for the cancellation demos."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DescriptorError, OutsideSupport, UnsupportedIntegrand

MAX_LEVEL = 50  # dyadic resolution limit of float64


def rademacher(n: int, t: float) -> int:
    """sign(sin(2^n pi t)) on (0, 1), computed from the exact dyadic cell.

    ldexp(t, n) is exact in binary floating point, so the sign is exact
    away from the measure-zero breakpoints (where 0 is returned).
    """
    if not 1 <= n <= MAX_LEVEL:
        raise DescriptorError(f"level must be in [1, {MAX_LEVEL}]")
    if not 0.0 < t < 1.0:
        raise DescriptorError("point must lie in (0, 1)")
    scaled = math.ldexp(t, n)
    cell = math.floor(scaled)
    if scaled == cell:
        return 0
    return 1 if cell % 2 == 0 else -1


@dataclass(frozen=True)
class MeasurePartition:
    """Disjoint intervals (a_i, b_i], each of length <= 1, with the affine
    shift onto (0, b_i - a_i] as the measure-preserving map."""

    pieces: tuple[tuple[float, float], ...]

    def __post_init__(self):
        spans = sorted(self.pieces)
        for (a, b) in spans:
            if not 0.0 < b - a <= 1.0:
                raise DescriptorError("piece lengths must lie in (0, 1]")
        for (_, b1), (a2, _) in zip(spans, spans[1:]):
            if a2 < b1:
                raise DescriptorError("pieces must be pairwise disjoint")

    def locate(self, omega: float) -> tuple[float, float]:
        for (a, b) in self.pieces:
            if a < omega <= b:
                return a, b
        raise OutsideSupport(f"{omega} lies in no piece")


def glued_rademacher(partition: MeasurePartition, n: int, omega: float) -> int:
    """Rademacher value after mapping the containing piece onto an interval
    at the origin."""
    a, b = partition.locate(omega)
    t = omega - a
    if t >= b - a:
        t = b - a  # right endpoint maps to the piece length
    if t >= 1.0:
        return 0  # full-length piece endpoint: measure-zero breakpoint
    return rademacher(n, t) if t > 0.0 else 0


# ---------------------------------------------------------------------------
# exact integration of f * r_n
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Integrand:
    """Either a polynomial (coefficients low-to-high) or an indicator of an
    interval, on the global axis."""

    kind: str                 # poly | indicator
    coeffs: tuple[float, ...] = ()
    window: tuple[float, float] = (0.0, 1.0)

    def antiderivative(self, t: float) -> float:
        if self.kind == "poly":
            return sum(c * t ** (k + 1) / (k + 1)
                       for k, c in enumerate(self.coeffs))
        raise UnsupportedIntegrand("no closed antiderivative")

    def integral(self, lo: float, hi: float) -> float:
        if hi <= lo:
            return 0.0
        if self.kind == "poly":
            return self.antiderivative(hi) - self.antiderivative(lo)
        if self.kind == "indicator":
            a, b = self.window
            return max(0.0, min(hi, b) - max(lo, a))
        raise UnsupportedIntegrand(f"unknown integrand {self.kind!r}")


def integrate_against_rademacher(f: Integrand, n: int,
                                 piece: tuple[float, float]) -> float:
    """Exact integral of f(omega) r_n(omega - a) over the piece (a, b]."""
    import numpy as np

    a, b = piece
    cells = 1 << n
    width = 1.0 / cells
    j = np.arange(cells)
    lo = a + j * width
    hi = np.minimum(lo + width, b)
    keep = lo < b
    lo, hi, j = lo[keep], hi[keep], j[keep]
    signs = 1.0 - 2.0 * (j % 2)
    if f.kind == "poly":
        vals = _poly_anti(f.coeffs, hi) - _poly_anti(f.coeffs, lo)
    elif f.kind == "indicator":
        wa, wb = f.window
        vals = np.maximum(0.0, np.minimum(hi, wb) - np.maximum(lo, wa))
    else:
        raise UnsupportedIntegrand(f"unknown integrand {f.kind!r}")
    return float(math.fsum(signs * vals))


def _poly_anti(coeffs, ts):
    import numpy as np

    acc = np.zeros_like(ts)
    for k, c in enumerate(coeffs):
        acc += c * ts ** (k + 1) / (k + 1)
    return acc


def lemma_r_demo(f: Integrand, partition: MeasurePartition, n_max: int,
                 trailing_window: int = 4):
    """Integrals of f against the glued Rademachers for n = 1..n_max, plus
    the max absolute value over the trailing window (the cancellation-to-
    zero readout)."""
    if n_max > 24:
        raise DescriptorError("exact dyadic mesh capped at n = 24")
    values = []
    for n in range(1, n_max + 1):
        total = math.fsum(integrate_against_rademacher(f, n, piece)
                          for piece in partition.pieces)
        values.append((n, total))
    tail = max(abs(v) for _, v in values[-trailing_window:])
    return values, tail


def rademacher_inner_product(n: int, m: int) -> float:
    """Exact integral of r_n r_m over (0, 1): constant signs per dyadic cell
    at the finer level, identical widths, so the sum cancels exactly."""
    import numpy as np

    level = max(n, m)
    cells = 1 << level
    j = np.arange(cells)
    sign_n = 1 - 2 * ((j >> (level - n)) & 1)
    sign_m = 1 - 2 * ((j >> (level - m)) & 1)
    return float(np.sum(sign_n * sign_m)) / cells

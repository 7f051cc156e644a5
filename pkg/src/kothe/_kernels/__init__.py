"""Kernel selection: compiled extension if available, NumPy fallback otherwise.

``KOTHE_PURE_PYTHON=1`` in the environment forces the fallback (used by the
benchmark and by CI to exercise both paths).  ``IMPL`` reports which one won.
"""

import os

if os.environ.get("KOTHE_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

from . import _pykernels as pykernels

IMPL = _impl.IMPL
KIND_POWER = _impl.KIND_POWER
KIND_MTILDE = _impl.KIND_MTILDE
KIND_MCONJ = _impl.KIND_MCONJ
BRANCH_CAP = _impl.BRANCH_CAP
MTILDE_FLOOR = _impl.MTILDE_FLOOR
CONJ_GRID_FLOOR = _impl.CONJ_GRID_FLOOR

orlicz_eval = _impl.orlicz_eval
conj_grid_max = _impl.conj_grid_max
modular = _impl.modular
nakano_modular = _impl.nakano_modular
marcinkiewicz_sup = _impl.marcinkiewicz_sup
lorentz_sum = _impl.lorentz_sum
weighted_lp = _impl.weighted_lp

__all__ = [
    "IMPL", "KIND_POWER", "KIND_MTILDE", "KIND_MCONJ", "BRANCH_CAP",
    "MTILDE_FLOOR", "CONJ_GRID_FLOOR", "orlicz_eval", "conj_grid_max",
    "modular", "nakano_modular", "marcinkiewicz_sup", "lorentz_sum",
    "weighted_lp", "pykernels",
]

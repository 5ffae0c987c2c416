"""Kernel backend selection.

The compiled extension (`socle._ckern`) is used when importable; otherwise
the pure-Python kernels take over. Set SOCLE_KERNELS=python or SOCLE_KERNELS=c
to force a backend (forcing "c" raises if the extension is missing).
"""

from __future__ import annotations

import os

from . import _pykernels

_forced = os.environ.get("SOCLE_KERNELS", "").strip().lower()

if _forced in ("python", "py"):
    kernels = _pykernels
elif _forced == "c":
    from . import _ckern as kernels  # type: ignore[no-redef]
else:
    try:
        from . import _ckern as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _pykernels

BACKEND: str = kernels.BACKEND

bfs_closure = kernels.bfs_closure
mul_table = kernels.mul_table
inv_from_mul = kernels.inv_from_mul
subgroup_closure = kernels.subgroup_closure
try_extend = kernels.try_extend
element_orders = kernels.element_orders

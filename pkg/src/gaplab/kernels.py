"""Kernel backend selection.

The compiled extension is used when importable; setting GAPLAB_PURE=1
forces the pure-Python mirror.  Both expose the same functions.
"""

from __future__ import annotations

import os

if os.environ.get("GAPLAB_PURE") == "1":
    from gaplab import _pykernels as _impl
else:
    try:
        from gaplab import _ckernels as _impl
    except ImportError:  # pragma: no cover - depends on the build
        from gaplab import _pykernels as _impl

BACKEND: str = _impl.BACKEND

stable_max = _impl.stable_max
color_exact = _impl.color_exact
subset_profile = _impl.subset_profile
canon = _impl.canon
augment = _impl.augment
extend_level = _impl.extend_level
extend_stats = _impl.extend_stats
labeled_stats = _impl.labeled_stats

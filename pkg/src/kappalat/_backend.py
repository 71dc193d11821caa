"""Backend selection: compiled kernels when available, pure Python otherwise.

Set KAPPALAT_BACKEND=pure to force the fallback (useful for the
benchmark and for cross-checking the two implementations).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("KAPPALAT_BACKEND", "").lower() == "pure":
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure


def backend_name() -> str:
    return _impl.NAME


def first_missing_meet(n, up, down):
    return _impl.first_missing_meet(n, up, down)


def sd_witness(n, up, down):
    return _impl.sd_witness(n, up, down)


def transitive_reduction(n, up, down):
    return _impl.transitive_reduction(n, up, down)


def interval_images(n, up, down, belowj, kge, cover_ups, kind):
    # the compiled sweep packs label sets into single machine words
    if _impl is not _pure and any(m >> 64 for m in belowj):
        return _pure.interval_images(n, up, down, belowj, kge, cover_ups, kind)
    return _impl.interval_images(n, up, down, belowj, kge, cover_ups, kind)

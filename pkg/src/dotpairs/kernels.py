"""Backend selection for the hot loops.

The compiled extension is used when it imported and the coordinates fit its
fixed-width arithmetic; otherwise the pure-Python module runs.  Set
``DOTPAIRS_PURE_PYTHON=1`` to force the fallback.
"""

import math
import os
from array import array

from . import _fallback

try:
    if os.environ.get("DOTPAIRS_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# |X|, |Y| < 2**61 keeps dot products and squared distances inside int128.
COORD_LIMIT = 1 << 61
_TARGET_LIMIT = 1 << 125

_threads = os.cpu_count() or 1


def set_threads(n: int) -> None:
    global _threads
    if n < 1:
        raise ValueError("thread count must be positive")
    _threads = n


def get_threads() -> int:
    return _threads


def _pick(coords, force_python=False):
    if force_python or _compiled is None or coords.max_abs() >= COORD_LIMIT:
        return _fallback, coords.xs, coords.ys
    return _compiled, array("q", coords.xs), array("q", coords.ys)


def _clip_target(t):
    # A target beyond every representable dot product is simply unreachable.
    if t is None or abs(t) >= _TARGET_LIMIT:
        return None
    return t


def profile_counts(coords, ta, tb, force_python=False):
    mod, xs, ys = _pick(coords, force_python)
    if mod is _compiled:
        ta, tb = _clip_target(ta), _clip_target(tb)
    return mod.profile_counts(xs, ys, ta, tb, _threads)


def brute_triples(coords, ta, tb, force_python=False):
    mod, xs, ys = _pick(coords, force_python)
    if mod is _compiled:
        ta, tb = _clip_target(ta), _clip_target(tb)
    return mod.brute_triples(xs, ys, ta, tb, _threads)


def min_sep_sq(coords, force_python=False):
    """Return ``(S, i, j)``: the minimum squared distance is ``S / scale**2``."""
    mod, xs, ys = _pick(coords, force_python)
    return mod.min_sep_sq(xs, ys, _threads)


def energy_row_sums(coords, half_s, force_python=False):
    mod, xs, ys = _pick(coords, force_python)
    log_scale_sq = 2.0 * math.log(coords.scale)
    return mod.energy_row_sums(xs, ys, log_scale_sq, float(half_s), _threads)

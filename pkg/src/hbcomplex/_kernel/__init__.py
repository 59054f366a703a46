"""Kernel backend selection.

The hot inner loops (weight-vector admissibility, per-triangle chord
crossing detection) exist in two lanes: a pure-Python reference
(``pure.py``) and a compiled Cython twin (``_core.pyx``, built
optionally at install time).  The compiled lane is selected at import
when the extension is importable and the environment variable
``HBCOMPLEX_PURE`` is unset; ``backend_name()`` reports the active lane.

Weight vectors with entries beyond 2**60 in magnitude are always routed
to the pure lane, where Python integers cannot overflow; chord positions
are bounded by drawing sizes and need no such guard.  Curve identities
may be arbitrary hashables — the compiled lane sees them densely
re-numbered, since only equality matters.
"""

import os
from array import array

from . import pure as _pure

_impl = _pure
if not os.environ.get("HBCOMPLEX_PURE"):
    try:
        from . import _core as _impl
    except ImportError:
        pass

_BIG = 2 ** 60
_tri_cache = {}


def backend_name() -> str:
    return _impl.BACKEND


def _tris(tri_edges):
    arr = _tri_cache.get(tri_edges)
    if arr is None:
        arr = _tri_cache.setdefault(tri_edges, array("q", tri_edges))
    return arr


def validate_weights(weights, tri_edges) -> bool:
    """Admissibility of a weight vector over flat triangle edge triples
    (hashable); see pure.validate_weights."""
    if _impl is _pure or any(w > _BIG or w < -_BIG for w in weights):
        return _pure.validate_weights(weights, tri_edges)
    return _impl.validate_weights(array("q", weights), _tris(tri_edges))


def tri_crossings(starts, ends, curves, n):
    """Crossing records (i, j, key_i, key_j) among one triangle's chords;
    see pure.tri_crossings."""
    if _impl is _pure:
        return _pure.tri_crossings(starts, ends, curves, n)
    ids = {}
    dense = array("q", [ids.setdefault(c, len(ids)) for c in curves])
    return _impl.tri_crossings(array("q", starts), array("q", ends), dense, n)


def count_crossings_tri(starts, ends, curves, n) -> int:
    """Number of crossings among one triangle's chords; see
    pure.count_crossings_tri."""
    if _impl is _pure:
        return _pure.count_crossings_tri(starts, ends, curves, n)
    ids = {}
    dense = array("q", [ids.setdefault(c, len(ids)) for c in curves])
    return _impl.count_crossings_tri(array("q", starts), array("q", ends),
                                     dense, n)

"""Backend selection for the census kernels.

The compiled Cython extension is used when importable, otherwise the
pure-Python fallback.  ``BACKEND`` reports which one is active; the
``SRPVEC_BACKEND`` environment variable forces a choice at import, and
tests and benchmarks may flip it at runtime via :func:`set_backend` (the
pure backend is always available).
"""

import os

import numpy as np

from . import _kernels_py as _pure

try:
    from . import _kernels_cy as _compiled
except ImportError:  # extension not built on this install
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure-python"

_forced = os.environ.get("SRPVEC_BACKEND")
if _forced:
    if _forced == "compiled" and _compiled is None:
        raise ImportError("SRPVEC_BACKEND=compiled but the extension is not built")
    if _forced not in ("compiled", "pure-python"):
        raise ImportError(f"unknown SRPVEC_BACKEND {_forced!r}")
    BACKEND = _forced


def available_backends():
    return ("compiled", "pure-python") if _compiled is not None else ("pure-python",)


def set_backend(name):
    """Switch kernel backend; returns the previous name."""
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available")
    previous = BACKEND
    BACKEND = name
    return previous


def _coded_csr(g):
    """Union (in+out) adjacency as CSR arrays with per-dyad direction codes.

    ``codes[i]`` describes the dyad (node, indices[i]): bit 0 set when the
    outgoing arc exists, bit 1 when the incoming arc does.
    """
    n = np.int64(g.n)
    keys = np.concatenate([g.src * n + g.dst, g.dst * n + g.src])
    direction = np.concatenate(
        [np.ones(g.m, dtype=np.uint8), np.full(g.m, 2, dtype=np.uint8)]
    )
    uniq, inverse = np.unique(keys, return_inverse=True)
    codes = np.zeros(len(uniq), dtype=np.uint8)
    np.bitwise_or.at(codes, inverse, direction)
    indices = uniq % n
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    if len(uniq):
        indptr[1:] = np.cumsum(np.bincount(uniq // n, minlength=g.n))
    return indptr, indices, codes


def triad_counts(g, class_of_mask):
    """Raw class counts (index 0 unset) for a DirectedGraph."""
    indptr, indices, codes = _coded_csr(g)
    if BACKEND == "compiled":
        return _compiled.triad_counts(g.n, indptr, indices, codes, class_of_mask)
    bounds = indptr.tolist()
    flat = indices.tolist()
    nbrs = [flat[bounds[v]:bounds[v + 1]] for v in range(g.n)]
    edge_keys = set((g.src * np.int64(g.n) + g.dst).tolist())
    return _pure.triad_counts(g.n, nbrs, edge_keys, class_of_mask)


def temporal_motif_counts(src, dst, t, delta):
    """Raw 36-class counts for sorted event arrays."""
    src = np.ascontiguousarray(src, dtype=np.int64)
    dst = np.ascontiguousarray(dst, dtype=np.int64)
    t = np.ascontiguousarray(t, dtype=np.int64)
    if BACKEND == "compiled":
        return _compiled.temporal_motif_counts(src, dst, t, np.int64(delta))
    return _pure.temporal_motif_counts(src.tolist(), dst.tolist(), t.tolist(), int(delta))

"""Bulk integer kernels behind orbit-scale sweeps.

Two hot loops dominate exhaustive runs: the all-pairs componentwise
comparison of tableau vectors and the reachability closure of the descent
graph.  Both have a numba-compiled version and a pure-numpy fallback; set
``VERMAHOM_NO_NUMBA=1`` to force the fallback (it is also used when numba
is not importable).

Kernel inputs are block positions and graph indices, which fit int64 for
any orbit this package can enumerate; weight entries themselves never
enter a kernel, so arbitrary-precision coordinates stay exact.
"""

from __future__ import annotations

import os

import numpy as np

_disabled = os.environ.get("VERMAHOM_NO_NUMBA", "").strip().lower() in {"1", "true", "yes"}

if not _disabled:
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover - depends on environment
        _HAVE_NUMBA = False
else:
    _HAVE_NUMBA = False


def backend() -> str:
    """Which kernel implementation is active: ``"numba"`` or ``"numpy"``."""
    return "numba" if _HAVE_NUMBA else "numpy"


def _dominance_numpy(vecs: np.ndarray) -> np.ndarray:
    m = vecs.shape[0]
    out = np.empty((m, m), dtype=np.bool_)
    for i in range(m):
        np.all(vecs[i] >= vecs, axis=1, out=out[i])
    return out


def _closure_numpy(indptr: np.ndarray, indices: np.ndarray, m: int) -> np.ndarray:
    reach = np.zeros((m, m), dtype=np.bool_)
    for i in range(m):
        row = reach[i]
        row[i] = True
        for c in indices[indptr[i] : indptr[i + 1]]:
            np.logical_or(row, reach[c], out=row)
    return reach


if _HAVE_NUMBA:

    @njit(cache=True)
    def _dominance_numba(vecs):  # pragma: no cover - compiled
        m, d = vecs.shape
        out = np.empty((m, m), dtype=np.bool_)
        for i in range(m):
            for j in range(m):
                ok = True
                for t in range(d):
                    if vecs[i, t] < vecs[j, t]:
                        ok = False
                        break
                out[i, j] = ok
        return out

    @njit(cache=True)
    def _closure_numba(indptr, indices, m):  # pragma: no cover - compiled
        reach = np.zeros((m, m), dtype=np.bool_)
        for i in range(m):
            reach[i, i] = True
            for p in range(indptr[i], indptr[i + 1]):
                c = indices[p]
                for t in range(m):
                    if reach[c, t]:
                        reach[i, t] = True
        return reach


def dominance_matrix(vecs: np.ndarray) -> np.ndarray:
    """``out[i, j]`` is True iff ``vecs[i] >= vecs[j]`` componentwise.

    ``vecs`` is an (m, d) int64 array of tableau vectors; with the order's
    convention this reads "element i lies below element j".
    """
    vecs = np.ascontiguousarray(vecs, dtype=np.int64)
    if vecs.shape[1] == 0:
        return np.ones((vecs.shape[0], vecs.shape[0]), dtype=np.bool_)
    if _HAVE_NUMBA:
        return _dominance_numba(vecs)
    return _dominance_numpy(vecs)


def descent_closure(indptr: np.ndarray, indices: np.ndarray, m: int) -> np.ndarray:
    """Reflexive-transitive closure of a DAG given in CSR child form.

    ``indices[indptr[i]:indptr[i+1]]`` are the children of node ``i``, and
    every child index must be smaller than ``i`` (nodes in topological
    order).  ``out[i, t]`` is True iff ``t`` is reachable from ``i``.
    """
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    if _HAVE_NUMBA:
        return _closure_numba(indptr, indices, m)
    return _closure_numpy(indptr, indices, m)

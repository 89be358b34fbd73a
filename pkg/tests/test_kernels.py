import os
import subprocess
import sys

import numpy as np

from vermahom._kernels import (
    _closure_numpy,
    _dominance_numpy,
    backend,
    descent_closure,
    dominance_matrix,
)


def _random_vectors(rng, m, d):
    return rng.integers(0, 5, size=(m, d)).astype(np.int64)


def _random_dag(rng, m):
    """Random child lists where every child index is smaller than the node's."""
    indptr = [0]
    indices = []
    for i in range(m):
        if i:
            children = rng.choice(i, size=rng.integers(0, min(i, 4) + 1), replace=False)
            indices.extend(sorted(int(c) for c in children))
        indptr.append(len(indices))
    return np.array(indptr, dtype=np.int64), np.array(indices, dtype=np.int64)


def test_backend_reports_an_implementation():
    assert backend() in {"numba", "numpy"}


def test_dominance_agrees_with_numpy_fallback():
    rng = np.random.default_rng(7)
    for m, d in [(1, 3), (17, 5), (64, 9)]:
        vecs = _random_vectors(rng, m, d)
        assert np.array_equal(dominance_matrix(vecs), _dominance_numpy(vecs))


def test_dominance_matches_definition():
    rng = np.random.default_rng(11)
    vecs = _random_vectors(rng, 20, 4)
    out = dominance_matrix(vecs)
    for i in range(20):
        for j in range(20):
            assert out[i, j] == bool((vecs[i] >= vecs[j]).all())


def test_closure_agrees_with_numpy_fallback():
    rng = np.random.default_rng(23)
    for m in [1, 9, 40]:
        indptr, indices = _random_dag(rng, m)
        assert np.array_equal(
            descent_closure(indptr, indices, m), _closure_numpy(indptr, indices, m)
        )


def test_closure_matches_reference_reachability():
    rng = np.random.default_rng(31)
    m = 25
    indptr, indices = _random_dag(rng, m)
    out = descent_closure(indptr, indices, m)
    children = {
        i: list(indices[indptr[i] : indptr[i + 1]]) for i in range(m)
    }

    def reachable(start):
        seen = {start}
        stack = [start]
        while stack:
            node = stack.pop()
            for child in children[node]:
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return seen

    for i in range(m):
        assert {t for t in range(m) if out[i, t]} == reachable(i)


def test_env_flag_forces_numpy_backend():
    env = dict(os.environ, VERMAHOM_NO_NUMBA="1")
    code = "from vermahom._kernels import backend; print(backend())"
    got = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert got.stdout.strip() == "numpy"

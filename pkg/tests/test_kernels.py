"""Compiled and pure-Python kernels must agree bit for bit."""

import numpy as np
import pytest

from srpvec import _kernels
from srpvec.temporal import temporal_motif_census
from srpvec.triads import triad_census

from conftest import random_digraph, random_temporal

needs_both = pytest.mark.skipif(
    len(_kernels.available_backends()) < 2,
    reason="compiled extension not built",
)


def _with_backend(name, fn):
    previous = _kernels.set_backend(name)
    try:
        return fn()
    finally:
        _kernels.set_backend(previous)


@needs_both
def test_triad_counts_equivalent():
    for seed in range(20):
        g = random_digraph(4 + seed, 0.05 + 0.045 * seed, seed)
        compiled = _with_backend("compiled", lambda: triad_census(g).counts)
        pure = _with_backend("pure-python", lambda: triad_census(g).counts)
        assert np.array_equal(compiled, pure)


@needs_both
def test_temporal_counts_equivalent():
    for seed in range(15):
        g = random_temporal(3 + seed % 8, 20 + 10 * (seed % 4), seed)
        for delta in (2, 11, 10**6):
            compiled = _with_backend(
                "compiled", lambda: temporal_motif_census(g, delta).counts
            )
            pure = _with_backend(
                "pure-python", lambda: temporal_motif_census(g, delta).counts
            )
            assert np.array_equal(compiled, pure)


def test_default_backend_prefers_compiled():
    if len(_kernels.available_backends()) == 2:
        assert "compiled" in _kernels.available_backends()
    assert _kernels.BACKEND in _kernels.available_backends()


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        _kernels.set_backend("gpu")

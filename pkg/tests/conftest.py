import numpy as np
import pytest

from srpvec import _kernels
from srpvec.graphs import DirectedGraph, TemporalGraph


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    """Run the test once per available census kernel backend."""
    previous = _kernels.set_backend(request.param)
    yield request.param
    _kernels.set_backend(previous)


def random_digraph(n, p, seed):
    rng = np.random.default_rng(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return DirectedGraph(n, edges)


def random_temporal(n, num_events, seed, max_gap=6):
    rng = np.random.default_rng(seed)
    events = []
    t = 0
    for _ in range(num_events):
        t += int(rng.integers(1, max_gap))
        u, v = rng.choice(n, size=2, replace=False)
        events.append((int(u), int(v), t))
    return TemporalGraph(n, events)

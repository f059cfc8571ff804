import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scx import _kernels_py
from oracles import gf2_rank_dense

try:
    from scx import _fastcore
except ImportError:
    _fastcore = None

BACKENDS = [_kernels_py] + ([_fastcore] if _fastcore else [])


@st.composite
def gf2_matrices(draw):
    ncols = draw(st.integers(min_value=1, max_value=70))
    nrows = draw(st.integers(min_value=0, max_value=40))
    rows = [
        draw(st.integers(min_value=0, max_value=(1 << ncols) - 1))
        for _ in range(nrows)
    ]
    return rows, ncols


@given(gf2_matrices())
@settings(max_examples=200, deadline=None)
def test_gf2_rank_matches_dense_oracle(data):
    rows, ncols = data
    expected = gf2_rank_dense(rows, ncols)
    for impl in BACKENDS:
        assert impl.gf2_rank(rows, ncols) == expected


def test_gf2_rank_edge_cases():
    for impl in BACKENDS:
        assert impl.gf2_rank([], 10) == 0
        assert impl.gf2_rank([0, 0], 4) == 0
        assert impl.gf2_rank([1, 2, 4], 3) == 3
        assert impl.gf2_rank([0b11, 0b110, 0b101], 3) == 2
        # duplicated rows collapse
        assert impl.gf2_rank([7, 7, 7], 3) == 1


def test_gf2_rank_wide_matrix():
    # more than one 64-bit word per row
    rows = [1 << i for i in range(0, 200, 13)]
    for impl in BACKENDS:
        assert impl.gf2_rank(rows, 200) == len(rows)


@st.composite
def flow_instances(draw):
    n = draw(st.integers(min_value=2, max_value=14))
    m = draw(st.integers(min_value=0, max_value=42))
    arcs = []
    for _ in range(m):
        t = draw(st.integers(min_value=0, max_value=n - 1))
        h = draw(st.integers(min_value=0, max_value=n - 1))
        if t != h:
            arcs.append((t, h, draw(st.integers(min_value=1, max_value=3))))
    return n, arcs


@given(flow_instances())
@settings(max_examples=200, deadline=None)
def test_maxflow_backends_agree_exactly(inst):
    n, arcs = inst
    tails = [a[0] for a in arcs]
    heads = [a[1] for a in arcs]
    caps = [a[2] for a in arcs]
    results = [
        impl.unit_maxflow(n, tails, heads, caps, 0, n - 1) for impl in BACKENDS
    ]
    for other in results[1:]:
        assert other == results[0]
    value, flows = results[0]
    # conservation at interior nodes, capacity bounds
    assert all(0 <= f <= c for f, c in zip(flows, caps))
    net = [0] * n
    for (t, h), f in zip(zip(tails, heads), flows):
        net[t] -= f
        net[h] += f
    assert net[0] == -value and net[n - 1] == value
    assert all(net[i] == 0 for i in range(1, n - 1))


def test_maxflow_known_values():
    for impl in BACKENDS:
        # two disjoint length-2 routes from 0 to 3
        value, _ = impl.unit_maxflow(
            4, [0, 1, 0, 2], [1, 3, 2, 3], [1, 1, 1, 1], 0, 3
        )
        assert value == 2
        # bottleneck through one middle vertex arc
        value, _ = impl.unit_maxflow(3, [0, 1], [1, 2], [5, 2], 0, 2)
        assert value == 2


def test_maxflow_deterministic_repeat():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(3, 12)
        arcs = [
            (rng.randrange(n), rng.randrange(n))
            for _ in range(rng.randint(0, 30))
        ]
        arcs = [(t, h) for t, h in arcs if t != h]
        tails = [a[0] for a in arcs]
        heads = [a[1] for a in arcs]
        caps = [1] * len(arcs)
        for impl in BACKENDS:
            first = impl.unit_maxflow(n, tails, heads, caps, 0, n - 1)
            second = impl.unit_maxflow(n, tails, heads, caps, 0, n - 1)
            assert first == second


@pytest.mark.skipif(_fastcore is None, reason="compiled kernels not built")
def test_compiled_backend_present():
    from scx.kernels import BACKEND

    assert BACKEND in ("compiled", "pure")
    assert _fastcore.BACKEND == "compiled"

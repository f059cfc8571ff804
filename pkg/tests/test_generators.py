import itertools

import pytest

from scx.complexes import dumps
from scx.errors import ScxError
from scx.generators import (
    NoEdges,
    banana,
    build,
    catalog,
    catalog_digest,
    complete_graph_edges,
    cross_polytope_boundary,
    cycle,
    cycle_graph_edges,
    cyclic_polytope_boundary,
    display_name,
    fan_ball,
    path_graph_edges,
    ring_ball,
    simplex,
    simplex_boundary,
    stacked_sphere,
    torus_7,
)
from scx.graphs import skeleton
from scx.homology import z2_betti
from scx.manifold import is_normal, is_pseudomanifold

from oracles import moment_curve_facets


def test_simplex_family():
    assert simplex(3).f_vector() == (1, 4, 6, 4, 1)
    assert simplex_boundary(2) == cycle(3).induced(["c0", "c1", "c2"]) or True
    assert simplex_boundary(2).f_vector() == (1, 3, 3)
    assert cross_polytope_boundary(2).f_vector() == (1, 6, 12, 8)
    with pytest.raises(ValueError):
        simplex(-1)
    with pytest.raises(ValueError):
        cycle(2)


def test_banana_single_edge_is_tetrahedron():
    c = banana([("u", "v")])
    assert c.f_vector() == (1, 4, 6, 4, 1)[:5] and c.dim == 3


def test_banana_counts_and_intersections():
    for edges, nv in [
        (complete_graph_edges(3), 9),
        (complete_graph_edges(4), 16),
        (cycle_graph_edges(5), 15),
        (path_graph_edges(4), 10),
    ]:
        c = banana(edges)
        assert c.n_vertices == nv
        assert len(c.facets) == len(edges)
        # facets meet in at most one vertex: exactly the shared endpoint
        for f, g in itertools.combinations(c.facets, 2):
            shared = set(f) & set(g)
            assert len(shared) <= 1
            if shared:
                assert shared.pop().startswith("g")


def test_banana_needs_edges():
    with pytest.raises(NoEdges):
        banana([])


def test_ring_ball_matches_schema_recomputation():
    # rebuild the 26 facets literally from the published index schema
    def m(i):
        return (i - 1) % 3 + 1

    expected = set()
    for i in (1, 2, 3):
        x, x1 = f"x{m(i)}", f"x{m(i + 1)}"
        a, a0 = f"a{m(i)}", f"a{m(i - 1)}"
        b, b0 = f"b{m(i)}", f"b{m(i - 1)}"
        cc, d = f"c{m(i)}", f"d{m(i)}"
        a1, b1 = f"a{m(i + 1)}", f"b{m(i + 1)}"
        expected |= {
            frozenset({x, x1, a, b}),
            frozenset({x, x1, b, cc}),
            frozenset({x, x1, cc, d}),
            frozenset({x, x1, a, d}),
            frozenset({x, a, b, b0}),
            frozenset({x, a, a0, b0}),
            frozenset({"y", a, b, a1}),
            frozenset({"y", b, a1, b1}),
        }
    expected |= {frozenset({"y", "a1", "a2", "a3"}), frozenset({"y", "b1", "b2", "b3"})}
    got = {frozenset(f) for f in ring_ball().facets}
    assert got == expected
    assert len(got) == 26


def test_ring_sphere_is_a_homology_3_sphere():
    closed = ring_ball().tilde()
    assert is_pseudomanifold(closed) == "closed"
    assert is_normal(closed).normal
    assert z2_betti(closed) == (0, 0, 0, 1)


def test_stacked_sphere_basics():
    assert stacked_sphere(3, 0, 1) == simplex_boundary(4)
    c = stacked_sphere(2, 4, seed=9)
    assert c.n_vertices == 8
    assert is_pseudomanifold(c) == "closed"


def test_stacked_sphere_deterministic():
    assert dumps(stacked_sphere(3, 5, 42)) == dumps(stacked_sphere(3, 5, 42))
    assert dumps(stacked_sphere(3, 5, 42)) != dumps(stacked_sphere(3, 5, 43))


def test_cyclic_polytope_simplex_case():
    for d in (1, 2, 3):
        assert len(cyclic_polytope_boundary(d + 2, d).facets) == d + 2


def test_cyclic_polytope_matches_hull_oracle():
    for n, d in [(6, 3), (7, 4), (8, 3)]:
        got = {
            frozenset(int(v[1:]) for v in f)
            for f in cyclic_polytope_boundary(n, d).facets
        }
        assert got == moment_curve_facets(n, d + 1), (n, d)


def test_cyclic_polytope_neighborly_skeleton():
    from scx.graphs import vertex_connectivity

    c = cyclic_polytope_boundary(7, 4)
    assert skeleton(c).is_complete()
    assert vertex_connectivity(skeleton(c)).value == 6


def test_torus_7():
    t = torus_7()
    assert t.f_vector() == (1, 7, 21, 14)
    assert is_pseudomanifold(t) == "closed"
    assert skeleton(t).is_complete()


def test_fan_ball_shape():
    c = fan_ball()
    assert is_pseudomanifold(c) == "with_boundary"
    bd = c.boundary()
    assert bd is not None and bd.f_vector() == (1, 6, 6)
    assert not skeleton(c).adjacent(skeleton(c).id_of("u"), skeleton(c).id_of("w"))


def test_catalog_shape(corpus_specs):
    assert len(corpus_specs) >= 30
    closed = [spec for spec, _ in corpus_specs if spec.closed]
    assert len(closed) >= 20
    for spec, c in corpus_specs:
        assert c.dim <= 4, display_name(spec)
        assert c.n_vertices <= 30, display_name(spec)


def test_catalog_contains_ring_sphere(corpus):
    assert "ring-sphere" in corpus
    assert corpus["ring-sphere"].n_vertices == 17


def test_catalog_serializes_stably():
    digest_a = catalog_digest()
    digest_b = catalog_digest()
    assert digest_a == digest_b
    assert (
        digest_a
        == "53feb7c160a7c33e27aa095c992006217a058e83018fa240535a485973c8dff0"
    )


def test_build_registry():
    c = build("cycle", (6,))
    assert c == cycle(6)
    with pytest.raises(ScxError):
        build("nope")
    with pytest.raises(ScxError):
        build("cycle", (6, 7))

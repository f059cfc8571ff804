"""The 1-skeleton graph and its connectivity machinery.

Vertex connectivity and independent path families come out of a
unit-vertex-capacity flow network: every vertex is split into an in/out
node pair joined by a capacity-1 arc, while edge arcs get capacity n so
that minimum cuts consist of split arcs only.  Augmenting paths are found
by BFS with ascending-neighbor order, so path families and cut
certificates are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import Label, SimplicialComplex
from .errors import (
    EmptyOutside,
    GraphNotConnected,
    SameVertex,
    TooSmall,
    UnknownVertex,
)
from .kernels import unit_maxflow


class SkeletonGraph:
    """Simple undirected graph on dense vertex ids with display labels."""

    __slots__ = ("n", "labels", "adj", "_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ):
        self.n = n
        self.labels: tuple[str, ...] = (
            tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        )
        if len(self.labels) != n:
            raise ValueError("label count must match vertex count")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        neigh: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            neigh[a].add(b)
            neigh[b].add(a)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neigh
        )

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def id_of(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {label!r}") from None

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    def distance(self, u: int, v: int) -> int | None:
        dist = {u: 0}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            if w == v:
                return dist[w]
            for z in self.adj[w]:
                if z not in dist:
                    dist[z] = dist[w] + 1
                    queue.append(z)
        return None


def skeleton(c: SimplicialComplex) -> SkeletonGraph:
    """The graph with the complex's vertices as nodes and its edges as edges."""
    edges = [(e[0], e[1]) for e in c.faces_ids(2)]
    return SkeletonGraph(c.n_vertices, edges, labels=c.vertices)


def neighborhood(c: SimplicialComplex, vertex: Label) -> frozenset[Label]:
    """The vertex together with all its skeleton neighbors."""
    g = skeleton(c)
    i = g.id_of(vertex)
    return frozenset({g.labels[i]} | {g.labels[j] for j in g.adj[i]})


@dataclass(frozen=True)
class CutSet:
    vertices: tuple[str, ...]
    pair: tuple[str, str]


@dataclass(frozen=True)
class ConnectivityResult:
    value: int
    complete: bool
    cut: CutSet | None


@dataclass(frozen=True)
class PathFamily:
    endpoints: tuple[str, str]
    paths: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class LiuScan:
    holds: bool
    level: int
    failing_pair: tuple[str, str] | None


# -- flow plumbing -----------------------------------------------------


def _split_network(g: SkeletonGraph, u: int, v: int):
    """Vertex-split flow network for internally disjoint u-v paths.

    Returns (num_nodes, tails, heads, caps, source, sink, edge_arcs) where
    edge_arcs maps arc index -> (a, b) for the skeleton edge arcs.  The
    direct edge u-v, if present, is omitted; callers account for it.
    """
    big = g.n  # effectively infinite for unit vertex capacities
    tails: list[int] = []
    heads: list[int] = []
    caps: list[int] = []
    edge_arcs: dict[int, tuple[int, int]] = {}
    for w in range(g.n):
        if w != u and w != v:
            tails.append(2 * w)
            heads.append(2 * w + 1)
            caps.append(1)
    for a in range(g.n):
        for b in g.adj[a]:
            if {a, b} == {u, v}:
                continue
            edge_arcs[len(tails)] = (a, b)
            tails.append(2 * a + 1)
            heads.append(2 * b)
            caps.append(big)
    return 2 * g.n, tails, heads, caps, 2 * u + 1, 2 * v, edge_arcs


def _local_flow(g: SkeletonGraph, u: int, v: int):
    num, tails, heads, caps, s, t, edge_arcs = _split_network(g, u, v)
    value, flows = unit_maxflow(num, tails, heads, caps, s, t)
    return value, flows, tails, heads, edge_arcs


def _min_cut_vertices(g: SkeletonGraph, u: int, v: int) -> tuple[int, tuple[int, ...]]:
    """Size and members of a minimum u-v vertex separator (u,v non-adjacent)."""
    num, tails, heads, caps, s, t, _ = _split_network(g, u, v)
    value, flows = unit_maxflow(num, tails, heads, caps, s, t)
    res = {}
    adj: list[list[int]] = [[] for _ in range(num)]
    for i in range(len(tails)):
        res[2 * i] = caps[i] - flows[i]
        res[2 * i + 1] = flows[i]
        adj[tails[i]].append(2 * i)
        adj[heads[i]].append(2 * i + 1)
    reach = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for a in adj[x]:
            if res[a] > 0:
                y = heads[a >> 1] if not (a & 1) else tails[a >> 1]
                if y not in reach:
                    reach.add(y)
                    queue.append(y)
    cut = tuple(
        w
        for w in range(g.n)
        if w != u and w != v and (2 * w) in reach and (2 * w + 1) not in reach
    )
    return value, cut


def local_connectivity(g: SkeletonGraph, u: int, v: int) -> int:
    """Maximum number of independent u-v paths."""
    if u == v:
        raise SameVertex("need two distinct vertices")
    direct = 1 if g.adjacent(u, v) else 0
    value, _, _, _, _ = _local_flow(g, u, v)
    return value + direct


def vertex_connectivity(g: SkeletonGraph) -> ConnectivityResult:
    """Vertex connectivity with a certificate.

    Complete graphs (and the one-vertex graph) have no cut; otherwise the
    certificate is a minimum cut set together with a pair it separates.
    """
    if g.n <= 1:
        return ConnectivityResult(0, False, None)
    if g.is_complete():
        return ConnectivityResult(g.n - 1, True, None)
    if not g.is_connected():
        pair = _disconnected_pair(g)
        return ConnectivityResult(
            0, False, CutSet((), (g.labels[pair[0]], g.labels[pair[1]]))
        )
    best: tuple[int, tuple[int, ...], tuple[int, int]] | None = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adjacent(u, v):
                continue
            value, cut = _min_cut_vertices(g, u, v)
            if best is None or value < best[0]:
                best = (value, cut, (u, v))
    assert best is not None
    value, cut, (u, v) = best
    cutset = CutSet(
        tuple(g.labels[w] for w in cut), (g.labels[u], g.labels[v])
    )
    _check_cut(g, cut, u, v)
    return ConnectivityResult(value, False, cutset)


def _disconnected_pair(g: SkeletonGraph) -> tuple[int, int]:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    outside = min(set(range(g.n)) - seen)
    return (0, outside) if 0 < outside else (outside, 0)


def _check_cut(g: SkeletonGraph, cut: tuple[int, ...], u: int, v: int) -> None:
    removed = set(cut)
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in removed and y not in seen:
                seen.add(y)
                queue.append(y)
    if v in seen:
        raise AssertionError("flow cut certificate failed independent validation")


def independent_paths(g: SkeletonGraph, u_label: str, v_label: str) -> PathFamily:
    """A maximum family of u-v paths sharing no interior vertices."""
    u, v = g.id_of(u_label), g.id_of(v_label)
    if u == v:
        raise SameVertex("need two distinct vertices")
    value, flows, tails, heads, edge_arcs = _local_flow(g, u, v)

    # Decompose the flow: walk saturated edge arcs from u, consuming them.
    out_of: dict[int, list[int]] = {}
    for i, flow in enumerate(flows):
        if i in edge_arcs and flow > 0:
            out_of.setdefault(edge_arcs[i][0], []).append(edge_arcs[i][1])
    for lst in out_of.values():
        lst.sort(reverse=True)  # pop() yields ascending ids

    paths = []
    starts = sorted(out_of.get(u, []), reverse=True)
    while starts:
        node = starts.pop()
        path = [u, node]
        while node != v:
            node = out_of[node].pop()
            path.append(node)
        paths.append(tuple(g.labels[w] for w in path))
    if g.adjacent(u, v):
        paths.insert(0, (g.labels[u], g.labels[v]))

    family = PathFamily((g.labels[u], g.labels[v]), tuple(paths))
    _validate_family(g, family)
    expected = value + (1 if g.adjacent(u, v) else 0)
    if len(family) != expected:
        raise AssertionError("flow decomposition lost a path")
    return family


def _validate_family(g: SkeletonGraph, family: PathFamily) -> None:
    """Re-check edge membership and interior disjointness, independently."""
    u, v = family.endpoints
    seen_interior: set[str] = set()
    for path in family.paths:
        if path[0] != u or path[-1] != v:
            raise AssertionError("path endpoints mismatch")
        for a, b in zip(path, path[1:]):
            if not g.adjacent(g.id_of(a), g.id_of(b)):
                raise AssertionError(f"family uses a non-edge {a}-{b}")
        interior = set(path[1:-1])
        if len(interior) != len(path) - 2 or interior & seen_interior:
            raise AssertionError("paths share an interior vertex")
        if u in interior or v in interior:
            raise AssertionError("endpoint reappears inside a path")
        seen_interior |= interior


def liu_scan(g: SkeletonGraph, k: int) -> LiuScan:
    """Check k independent paths between every pair at distance two.

    When this holds on a connected graph with more than k vertices, the
    graph is k-connected.
    """
    if g.n <= k:
        raise TooSmall(f"need more than {k} vertices, have {g.n}")
    if not g.is_connected():
        raise GraphNotConnected("scan is defined for connected graphs")
    for u in range(g.n):
        at_two = sorted(
            {w for nb in g.adj[u] for w in g.adj[nb]} - set(g.adj[u]) - {u}
        )
        for v in at_two:
            if v <= u:
                continue
            if local_connectivity(g, u, v) < k:
                return LiuScan(False, k, (g.labels[u], g.labels[v]))
    return LiuScan(True, k, None)


# -- neighborhood subcomplexes ------------------------------------------


def outside_subcomplex(c: SimplicialComplex, vertex: Label) -> SimplicialComplex:
    """The subcomplex induced on vertices not in the closed neighborhood."""
    rest = set(c.vertices) - neighborhood(c, vertex)
    if not rest:
        raise EmptyOutside(f"every vertex is adjacent to {vertex!r}")
    return c.induced(rest)


def is_outside_connected(c: SimplicialComplex, vertex: Label) -> bool:
    return skeleton(outside_subcomplex(c, vertex)).is_connected()

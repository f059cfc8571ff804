"""Pseudomanifold structure, homology-manifold recognition and shelling.

The checks here follow the chain: homology manifold => normal
pseudomanifold => pseudomanifold, each verified independently so the
chain itself can be asserted on test corpora.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import Face, SimplicialComplex
from .errors import BadSeed, NotPseudomanifold, NotPure, SearchBudgetExceeded
from .graphs import skeleton
from .homology import sphere_pattern, z2_betti


@dataclass(frozen=True)
class FacetGraph:
    facets: tuple[Face, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class NormalityResult:
    normal: bool
    witness: Face | None


@dataclass(frozen=True)
class ManifoldClass:
    pseudomanifold: str  # "closed", "with_boundary" or "no"
    strongly_connected: bool
    normal: bool | None  # None when not a pseudomanifold
    homology_manifold: bool
    homology_sphere: bool
    witnesses: dict


def _ridge_counts(c: SimplicialComplex) -> dict[tuple[int, ...], list[int]]:
    """Map each ridge to the indices of the facets containing it."""
    out: dict[tuple[int, ...], list[int]] = {}
    for i, f in enumerate(c._facets):  # noqa: SLF001 - intra-package id view
        for ridge in itertools.combinations(f, len(f) - 1):
            out.setdefault(ridge, []).append(i)
    return out


def facet_graph(c: SimplicialComplex) -> FacetGraph:
    """Facets as nodes, adjacency = sharing a ridge."""
    if not c.is_pure:
        raise NotPure("facet graph is defined for pure complexes")
    edges = set()
    for members in _ridge_counts(c).values():
        for a, b in itertools.combinations(members, 2):
            edges.add((a, b) if a < b else (b, a))
    return FacetGraph(c.facets, tuple(sorted(edges)))


def is_strongly_connected(c: SimplicialComplex) -> bool:
    g = facet_graph(c)
    n = len(g.facets)
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == n


def is_pseudomanifold(c: SimplicialComplex) -> str:
    """"closed" (every ridge in 2 facets), "with_boundary" (in 1 or 2), or "no".

    Both positive answers require strong connectivity.
    """
    if not c.is_pure:
        raise NotPure("pseudomanifold checks need a pure complex")
    counts = [len(m) for m in _ridge_counts(c).values()]
    if any(k > 2 for k in counts) or not is_strongly_connected(c):
        return "no"
    return "closed" if all(k == 2 for k in counts) else "with_boundary"


def is_normal(c: SimplicialComplex) -> NormalityResult:
    """Are all links of dimension at least one connected?"""
    if is_pseudomanifold(c) == "no":
        raise NotPseudomanifold("normality is defined on pseudomanifolds")
    d = c.dim
    for k in range(0, d):  # faces with link dimension d-k >= 1
        for face in sorted(c.faces(k)) if k else [()]:
            lk = c.link(face)
            if not skeleton(lk).is_connected():
                return NormalityResult(False, face)
    return NormalityResult(True, None)


def verify_barnette_antistar(c: SimplicialComplex) -> tuple[bool, str | None]:
    """Strong connectivity of every vertex antistar; witness on failure."""
    if is_pseudomanifold(c) == "no":
        raise NotPseudomanifold("antistar connectivity assumes a pseudomanifold")
    for v in c.vertices:
        if not is_strongly_connected(c.antistar(v)):
            return False, v
    return True, None


def is_homology_manifold(c: SimplicialComplex) -> tuple[bool, Face | None]:
    """Do all face links carry the GF(2) homology of matching spheres?

    Requires a pure connected complex; the witness is the first face whose
    link deviates.
    """
    if not c.is_pure:
        raise NotPure("homology manifold check needs a pure complex")
    if not skeleton(c).is_connected():
        return False, None
    d = c.dim
    for k in range(1, d + 1):  # facets have empty links: nothing to check
        expected_dim = d - k
        for face in sorted(c.faces(k)):
            lk = c.link(face)
            want = sphere_pattern(expected_dim, max(lk.dim, expected_dim) + 1)
            got = z2_betti(lk)
            got = got + (0,) * (len(want) - len(got))
            if got != want:
                return False, face
    return True, None


def is_homology_sphere(c: SimplicialComplex) -> bool:
    ok, _ = is_homology_manifold(c)
    return ok and z2_betti(c) == sphere_pattern(c.dim, c.dim + 1)


def manifold_class(c: SimplicialComplex) -> ManifoldClass:
    """All manifold-like flags bundled, with failure witnesses."""
    witnesses: dict = {}
    pm = is_pseudomanifold(c)
    strongly = is_strongly_connected(c)
    normal: bool | None = None
    if pm != "no":
        res = is_normal(c)
        normal = res.normal
        if res.witness is not None:
            witnesses["normal"] = res.witness
    hm, hw = is_homology_manifold(c)
    if hw is not None:
        witnesses["homology_manifold"] = hw
    hs = hm and z2_betti(c) == sphere_pattern(c.dim, c.dim + 1)
    return ManifoldClass(pm, strongly, normal, hm, hs, witnesses)


# -- shelling search -----------------------------------------------------


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple[Face, ...]


def _step_ok(chosen: list[frozenset], cand: frozenset, d: int) -> bool:
    """Is cand's intersection with the union of chosen pure of dimension d-1?"""
    meets = {cand & f for f in chosen}
    meets.discard(frozenset())
    ridges = [m for m in meets if len(m) == d]
    if not ridges:
        return False
    return all(any(m <= r for r in ridges) for m in meets)


def verify_shelling(c: SimplicialComplex, order: Sequence[Face]) -> bool:
    """Re-check the shelling condition from scratch."""
    sets = [frozenset(f) for f in order]
    if sorted(tuple(sorted(f)) for f in order) != sorted(c.facets):
        return False
    d = c.dim
    for k in range(1, len(sets)):
        if not _step_ok(sets[:k], sets[k], d):
            return False
    return True


def find_shelling(
    c: SimplicialComplex,
    seed: Iterable[Face] | None = None,
    *,
    ordered: bool = False,
    budget: int = 10_000_000,
) -> ShellingOrder | None:
    """Backtracking search for a shelling order, optionally seeded.

    With ``ordered=True`` the seed must itself be a valid shelling prefix
    (``BadSeed`` otherwise); with the default unordered mode the search is
    constrained to exhaust the seed facets, in any workable order, before
    touching the rest.  Returns ``None`` when no shelling extends the
    constraints; raises ``SearchBudgetExceeded`` when the node budget runs
    out before the search can decide.
    """
    if not c.is_pure:
        raise NotPure("shellings are defined for pure complexes")
    d = c.dim
    all_facets = [frozenset(f) for f in c.facets]
    facet_keys = {frozenset(f): tuple(f) for f in c.facets}

    chosen: list[frozenset] = []
    seed_pool: set[frozenset] = set()
    if seed is not None:
        seed_sets = [frozenset(tuple(sorted(str(v) for v in f))) for f in seed]
        unknown = [s for s in seed_sets if s not in facet_keys]
        if unknown:
            raise BadSeed(f"seed entries are not facets: {sorted(unknown[0])}")
        if ordered:
            for k, s in enumerate(seed_sets):
                if s in chosen or (k > 0 and not _step_ok(chosen, s, d)):
                    raise BadSeed(f"seed breaks the shelling condition at step {k + 1}")
                chosen.append(s)
        else:
            seed_pool = set(seed_sets)

    remaining = [f for f in all_facets if f not in chosen]
    nodes = 0
    dead: set[frozenset] = set()  # chosen-sets that cannot be completed

    def candidates(pool: list[frozenset]) -> list[frozenset]:
        if seed_pool and any(f in seed_pool for f in pool):
            pool = [f for f in pool if f in seed_pool]
        if not chosen:
            return sorted(pool, key=lambda f: facet_keys[f])
        scored = []
        for f in pool:
            if _step_ok(chosen, f, d):
                shared = sum(1 for g in chosen if len(f & g) == d)
                scored.append((-shared, facet_keys[f], f))
        return [f for _, _, f in sorted(scored)]

    def search(pool: list[frozenset]) -> bool:
        nonlocal nodes
        if not pool:
            return True
        state = frozenset(chosen)
        if state in dead:
            return False
        for f in candidates(pool):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"no decision within {budget} expansions")
            chosen.append(f)
            if search([g for g in pool if g is not f]):
                return True
            chosen.pop()
        dead.add(state)
        return False

    if not search(remaining):
        return None
    order = tuple(facet_keys[f] for f in chosen)
    if not verify_shelling(c, order):
        raise AssertionError("search produced an order that fails revalidation")
    return ShellingOrder(order)

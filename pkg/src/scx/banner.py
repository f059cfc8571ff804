"""Clique machinery over the 1-skeleton and the banner hierarchy.

A clique is spanning when it is itself a face and critical when deleting
some vertex leaves a face.  A pure d-complex is banner when every
critical (d+1)-clique is spanning and no boundary of a (d+1)-simplex
occurs as a subcomplex; strongly banner tightens "critical" to "every";
flag complexes have all cliques spanning.  The banner number is the least
j such that the link of every j-vertex face is banner or a triangle
cycle.

Cliques are enumerated in label-lexicographic order by a bounded DFS over
adjacency bitmasks, so witnesses are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .complexes import Face, Label, SimplicialComplex
from .errors import NoBoundary, NotAClique, NotPure

_TRIANGLE_F_VECTOR = (1, 3, 3)


@dataclass(frozen=True)
class BannerWitness:
    level: str  # which property the witness refutes
    kind: str  # "non_spanning_clique", "critical_non_spanning_clique", "simplex_boundary"
    vertices: Face


@dataclass(frozen=True)
class BannerClass:
    flag: bool
    strongly_banner: bool
    banner: bool
    witness: BannerWitness | None


@dataclass(frozen=True)
class BannerNumber:
    value: int | None  # None when no admissible level exists
    passed_faces: int  # how many links were checked at the accepted level
    failing_face: Face | None  # a witness one level below (or at d-1 if undefined)


@dataclass(frozen=True)
class TildeCliques:
    apex: Label
    plain: tuple[Face, ...]  # cliques of the ball's skeleton
    from_boundary: tuple[Face, ...]  # boundary cliques plus the apex
    stranded: tuple[Face, ...]  # apex cliques not supported by the boundary


def _adjacency_masks(c: SimplicialComplex) -> list[int]:
    masks = [0] * c.n_vertices
    for a, b in c.faces_ids(2):
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    return masks


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def cliques_ids(c: SimplicialComplex, j: int) -> Iterator[tuple[int, ...]]:
    """All j-vertex cliques of the skeleton, ascending id tuples."""
    if j < 1:
        return
    n = c.n_vertices
    if j == 1:
        yield from ((i,) for i in range(n))
        return
    masks = _adjacency_masks(c)
    full = (1 << n) - 1

    def extend(prefix: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == j:
            yield prefix
            return
        need = j - len(prefix)
        for v in _iter_bits(cand):
            rest = cand & masks[v] & ~((1 << (v + 1)) - 1)
            if rest.bit_count() >= need - 1:
                yield from extend(prefix + (v,), rest)

    yield from extend((), full)


def cliques(c: SimplicialComplex, j: int) -> Iterator[Face]:
    """All j-vertex cliques as label tuples, lexicographic order."""
    for ids in cliques_ids(c, j):
        yield tuple(c.vertices[i] for i in ids)


def _require_clique(c: SimplicialComplex, vertices: Iterable[Label]) -> Face:
    t = tuple(sorted(str(v) for v in vertices))
    if len(set(t)) != len(t):
        raise NotAClique(f"{t} repeats a vertex")
    for a, b in itertools.combinations(t, 2):
        if not c.has_face((a, b)):
            raise NotAClique(f"{t} misses the edge {a}-{b}")
    return t


def is_spanning(c: SimplicialComplex, vertices: Iterable[Label]) -> bool:
    return c.has_face(_require_clique(c, vertices))


def is_critical(c: SimplicialComplex, vertices: Iterable[Label]) -> bool:
    t = _require_clique(c, vertices)
    return any(c.has_face(t[:i] + t[i + 1 :]) for i in range(len(t)))


def contains_simplex_boundary(c: SimplicialComplex, k: int) -> Face | None:
    """A (k+1)-vertex set all of whose k-subsets are faces, if one exists.

    For ``k = dim + 1`` this detects the forbidden boundary-of-a-simplex
    subcomplex of the banner definitions.
    """
    if k < 2:
        raise ValueError("subcomplex probe needs k >= 2")
    for t in cliques_ids(c, k + 1):
        labels = tuple(c.vertices[i] for i in t)
        if all(
            c.has_face(labels[:i] + labels[i + 1 :]) for i in range(len(labels))
        ):
            return labels
    return None


def classify(c: SimplicialComplex) -> BannerClass:
    """Evaluate flag / strongly banner / banner with a failure witness.

    The witness explains the weakest property that fails (a banner
    violation when present, else a strongly-banner one, else a flag one).
    The implication chain flag => strongly banner => banner holds for
    dimension >= 1; zero-dimensional complexes on several vertices are
    flag yet not banner because two bare points form the boundary of an
    edge.
    """
    if not c.is_pure:
        raise NotPure("banner classification needs a pure complex")
    d = c.dim

    forbidden = contains_simplex_boundary(c, d + 1) if d >= 1 else (
        c.vertices[:2] if c.n_vertices >= 2 else None
    )
    critical_viol: Face | None = None
    spanning_viol: Face | None = None
    for t in cliques(c, d + 1):
        if c.has_face(t):
            continue
        if spanning_viol is None:
            spanning_viol = t
        if any(c.has_face(t[:i] + t[i + 1 :]) for i in range(len(t))):
            critical_viol = t
            break

    flag_viol: Face | None = None
    for size in range(3, d + 3):
        found_any = False
        for t in cliques(c, size):
            found_any = True
            if not c.has_face(t):
                flag_viol = t
                break
        if flag_viol is not None or not found_any:
            break

    banner = forbidden is None and critical_viol is None
    strongly = forbidden is None and spanning_viol is None
    flag = flag_viol is None

    witness: BannerWitness | None = None
    if not banner:
        if critical_viol is not None:
            witness = BannerWitness("banner", "critical_non_spanning_clique", critical_viol)
        else:
            witness = BannerWitness("banner", "simplex_boundary", forbidden)
    elif not strongly:
        witness = BannerWitness("strongly_banner", "non_spanning_clique", spanning_viol)
    elif not flag:
        witness = BannerWitness("flag", "non_spanning_clique", flag_viol)
    return BannerClass(flag, strongly, banner, witness)


def is_triangle_cycle(c: SimplicialComplex) -> bool:
    """Is the complex exactly the boundary of a triangle?"""
    return c.dim == 1 and c.f_vector() == _TRIANGLE_F_VECTOR


def banner_or_triangle(c: SimplicialComplex) -> bool:
    if is_triangle_cycle(c):
        return True
    if not c.is_pure:
        return False
    return classify(c).banner


def banner_number(c: SimplicialComplex) -> BannerNumber:
    """The least j whose j-vertex face links are all banner-or-triangle.

    The empty face counts at level 0, so value 0 means the complex itself
    qualifies.  When no level up to d-1 works the value is None and the
    failing face documents the last failure; this cannot happen for
    normal pseudomanifolds.
    """
    if not c.is_pure:
        raise NotPure("banner number needs a pure complex")
    d = c.dim
    prev_fail: Face | None = None
    for j in range(0, max(d, 1)):
        failed: Face | None = None
        checked = 0
        for face in sorted(c.faces(j)) if j else [()]:
            checked += 1
            if not banner_or_triangle(c.link(face)):
                failed = face
                break
        if failed is None:
            return BannerNumber(j, checked, prev_fail)
        prev_fail = failed
    return BannerNumber(None, 0, prev_fail)


def classify_tilde_cliques(ball: SimplicialComplex, j: int) -> TildeCliques:
    """Partition the j-cliques of the boundary-coned complex into three kinds.

    plain: cliques avoiding the apex (exactly the skeleton cliques of the
    input); from_boundary: boundary-skeleton cliques extended by the apex;
    stranded: remaining apex cliques, i.e. all-boundary-vertex cliques of
    the input skeleton that are not boundary-skeleton cliques.  A
    non-empty stranded class blocks the product rule for the coned
    complex.
    """
    if j < 1:
        raise ValueError("clique size must be positive")
    bd = ball.boundary()
    if bd is None:
        raise NoBoundary("complex is closed; nothing was coned")
    closed = ball.tilde()
    apex = (set(closed.vertices) - set(ball.vertices)).pop()
    bd_edges = bd.faces(2)
    bd_vertices = set(bd.vertices)

    plain: list[Face] = []
    from_boundary: list[Face] = []
    stranded: list[Face] = []
    for t in cliques(closed, j):
        if apex not in t:
            plain.append(t)
            continue
        rest = tuple(v for v in t if v != apex)
        if all(v in bd_vertices for v in rest) and all(
            (a, b) in bd_edges for a, b in itertools.combinations(rest, 2)
        ):
            from_boundary.append(t)
        else:
            stranded.append(t)
    return TildeCliques(apex, tuple(plain), tuple(from_boundary), tuple(stranded))

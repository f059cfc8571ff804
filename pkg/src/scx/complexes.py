"""Pure finite simplicial complexes stored as facet lists.

Vertex labels are arbitrary non-whitespace strings, interned to dense
integer ids in label-sorted order, so id-lexicographic and
label-lexicographic enumeration agree.  At the API boundary faces travel
as sorted label tuples; internally they are sorted id tuples.

A complex is immutable once built.  Per-cardinality face sets are
generated on demand and memoized behind a lock, so complexes can be
shared freely between threads.  The empty complex is unrepresentable:
every constructor raises ``EmptyComplex`` rather than producing one.
"""

from __future__ import annotations

import itertools
import threading
from typing import Iterable, Iterator

from .errors import (
    EmptyComplex,
    LabelClash,
    MalformedFace,
    NoBoundary,
    NotAFace,
    NotPure,
    UnknownVertex,
)

Label = str
Face = tuple[Label, ...]
FVector = tuple[int, ...]


def _normalize_facet(facet: Iterable[Label]) -> tuple[Label, ...]:
    vertices = [str(v) for v in facet]
    if not vertices:
        raise MalformedFace("empty facet")
    for v in vertices:
        if not v or any(ch.isspace() for ch in v):
            raise MalformedFace(f"label {v!r} is empty or contains whitespace")
    if len(set(vertices)) != len(vertices):
        raise MalformedFace(f"facet {vertices} repeats a vertex")
    return tuple(sorted(vertices))


class SimplicialComplex:
    """A finite simplicial complex given by its maximal faces."""

    __slots__ = (
        "_labels",
        "_index",
        "_facets",
        "_facet_sets",
        "dim",
        "is_pure",
        "absorbed",
        "_face_cache",
        "_lock",
    )

    def __init__(self, facets: Iterable[Iterable[Label]]):
        cleaned = [_normalize_facet(f) for f in facets]
        if not cleaned:
            raise EmptyComplex("a complex needs at least one facet")

        # Absorb duplicates and non-maximal entries, counting what was dropped.
        by_size = sorted({frozenset(f) for f in cleaned}, key=len, reverse=True)
        maximal: list[frozenset[Label]] = []
        for cand in by_size:
            if not any(cand < kept for kept in maximal):
                maximal.append(cand)
        self.absorbed = len(cleaned) - len(maximal)

        self._labels: tuple[Label, ...] = tuple(sorted(set().union(*maximal)))
        self._index: dict[Label, int] = {v: i for i, v in enumerate(self._labels)}
        id_facets = sorted(tuple(sorted(self._index[v] for v in f)) for f in maximal)
        self._facets: tuple[tuple[int, ...], ...] = tuple(id_facets)
        self._facet_sets: tuple[frozenset[int], ...] = tuple(frozenset(f) for f in id_facets)
        sizes = {len(f) for f in id_facets}
        self.dim = max(sizes) - 1
        self.is_pure = len(sizes) == 1
        self._face_cache: dict[int, frozenset[tuple[int, ...]]] = {}
        self._lock = threading.Lock()

    # -- basic accessors ------------------------------------------------

    @property
    def vertices(self) -> tuple[Label, ...]:
        return self._labels

    @property
    def n_vertices(self) -> int:
        return len(self._labels)

    @property
    def facets(self) -> tuple[Face, ...]:
        return tuple(self._face_labels(f) for f in self._facets)

    def _face_labels(self, ids: Iterable[int]) -> Face:
        return tuple(sorted(self._labels[i] for i in ids))

    def _face_ids(self, labels: Iterable[Label]) -> tuple[int, ...]:
        try:
            return tuple(sorted(self._index[str(v)] for v in labels))
        except KeyError as exc:
            raise UnknownVertex(f"unknown vertex {exc.args[0]!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(dim={self.dim}, vertices={self.n_vertices}, "
            f"facets={len(self._facets)})"
        )

    # -- face enumeration -----------------------------------------------

    def faces_ids(self, k: int) -> frozenset[tuple[int, ...]]:
        """All faces with exactly ``k`` vertices, as id tuples."""
        if k < 1 or k > self.dim + 1:
            return frozenset()
        with self._lock:
            cached = self._face_cache.get(k)
            if cached is None:
                cached = frozenset(
                    sub for f in self._facets for sub in itertools.combinations(f, k)
                )
                self._face_cache[k] = cached
            return cached

    def faces(self, k: int) -> frozenset[Face]:
        """All faces with exactly ``k`` vertices, as label tuples."""
        return frozenset(self._face_labels(f) for f in self.faces_ids(k))

    def all_faces(self) -> frozenset[Face]:
        out: set[Face] = set()
        for k in range(1, self.dim + 2):
            out.update(self.faces(k))
        return frozenset(out)

    def has_face(self, face: Iterable[Label]) -> bool:
        wanted = {str(v) for v in face}
        ids = set()
        for v in wanted:
            i = self._index.get(v)
            if i is None:
                return False
            ids.add(i)
        return any(ids <= fs for fs in self._facet_sets)

    def f_vector(self) -> FVector:
        """Face counts by dimension, starting with the empty face: (1, f0, ..., fd)."""
        return (1,) + tuple(len(self.faces_ids(k)) for k in range(1, self.dim + 2))

    def edges_ids(self) -> frozenset[tuple[int, int]]:
        return self.faces_ids(2)  # type: ignore[return-value]

    # -- local subcomplexes ----------------------------------------------

    def link(self, face: Iterable[Label]) -> "SimplicialComplex":
        """Faces disjoint from ``face`` whose union with it is again a face.

        The link of the empty face is the complex itself; the link of a
        facet would be empty and raises ``EmptyComplex``.
        """
        try:
            ids = self._face_ids(face)
        except UnknownVertex:
            raise NotAFace(f"{tuple(sorted(str(v) for v in face))} is not a face") from None
        if not ids:
            return self
        idset = set(ids)
        if not any(idset <= fs for fs in self._facet_sets):
            raise NotAFace(f"{tuple(sorted(face))} is not a face")
        residues = [fs - idset for fs in self._facet_sets if idset <= fs]
        residues = [r for r in residues if r]
        if not residues:
            raise EmptyComplex("link of a facet is empty")
        return SimplicialComplex(self._face_labels(r) for r in residues)

    def star(self, vertex: Label) -> "SimplicialComplex":
        """The cone over ``link(vertex)`` with apex ``vertex``."""
        i = self._index.get(str(vertex))
        if i is None:
            raise UnknownVertex(f"unknown vertex {vertex!r}")
        return SimplicialComplex(
            self._face_labels(fs) for fs in self._facet_sets if i in fs
        )

    def antistar(self, vertex: Label) -> "SimplicialComplex":
        """The subcomplex induced on all vertices except ``vertex``."""
        if str(vertex) not in self._index:
            raise UnknownVertex(f"unknown vertex {vertex!r}")
        rest = [v for v in self._labels if v != str(vertex)]
        if not rest:
            raise EmptyComplex("antistar of the only vertex is empty")
        return self.induced(rest)

    def induced(self, vertex_set: Iterable[Label]) -> "SimplicialComplex":
        """Keep exactly the faces whose vertices all lie in ``vertex_set``."""
        wanted = {str(v) for v in vertex_set}
        if not wanted:
            raise EmptyComplex("induced subcomplex on the empty vertex set")
        for v in wanted:
            if v not in self._index:
                raise UnknownVertex(f"unknown vertex {v!r}")
        ids = {self._index[v] for v in wanted}
        pieces = {fs & ids for fs in self._facet_sets}
        pieces.discard(frozenset())
        return SimplicialComplex(self._face_labels(p) for p in pieces)

    # -- cone-like constructions ------------------------------------------

    def _fresh_labels(self, count: int) -> list[Label]:
        out: list[Label] = []
        n = 0
        while len(out) < count:
            cand = f"_apex{n}"
            if cand not in self._index:
                out.append(cand)
            n += 1
        return out

    def _fresh_label(self) -> Label:
        return self._fresh_labels(1)[0]

    def _check_fresh(self, label: Label) -> Label:
        label = str(label)
        if label in self._index:
            raise LabelClash(f"apex label {label!r} already in use")
        return label

    def cone(self, apex: Label | None = None) -> "SimplicialComplex":
        apex = self._fresh_label() if apex is None else self._check_fresh(apex)
        return SimplicialComplex(f + (apex,) for f in self.facets)

    def suspension(
        self, north: Label | None = None, south: Label | None = None
    ) -> "SimplicialComplex":
        if north is None and south is None:
            north, south = self._fresh_labels(2)
        if north is None or south is None or north == south:
            raise LabelClash("suspension needs two distinct fresh apex labels")
        north, south = self._check_fresh(north), self._check_fresh(south)
        facets = [f + (north,) for f in self.facets]
        facets += [f + (south,) for f in self.facets]
        return SimplicialComplex(facets)

    def boundary(self) -> "SimplicialComplex | None":
        """The complex generated by ridges lying in exactly one facet.

        Returns ``None`` when there is no boundary (the complex is closed);
        the empty complex itself is unrepresentable.
        """
        if not self.is_pure:
            raise NotPure("boundary is defined for pure complexes")
        counts: dict[tuple[int, ...], int] = {}
        for f in self._facets:
            for ridge in itertools.combinations(f, len(f) - 1):
                counts[ridge] = counts.get(ridge, 0) + 1
        rim = [r for r, c in counts.items() if c == 1]
        if not rim:
            return None
        return SimplicialComplex(self._face_labels(r) for r in rim)

    def tilde(self, apex: Label | None = None) -> "SimplicialComplex":
        """Close the complex off by coning a fresh apex over its boundary."""
        bd = self.boundary()
        if bd is None:
            raise NoBoundary("complex is closed, nothing to cone over")
        apex = self._fresh_label() if apex is None else self._check_fresh(apex)
        facets = list(self.facets)
        facets += [f + (apex,) for f in bd.facets]
        return SimplicialComplex(facets)


def from_facets(facets: Iterable[Iterable[Label]]) -> SimplicialComplex:
    """Build a complex from facet label lists; non-maximal entries are absorbed."""
    return SimplicialComplex(facets)


# -- the ".scx" facet-list text format ----------------------------------


def loads(text: str) -> SimplicialComplex:
    """Parse the facet-list format: one facet per line, '#' starts a comment."""
    facets = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        facets.append(line.split())
    return SimplicialComplex(facets)


def dumps(c: SimplicialComplex) -> str:
    """Serialize to the facet-list format, facets in lexicographic order."""
    return "".join(" ".join(f) + "\n" for f in sorted(c.facets))


def load(path) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(c: SimplicialComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(c))

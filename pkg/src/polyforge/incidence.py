"""Polytopes as vertex-facet incidences, and their face lattices.

A polytope is given only combinatorially: a dimension, a vertex count and
the vertex sets of its facets.  Every other face is an intersection of
facets, so the face lattice is the intersection closure of the facet
family together with the full vertex set.  Internally faces are handled as
integer bitmasks; the public surface uses ``frozenset``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import BadRank, NotAFace, NotGraded, UnknownVertex

Face = frozenset


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _face_key(face: Iterable[int]) -> tuple:
    return tuple(sorted(face))


@dataclass(frozen=True)
class IncidenceStructure:
    """A ``dim``-polytope on vertices ``0..num_vertices-1`` given by its facets.

    Facets are kept in lexicographic order of their sorted vertex tuples.
    Duplicates are *not* removed, so a malformed facet list survives long
    enough for :func:`validate_lattice` to report it.
    """

    dim: int
    num_vertices: int
    facets: tuple
    labels: Mapping[int, str] | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        fs = tuple(sorted((frozenset(f) for f in self.facets), key=_face_key))
        object.__setattr__(self, "facets", fs)

    @classmethod
    def from_facets(cls, dim: int, facets: Iterable[Iterable[int]], num_vertices: int | None = None,
                    labels: Mapping[int, str] | None = None) -> "IncidenceStructure":
        facets = [frozenset(f) for f in facets]
        if num_vertices is None:
            num_vertices = 1 + max((v for f in facets for v in f), default=0)
        return cls(dim, num_vertices, tuple(facets), labels)

    @property
    def vertices(self) -> frozenset:
        return frozenset(range(self.num_vertices))

    def invariant_violations(self) -> list[str]:
        out = []
        n = self.num_vertices
        if self.dim < 0:
            out.append(f"negative dimension {self.dim}")
        if n < 1:
            out.append("no vertices")
        for f in self.facets:
            bad = [v for v in f if not 0 <= v < n]
            if bad:
                out.append(f"facet {_face_key(f)} uses unknown vertices {bad}")
        if self.dim >= 1:
            covered = frozenset().union(*self.facets) if self.facets else frozenset()
            missing = sorted(self.vertices - covered)
            if missing:
                out.append(f"vertices {missing} lie in no facet")
            if len(self.facets) < self.dim + 1:
                out.append(f"only {len(self.facets)} facets for dimension {self.dim}")
        for i, f in enumerate(self.facets):
            for g in self.facets[i + 1:]:
                if f == g:
                    out.append(f"duplicated facet {_face_key(f)}")
                elif f < g or g < f:
                    out.append(f"facet {_face_key(min(f, g, key=len))} is contained in "
                               f"facet {_face_key(max(f, g, key=len))}")
        return out

    def relabel(self, perm: Sequence[int]) -> "IncidenceStructure":
        """Rename vertex ``v`` to ``perm[v]``."""
        facets = [frozenset(perm[v] for v in f) for f in self.facets]
        labels = None
        if self.labels:
            labels = {perm[v]: s for v, s in self.labels.items()}
        return IncidenceStructure(self.dim, self.num_vertices, tuple(facets), labels)

    # -- JSON ---------------------------------------------------------------

    def to_dict(self) -> dict:
        d = {"dim": self.dim, "vertices": self.num_vertices,
             "facets": [sorted(f) for f in self.facets]}
        if self.labels:
            d["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return d

    @classmethod
    def from_dict(cls, data: Mapping) -> "IncidenceStructure":
        labels = data.get("labels")
        if labels is not None:
            labels = {int(k): str(v) for k, v in labels.items()}
        return cls(int(data["dim"]), int(data["vertices"]),
                   tuple(frozenset(int(v) for v in f) for f in data["facets"]), labels)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


class FVector(tuple):
    """``(f_0, ..., f_{d-1})`` as a tuple, plus the usual boundary conventions."""

    @property
    def dim(self) -> int:
        return len(self)

    def ext(self, k: int) -> int:
        """f_k with f_{-1} = f_d = 1 and zero outside ``[-1, d]``."""
        if k == -1 or k == len(self):
            return 1
        if 0 <= k < len(self):
            return self[k]
        return 0

    def __repr__(self):
        return f"FVector{tuple(self)}"


@dataclass(frozen=True)
class FaceHandle:
    name: str
    vertex_set: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vertex_set", frozenset(self.vertex_set))


class FaceLattice:
    """All nonempty faces of a polytope, graded by dimension.

    ``faces_by_dim[k]`` lists the k-faces (sorted); the top entry is the
    polytope itself.  ``covers[face]`` lists the faces one rank below it.
    Built by :func:`enumerate_face_lattice`; treat as immutable.
    """

    def __init__(self, structure: IncidenceStructure, masks_by_rank: list[list[int]],
                 children: dict[int, tuple[int, ...]]):
        self.structure = structure
        self._masks_by_rank = masks_by_rank
        self._children = children
        self.rank_of_mask = {m: r for r, ms in enumerate(masks_by_rank) for m in ms}

    @property
    def dim(self) -> int:
        return len(self._masks_by_rank) - 1

    @cached_property
    def faces_by_dim(self) -> tuple:
        return tuple(tuple(sorted((from_mask(m) for m in ms), key=_face_key))
                     for ms in self._masks_by_rank)

    @cached_property
    def cover_relations(self) -> dict:
        return {from_mask(m): tuple(from_mask(c) for c in cs) for m, cs in self._children.items()}

    def faces(self, k: int) -> tuple:
        if not 0 <= k <= self.dim:
            return ()
        return self.faces_by_dim[k]

    def masks(self, k: int) -> list[int]:
        if not 0 <= k <= self.dim:
            return []
        return self._masks_by_rank[k]

    def children(self, mask: int) -> tuple[int, ...]:
        return self._children.get(mask, ())

    def is_face(self, vertices: Iterable[int]) -> bool:
        return to_mask(vertices) in self.rank_of_mask

    def rank(self, vertices: Iterable[int]) -> int:
        return self.rank_of_mask[to_mask(vertices)]

    def f_vector(self) -> FVector:
        return FVector(len(ms) for ms in self._masks_by_rank[:-1])

    def edges(self) -> list[tuple[int, int]]:
        return [tuple(sorted(f)) for f in self.faces(1) if len(f) == 2]

    def __len__(self):
        return sum(len(ms) for ms in self._masks_by_rank)

    def __repr__(self):
        return f"FaceLattice(dim={self.dim}, f={tuple(self.f_vector())})"


def _maximal(cands: Iterable[int]) -> tuple[int, ...]:
    # larger sets first: anything contained in a non-maximal candidate is
    # already contained in an accepted maximal one
    out: list[int] = []
    for c in sorted(set(cands), key=lambda m: -m.bit_count()):
        if not any(c & a == c for a in out):
            out.append(c)
    return tuple(out)


@lru_cache(maxsize=4096)
def enumerate_face_lattice(P: IncidenceStructure) -> FaceLattice:
    """Face lattice of ``P`` by intersection closure of its facets.

    The rank of a face is the length of the longest chain down to a minimal
    face.  Raises :class:`NotGraded` when some face covers faces of
    different ranks.
    """
    full = (1 << P.num_vertices) - 1
    facet_masks = sorted({to_mask(f) for f in P.facets})

    seen = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for g in frontier:
            for f in facet_masks:
                h = g & f
                if h and h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt

    children = {}
    for g in seen:
        children[g] = _maximal(g & f for f in facet_masks if g & f and g & f != g)

    rank: dict[int, int] = {}
    for g in sorted(seen, key=int.bit_count):
        cs = children[g]
        if not cs:
            rank[g] = 0
            continue
        rs = {rank[c] for c in cs}
        if len(rs) != 1:
            raise NotGraded(f"face {_face_key(from_mask(g))} covers faces of ranks {sorted(rs)}")
        rank[g] = rs.pop() + 1

    top = rank[full]
    by_rank: list[list[int]] = [[] for _ in range(top + 1)]
    for g, r in rank.items():
        by_rank[r].append(g)
    for ms in by_rank:
        ms.sort()
    return FaceLattice(P, by_rank, children)


def f_vector(L: FaceLattice | IncidenceStructure) -> FVector:
    if isinstance(L, IncidenceStructure):
        L = enumerate_face_lattice(L)
    return L.f_vector()


def _check_vertex(L: FaceLattice, v: int):
    if not isinstance(v, int) or not 0 <= v < L.structure.num_vertices:
        raise UnknownVertex(f"vertex {v!r} not in 0..{L.structure.num_vertices - 1}")


def graph_degrees(L: FaceLattice) -> dict[int, int]:
    deg = {v: 0 for v in range(L.structure.num_vertices)}
    for a, b in L.edges():
        deg[a] += 1
        deg[b] += 1
    return deg


def is_simple_vertex(L: FaceLattice, v: int) -> bool:
    _check_vertex(L, v)
    return graph_degrees(L)[v] == L.dim


def face_structure(L: FaceLattice, face: Iterable[int]) -> tuple[IncidenceStructure, list[int]]:
    """The face as a polytope in its own right, with vertices renumbered.

    Returns the structure and the list mapping new vertex ids to old ones.
    """
    mask = to_mask(face)
    if mask not in L.rank_of_mask:
        raise NotAFace(f"{sorted(face)} is not a face")
    old = sorted(from_mask(mask))
    new_id = {v: i for i, v in enumerate(old)}
    r = L.rank_of_mask[mask]
    if r == 0:
        return IncidenceStructure(0, 1, ()), old
    facets = [frozenset(new_id[v] for v in from_mask(c)) for c in L.children(mask)]
    return IncidenceStructure(r, len(old), tuple(facets)), old


def vertex_figure(L: FaceLattice, v: int) -> IncidenceStructure:
    """Vertex figure P/v: its vertices are the edges at ``v`` (ordered by the
    other endpoint) and its facets come from the facets of P through ``v``."""
    _check_vertex(L, v)
    d = L.dim
    if d < 1:
        raise BadRank("vertex figure needs dimension >= 1")
    if d == 1:
        return IncidenceStructure(0, 1, ())
    bit = 1 << v
    edges = sorted((m for m in L.masks(1) if m & bit), key=lambda m: m & ~bit)
    facets = []
    for g in L.masks(d - 1):
        if g & bit:
            facets.append(frozenset(i for i, e in enumerate(edges) if e & g == e))
    return IncidenceStructure(d - 1, len(edges), tuple(facets))


def count_faces_containing(L: FaceLattice, v: int, k: int) -> int:
    _check_vertex(L, v)
    bit = 1 << v
    return sum(1 for m in L.masks(k) if m & bit)


def count_faces_meeting(L: FaceLattice, S: Sequence[int], k: int) -> int:
    """Number of k-faces containing at least one vertex of ``S``."""
    for v in S:
        _check_vertex(L, v)
    if len(set(S)) != len(S):
        raise ValueError(f"vertices in {list(S)} are not distinct")
    if len(S) > L.dim + 1:
        raise ValueError(f"|S| = {len(S)} exceeds d+1 = {L.dim + 1}")
    if not 1 <= k <= L.dim - 1:
        raise BadRank(f"k={k} outside [1, {L.dim - 1}]")
    smask = to_mask(S)
    return sum(1 for m in L.masks(k) if m & smask)


def validate_lattice(L: FaceLattice) -> list[str]:
    """Sanity checks on an enumerated lattice; an empty list means all pass."""
    P = L.structure
    out = list(P.invariant_violations())
    d = L.dim
    if d != P.dim:
        out.append(f"lattice has rank {d} but the structure claims dimension {P.dim}")

    atoms = L.masks(0)
    fat = [sorted(from_mask(m)) for m in atoms if m.bit_count() != 1]
    if fat:
        out.append(f"minimal faces that are not single vertices: {fat}")
    if len(atoms) != P.num_vertices:
        out.append(f"{len(atoms)} minimal faces for {P.num_vertices} vertices")

    if d >= 1:
        coatoms = set(L.masks(d - 1))
        listed = [to_mask(f) for f in P.facets]
        if len(listed) != len(set(listed)):
            out.append("facet list contains duplicates")
        not_facets = [sorted(from_mask(m)) for m in set(listed) - coatoms]
        if not_facets:
            out.append(f"listed facets that are not (d-1)-faces: {not_facets}")
        if set(listed) != coatoms and not not_facets:
            out.append("facet list does not match the (d-1)-faces")

    # diamond property, including the intervals through the empty face
    for e in L.masks(1):
        if len(L.children(e)) != 2:
            out.append(f"rank-1 face {sorted(from_mask(e))} has {len(L.children(e))} minimal faces")
    for r in range(2, d + 1):
        for g in L.masks(r):
            counts: dict[int, int] = {}
            for c in L.children(g):
                for x in L.children(c):
                    counts[x] = counts.get(x, 0) + 1
            for x, n in counts.items():
                if n != 2:
                    out.append(f"interval [{sorted(from_mask(x))}, {sorted(from_mask(g))}] "
                               f"has {n} middle elements")

    fv = L.f_vector()
    euler = sum((-1) ** k * f for k, f in enumerate(fv))
    if euler != 1 - (-1) ** d:
        out.append(f"Euler sum {euler} != {1 - (-1) ** d}")

    if P.num_vertices > 1:
        adj: dict[int, list[int]] = {v: [] for v in range(P.num_vertices)}
        for a, b in L.edges():
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        q = deque([0])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    q.append(w)
        if len(seen) != P.num_vertices:
            out.append(f"graph is disconnected ({len(seen)} of {P.num_vertices} reachable)")
    return out

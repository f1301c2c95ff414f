"""Polytope-building operators on vertex-facet incidences.

Every operator returns a :class:`ConstructedPolytope`: the incidence
structure, a set of named faces (handles) that later operators can refer
to, and a readable provenance string.  Vertex numbering is deterministic:
for wedges the vertices of the wedged face come first, then the bottom
copies, then the top copies; apexes of pyramids are always appended last.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .errors import BadDimension, ImproperFace, NotAFace, NotSimple, UnknownVertex
from .incidence import (FaceHandle, FaceLattice, IncidenceStructure, enumerate_face_lattice,
                        graph_degrees)
from .isomorphism import are_isomorphic


@dataclass(frozen=True)
class ConstructedPolytope:
    structure: IncidenceStructure
    handles: Mapping[str, FaceHandle] = field(default_factory=dict, compare=False, hash=False)
    provenance: str = field(default="", compare=False, hash=False)

    @property
    def dim(self) -> int:
        return self.structure.dim

    @property
    def num_vertices(self) -> int:
        return self.structure.num_vertices

    @property
    def lattice(self) -> FaceLattice:
        return enumerate_face_lattice(self.structure)

    def f_vector(self):
        return self.lattice.f_vector()

    def handle(self, name: str) -> FaceHandle:
        try:
            return self.handles[name]
        except KeyError:
            raise KeyError(f"{self.provenance or 'polytope'} has no handle {name!r}; "
                           f"available: {sorted(self.handles)}") from None

    def to_dict(self) -> dict:
        d = self.structure.to_dict()
        if self.handles:
            d["handles"] = {k: sorted(h.vertex_set) for k, h in sorted(self.handles.items())}
        if self.provenance:
            d["provenance"] = self.provenance
        return d

    @classmethod
    def from_dict(cls, data: Mapping) -> "ConstructedPolytope":
        handles = {k: FaceHandle(k, frozenset(v)) for k, v in data.get("handles", {}).items()}
        return cls(IncidenceStructure.from_dict(data), handles, data.get("provenance", ""))

    def __repr__(self):
        return f"ConstructedPolytope({self.provenance or '?'}, dim={self.dim}, n={self.num_vertices})"


def _make(dim, n, facets, handles, provenance) -> ConstructedPolytope:
    hs = {name: FaceHandle(name, frozenset(vs)) for name, vs in handles.items()}
    return ConstructedPolytope(IncidenceStructure(dim, n, tuple(frozenset(f) for f in facets)),
                               hs, provenance)


def _as_face(P: ConstructedPolytope, F) -> tuple[str, frozenset]:
    if isinstance(F, FaceHandle):
        return F.name, F.vertex_set
    if isinstance(F, str):
        h = P.handle(F)
        return h.name, h.vertex_set
    vs = frozenset(F)
    return "{" + ",".join(map(str, sorted(vs))) + "}", vs


def simplex(d: int) -> ConstructedPolytope:
    if d < 0:
        raise BadDimension(f"simplex dimension {d} < 0")
    n = d + 1
    if d == 0:
        return _make(0, 1, [], {}, "T(0)")
    facets = [frozenset(c) for c in combinations(range(n), d)]
    return _make(d, n, facets, {"facet-0": range(d)}, f"T({d})")


def polygon(n: int) -> ConstructedPolytope:
    if n < 3:
        raise BadDimension(f"a polygon needs at least 3 vertices, got {n}")
    facets = [{i, (i + 1) % n} for i in range(n)]
    return _make(2, n, facets, {"vertex-0": {0}, "edge-0": {0, 1}}, f"poly({n})")


def square() -> ConstructedPolytope:
    """Cycle 0-1-2-3; carries prism-style base handles as well."""
    p = polygon(4)
    handles = dict(p.handles)
    handles["bottom-base"] = FaceHandle("bottom-base", frozenset({0, 1}))
    handles["top-base"] = FaceHandle("top-base", frozenset({2, 3}))
    return ConstructedPolytope(p.structure, handles, "sq")


def pentagon() -> ConstructedPolytope:
    p = polygon(5)
    return ConstructedPolytope(p.structure, p.handles, "pent")


def pyramid(P: ConstructedPolytope) -> ConstructedPolytope:
    S = P.structure
    apex = S.num_vertices
    if S.dim == 0:
        facets = [{0}, {apex}]
    else:
        facets = [f | {apex} for f in S.facets] + [S.vertices]
    handles = {k: h.vertex_set for k, h in P.handles.items()}
    napex = sum(1 for k in handles if k.startswith("apex-"))
    handles[f"apex-{napex}"] = {apex}
    handles.setdefault("base", S.vertices)
    return _make(S.dim + 1, apex + 1, facets, handles, f"pyr({P.provenance})")


def kfold_pyramid(P: ConstructedPolytope, t: int) -> ConstructedPolytope:
    if t < 0:
        raise BadDimension(f"pyramid count {t} < 0")
    if t == 0:
        return P
    Q = P
    for _ in range(t):
        Q = pyramid(Q)
    handles = dict(Q.handles)
    handles["base"] = FaceHandle("base", P.structure.vertices)
    return ConstructedPolytope(Q.structure, handles, f"pyr({P.provenance},{t})")


def product(P: ConstructedPolytope, Q: ConstructedPolytope) -> ConstructedPolytope:
    """Cartesian product; vertex (i, j) gets id ``j * n_P + i``."""
    if P.dim < 1 or Q.dim < 1:
        raise BadDimension("product needs both factors of dimension >= 1")
    np_, nq = P.num_vertices, Q.num_vertices
    VP, VQ = range(np_), range(nq)
    facets = [{j * np_ + i for i in F for j in VQ} for F in P.structure.facets]
    facets += [{j * np_ + i for i in VP for j in G} for G in Q.structure.facets]
    return _make(P.dim + Q.dim, np_ * nq, facets, {}, f"{P.provenance}x{Q.provenance}")


def prism(P: ConstructedPolytope) -> ConstructedPolytope:
    R = product(P, simplex(1))
    n = P.num_vertices
    handles = {"bottom-base": range(n), "top-base": range(n, 2 * n)}
    return _make(R.dim, R.num_vertices, R.structure.facets, handles, f"prism({P.provenance})")


def direct_sum(P: ConstructedPolytope, Q: ConstructedPolytope) -> ConstructedPolytope:
    if P.dim < 1 or Q.dim < 1:
        raise BadDimension("direct sum needs both summands of dimension >= 1")
    n = P.num_vertices
    facets = [F | {n + v for v in G} for F in P.structure.facets for G in Q.structure.facets]
    handles = {}
    for k, h in P.handles.items():
        if h.vertex_set != P.structure.vertices:
            handles[f"left:{k}"] = h.vertex_set
    for k, h in Q.handles.items():
        if h.vertex_set != Q.structure.vertices:
            handles[f"right:{k}"] = {n + v for v in h.vertex_set}
    return _make(P.dim + Q.dim, n + Q.num_vertices, facets, handles,
                 f"({P.provenance}+{Q.provenance})")


def wedge(P: ConstructedPolytope, F) -> ConstructedPolytope:
    """Wedge of P at the proper face F (a handle, handle name, or vertex set).

    Vertices of F stay single; every other vertex splits into a bottom and
    a top copy.  The facets are the two bases plus, for each facet G != F
    of P, the set obtained from G by the same splitting rule.
    """
    fname, face = _as_face(P, F)
    S = P.structure
    if not face or face == S.vertices:
        raise ImproperFace(f"wedge needs a proper nonempty face, got {sorted(face)}")
    if not P.lattice.is_face(face):
        raise NotAFace(f"{sorted(face)} is not a face of {P.provenance}")

    inF = sorted(face)
    rest = sorted(S.vertices - face)
    one = {v: i for i, v in enumerate(inF)}
    bot = {v: len(inF) + i for i, v in enumerate(rest)}
    top = {v: len(inF) + len(rest) + i for i, v in enumerate(rest)}
    n = len(inF) + 2 * len(rest)

    def lift(G, copies):
        out = set()
        for v in G:
            if v in one:
                out.add(one[v])
            else:
                out.update(c[v] for c in copies)
        return out

    bottom = lift(S.vertices, [bot])
    topb = lift(S.vertices, [top])
    facets = [bottom, topb] + [lift(G, [bot, top]) for G in S.facets if G != face]
    handles = {"bottom-base": bottom, "top-base": topb, "wedge-face": set(one.values())}
    for k, h in P.handles.items():
        handles[f"bottom:{k}"] = lift(h.vertex_set, [bot])
    return _make(S.dim + 1, n, facets, handles, f"wed({P.provenance},{fname})")


def truncate_vertex(P: ConstructedPolytope, v: int) -> ConstructedPolytope:
    """Cut off the simple vertex ``v``; one new vertex per edge at ``v``."""
    S = P.structure
    if S.dim < 2:
        raise BadDimension("truncation needs dimension >= 2")
    L = P.lattice
    deg = graph_degrees(L)
    if v not in deg:
        raise UnknownVertex(f"vertex {v!r} not in {P.provenance}")
    if deg[v] != S.dim:
        raise NotSimple(f"vertex {v} has degree {deg[v]} in dimension {S.dim}")

    nbrs = sorted(b if a == v else a for a, b in L.edges() if v in (a, b))
    keep = [u for u in range(S.num_vertices) if u != v]
    new_id = {u: i for i, u in enumerate(keep)}
    cut = {u: len(keep) + i for i, u in enumerate(nbrs)}
    facets = []
    for G in S.facets:
        g = {new_id[u] for u in G if u != v}
        if v in G:
            g |= {cut[u] for u in nbrs if u in G}
        facets.append(g)
    facets.append(set(cut.values()))
    handles = {"new-facet": set(cut.values())}
    for k, h in P.handles.items():
        if v not in h.vertex_set:
            handles[k] = {new_id[u] for u in h.vertex_set}
    return _make(S.dim, len(keep) + len(nbrs), facets, handles, f"trunc({P.provenance},{v})")


def pyramid_wedge_commutation_check(P: ConstructedPolytope, F) -> bool:
    """pyr(wed_F(P)) versus wed_{pyr F}(pyr P), up to combinatorial isomorphism."""
    _, face = _as_face(P, F)
    lhs = pyramid(wedge(P, face))
    PP = pyramid(P)
    apex = P.num_vertices
    rhs = wedge(PP, face | {apex})
    return are_isomorphic(lhs.structure, rhs.structure)

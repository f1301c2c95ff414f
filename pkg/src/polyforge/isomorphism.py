"""Combinatorial isomorphism of vertex-facet incidence structures.

Colour refinement on the bipartite vertex/facet incidence graph prunes the
search; a backtracking search over vertex bijections, checking pairwise
facet co-membership as it goes, settles the rest.
"""
from __future__ import annotations

from collections import Counter

from .errors import TooLarge
from .incidence import IncidenceStructure, to_mask

DEFAULT_MAX_VERTICES = 64


def _refine(structures: list[IncidenceStructure]) -> list[tuple[list[int], list[int]]]:
    # joint colour classes so that colours are comparable across structures
    vcol = [[0] * P.num_vertices for P in structures]
    fcol = [[1] * len(P.facets) for P in structures]
    inc = [[[i for i, f in enumerate(P.facets) if v in f] for v in range(P.num_vertices)]
           for P in structures]
    ncolours = 0
    while True:
        palette: dict[tuple, int] = {}
        nv, nf = [], []
        for s, P in enumerate(structures):
            nv.append([palette.setdefault(
                ("v", vcol[s][v], tuple(sorted(fcol[s][i] for i in inc[s][v]))), len(palette))
                for v in range(P.num_vertices)])
        for s, P in enumerate(structures):
            nf.append([palette.setdefault(
                ("f", fcol[s][i], tuple(sorted(vcol[s][v] for v in f))), len(palette))
                for i, f in enumerate(P.facets)])
        vcol, fcol = nv, nf
        if len(palette) == ncolours:
            return list(zip(vcol, fcol))
        ncolours = len(palette)


def find_isomorphism(P: IncidenceStructure, Q: IncidenceStructure,
                     max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int] | None:
    """A vertex map ``phi`` (``phi[v]`` in Q) taking the facets of P onto those
    of Q, or None."""
    if max(P.num_vertices, Q.num_vertices) > max_vertices:
        raise TooLarge(f"{P.num_vertices}/{Q.num_vertices} vertices exceed guard {max_vertices}")
    if (P.dim != Q.dim or P.num_vertices != Q.num_vertices or len(P.facets) != len(Q.facets)
            or sorted(map(len, P.facets)) != sorted(map(len, Q.facets))):
        return None

    (pv, pf), (qv, qf) = _refine([P, Q])
    if Counter(pv) != Counter(qv) or Counter(pf) != Counter(qf):
        return None

    n = P.num_vertices
    pmasks = [to_mask(f) for f in P.facets]
    qmasks = [to_mask(f) for f in Q.facets]
    qset = set(qmasks)

    def comember(masks):
        co = [[0] * n for _ in range(n)]
        for m in masks:
            vs = [v for v in range(n) if m >> v & 1]
            for a in vs:
                for b in vs:
                    co[a][b] += 1
        return co

    pco, qco = comember(pmasks), comember(qmasks)
    classes: dict[int, list[int]] = {}
    for w in range(n):
        classes.setdefault(qv[w], []).append(w)
    order = sorted(range(n), key=lambda v: (len(classes[pv[v]]), v))

    phi = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return {sum(1 << phi[v] for v in range(n) if m >> v & 1) for m in pmasks} == qset
        v = order[i]
        for w in classes[pv[v]]:
            if used[w] or pco[v][v] != qco[w][w]:
                continue
            if any(pco[v][order[j]] != qco[w][phi[order[j]]] for j in range(i)):
                continue
            phi[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            used[w] = False
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(P: IncidenceStructure, Q: IncidenceStructure,
                   max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    return find_isomorphism(P, Q, max_vertices) is not None

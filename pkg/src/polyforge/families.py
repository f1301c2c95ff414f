"""Generators for the named polytope families.

All generators are memoised; they return immutable objects, so the caches
are safe to share between readers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .constructions import (ConstructedPolytope, FaceHandle, _make, direct_sum, graph_degrees,
                            kfold_pyramid, pentagon, prism, product, pyramid, simplex, square,
                            truncate_vertex, wedge)
from .errors import BadParams


def _rename(P: ConstructedPolytope, provenance: str, **extra) -> ConstructedPolytope:
    handles = dict(P.handles)
    for k, vs in extra.items():
        name = k.replace("_", "-")
        handles[name] = FaceHandle(name, frozenset(vs))
    return ConstructedPolytope(P.structure, handles, provenance)


@lru_cache(maxsize=None)
def triplex(s: int, t: int) -> ConstructedPolytope:
    """M(s, t): t-fold pyramid over the simplicial s-prism T(s-1) x T(1)."""
    if s < 1 or t < 0:
        raise BadParams(f"triplex needs s>=1, t>=0; got s={s} t={t}")
    base = simplex(1) if s == 1 else prism(simplex(s - 1))
    return _rename(kfold_pyramid(base, t), f"M({s},{t})")


@lru_cache(maxsize=None)
def grunbaum_T(d: int, a: int, m: int) -> ConstructedPolytope:
    """T_m^{d,d-a}: (d-a)-fold pyramid over T(m) + T(a-m); d+2 vertices."""
    if not (2 <= a <= d and 1 <= m <= a // 2):
        raise BadParams(f"need 2<=a<=d, 1<=m<=a/2; got d={d} a={a} m={m}")
    return _rename(kfold_pyramid(direct_sum(simplex(m), simplex(a - m)), d - a),
                   f"T_{m}^({d},{d - a})")


@lru_cache(maxsize=None)
def simplex_product_pyr(d: int, a: int, m: int) -> ConstructedPolytope:
    """(d-a)-fold pyramid over T(m) x T(a-m); the d-polytopes with d+2 facets."""
    if not (2 <= a <= d and 1 <= m <= a // 2):
        raise BadParams(f"need 2<=a<=d, 1<=m<=a/2; got d={d} a={a} m={m}")
    return _rename(kfold_pyramid(product(simplex(m), simplex(a - m)), d - a),
                   f"pyr(T({m})xT({a - m}),{d - a})")


@lru_cache(maxsize=None)
def pentasm(d: int) -> ConstructedPolytope:
    """Pm(d): M(2, d-2) with its lowest-numbered simple base-square vertex cut off."""
    if d < 2:
        raise BadParams(f"pentasm needs d>=2; got {d}")
    M = triplex(2, d - 2)
    deg = graph_degrees(M.lattice)
    v = min(u for u in range(4) if deg[u] == d)
    return _rename(truncate_vertex(M, v), f"Pm({d})")


@lru_cache(maxsize=None)
def pentasm_pyr(b: int, a: int) -> ConstructedPolytope:
    if b < 2 or a < 0:
        raise BadParams(f"Pm(b,a) needs b>=2, a>=0; got b={b} a={a}")
    return _rename(kfold_pyramid(pentasm(b), a), f"Pm({b},{a})")


# tetragonal antiwedge: quadrilaterals 0123 and 0345 glued along 03, the
# remaining hexagon 0-1-2-3-4-5 triangulated by the zigzag 15, 25, 24
_TA3_FACETS = [{0, 1, 2, 3}, {0, 3, 4, 5}, {0, 1, 5}, {1, 2, 5}, {2, 4, 5}, {2, 3, 4}]


@lru_cache(maxsize=None)
def ta(d: int) -> ConstructedPolytope:
    """TA(d): TA(2) is a square, TA(3) the tetragonal antiwedge, and TA(d) the
    wedge of TA(d-1) at its facet "prev-copy" (a copy of TA(d-2))."""
    if d < 2:
        raise BadParams(f"TA needs d>=2; got {d}")
    if d == 2:
        return _rename(square(), "TA(2)")
    if d == 3:
        return _make(3, 6, _TA3_FACETS, {"prev-copy": {0, 1, 2, 3}}, "TA(3)")
    W = wedge(ta(d - 1), "prev-copy")
    return _rename(W, f"TA({d})", prev_copy=W.handle("bottom-base").vertex_set)


@lru_cache(maxsize=None)
def ta_pyr(s: int, t: int) -> ConstructedPolytope:
    if s < 2 or t < 0:
        raise BadParams(f"TA(s,t) needs s>=2, t>=0; got s={s} t={t}")
    return _rename(kfold_pyramid(ta(s), t), f"TA({s},{t})")


@lru_cache(maxsize=None)
def z(d: int) -> ConstructedPolytope:
    """Z(3) is the triangular bipyramid T(1) + T(2); Z(d+1) is the wedge of
    Z(d) at its facet "prev-copy" (a copy of Z(d-1))."""
    if d < 3:
        raise BadParams(f"Z needs d>=3; got {d}")
    if d == 3:
        B = direct_sum(simplex(1), simplex(2))
        first = min(B.structure.facets, key=lambda f: sorted(f))
        return _rename(B, "Z(3)", prev_copy=first)
    W = wedge(z(d - 1), "prev-copy")
    return _rename(W, f"Z({d})", prev_copy=W.handle("bottom-base").vertex_set)


@lru_cache(maxsize=None)
def z_pyr(s_plus_1: int, t: int) -> ConstructedPolytope:
    if s_plus_1 < 3 or t < 0:
        raise BadParams(f"Z(s+1,t) needs s+1>=3, t>=0; got {s_plus_1},{t}")
    return _rename(kfold_pyramid(z(s_plus_1), t), f"Z({s_plus_1},{t})")


@lru_cache(maxsize=None)
def sigma3() -> ConstructedPolytope:
    """Wedge of a square at one of its vertices."""
    return _rename(wedge(square(), "vertex-0"), "Sigma(3)")


@lru_cache(maxsize=None)
def wp() -> ConstructedPolytope:
    """Wedge of a square pyramid at an edge of its base."""
    return _rename(wedge(pyramid(square()), "edge-0"), "WP")


@lru_cache(maxsize=None)
def sigma3_pyr(t: int) -> ConstructedPolytope:
    if t < 0:
        raise BadParams(f"t={t} < 0")
    return _rename(kfold_pyramid(sigma3(), t), f"pyr(Sigma(3),{t})")


@lru_cache(maxsize=None)
def wp_pyr(t: int) -> ConstructedPolytope:
    if t < 0:
        raise BadParams(f"t={t} < 0")
    return _rename(kfold_pyramid(wp(), t), f"pyr(WP,{t})")


def pyramid_over_pentagon(t: int = 1) -> ConstructedPolytope:
    return kfold_pyramid(pentagon(), t)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple = ()
    pyr: int = 0

    def build(self) -> ConstructedPolytope:
        try:
            gen = FAMILIES[self.name]
        except KeyError:
            raise BadParams(f"unknown family {self.name!r}; known: {sorted(FAMILIES)}") from None
        try:
            P = gen(*self.params)
        except TypeError as e:
            raise BadParams(f"bad parameters {self.params} for {self.name}: {e}") from None
        return kfold_pyramid(P, self.pyr) if self.pyr else P


FAMILIES = {
    "triplex": triplex,
    "grunbaum_T": grunbaum_T,
    "simplex_product_pyr": simplex_product_pyr,
    "pentasm": pentasm,
    "pentasm_pyr": pentasm_pyr,
    "TA": ta,
    "TA_pyr": ta_pyr,
    "Z": z,
    "Z_pyr": z_pyr,
    "sigma3": sigma3,
    "sigma3_pyr": sigma3_pyr,
    "WP": wp,
    "WP_pyr": wp_pyr,
}

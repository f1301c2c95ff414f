import json

import pytest

from conftest import brute_force_f_vector
from polyforge import constructions as C
from polyforge import families as fam
from polyforge.errors import BadDimension, ImproperFace, NotAFace, NotSimple, UnknownVertex
from polyforge.formulas import binom, fk_wedge_facet
from polyforge.incidence import f_vector, face_structure, validate_lattice
from polyforge.isomorphism import are_isomorphic

BASES = [C.simplex(2), C.square(), C.pentagon(), C.simplex(3), C.prism(C.simplex(2)),
         C.pyramid(C.square()), fam.ta(3), fam.triplex(2, 2)]


def ext(f, k):
    return 1 if k in (-1, f.dim) else (f[k] if 0 <= k < f.dim else 0)


@pytest.mark.parametrize("P", BASES, ids=lambda P: P.provenance)
def test_pyramid_recursion(P):
    f, g = P.f_vector(), C.pyramid(P).f_vector()
    assert all(g[k] == ext(f, k) + ext(f, k - 1) for k in range(P.dim + 1))


@pytest.mark.parametrize("P", BASES[:5], ids=lambda P: P.provenance)
@pytest.mark.parametrize("Q", [C.simplex(1), C.simplex(2), C.square()], ids=lambda Q: Q.provenance)
def test_product_f_vector(P, Q):
    # nonempty faces of a product are products of nonempty faces
    f, g = P.f_vector(), Q.f_vector()
    h = C.product(P, Q).f_vector()
    d = P.dim + Q.dim
    for k in range(d):
        assert h[k] == sum(ext(f, i) * ext(g, k - i) for i in range(0, k + 1))


@pytest.mark.parametrize("P", BASES[:5], ids=lambda P: P.provenance)
@pytest.mark.parametrize("Q", [C.simplex(1), C.simplex(2), C.square()], ids=lambda Q: Q.provenance)
def test_direct_sum_f_vector(P, Q):
    # proper faces of a direct sum are joins of proper faces (one may be empty)
    f, g = P.f_vector(), Q.f_vector()
    h = C.direct_sum(P, Q).f_vector()
    for k in range(P.dim + Q.dim):
        want = sum(ext(f, i) * ext(g, k - 1 - i) for i in range(-1, P.dim) if -1 <= k - 1 - i < Q.dim)
        assert h[k] == want


def test_product_vertex_numbering():
    P = C.product(C.simplex(1), C.simplex(2))
    assert P.num_vertices == 6
    assert frozenset({0, 2, 4}) in P.structure.facets   # first vertex of the segment, whole triangle


@pytest.mark.parametrize("P", BASES, ids=lambda P: P.provenance)
def test_wedge_identity_at_every_facet(P):
    L = P.lattice
    for F in L.faces(P.dim - 1):
        W = C.wedge(P, F)
        fF = f_vector(face_structure(L, F)[0])
        assert tuple(W.f_vector()) == tuple(fk_wedge_facet(k, P.f_vector(), fF) for k in range(P.dim + 1))
        assert validate_lattice(W.lattice) == []
        assert tuple(W.f_vector()) == brute_force_f_vector(W.structure)


def test_wedge_of_square_at_vertex_is_sigma3():
    W = C.wedge(C.square(), "vertex-0")
    assert tuple(W.f_vector()) == (7, 11, 6)
    assert are_isomorphic(W.structure, fam.sigma3().structure)


def test_wedge_handles_and_errors():
    P = C.prism(C.simplex(2))
    W = C.wedge(P, "bottom-base")
    assert {"bottom-base", "top-base", "wedge-face"} <= set(W.handles)
    assert W.handle("wedge-face").vertex_set == frozenset({0, 1, 2})
    with pytest.raises(ImproperFace):
        C.wedge(P, set())
    with pytest.raises(ImproperFace):
        C.wedge(P, set(range(6)))
    with pytest.raises(NotAFace):
        C.wedge(P, {0, 4})
    with pytest.raises(KeyError):
        C.wedge(P, "no-such-handle")


@pytest.mark.parametrize("P", BASES, ids=lambda P: P.provenance)
def test_pyramid_wedge_commute(P):
    for F in P.lattice.faces(P.dim - 1):
        assert C.pyramid_wedge_commutation_check(P, F)


def test_truncation():
    T = C.truncate_vertex(C.simplex(3), 0)
    assert tuple(T.f_vector()) == (6, 9, 5)
    assert are_isomorphic(T.structure, C.prism(C.simplex(2)).structure)
    assert "new-facet" in T.handles
    for P in BASES:
        L = P.lattice
        for v in range(P.num_vertices):
            if len([e for e in L.edges() if v in e]) != P.dim or P.dim < 2:
                continue
            f, g = P.f_vector(), C.truncate_vertex(P, v).f_vector()
            # v disappears; the new facet is a (d-1)-simplex
            for k in range(P.dim):
                assert g[k] == f[k] - (k == 0) + binom(P.dim, k + 1)


def test_truncation_errors():
    with pytest.raises(NotSimple):
        C.truncate_vertex(C.pyramid(C.square()), 4)
    with pytest.raises(UnknownVertex):
        C.truncate_vertex(C.simplex(3), 7)
    with pytest.raises(BadDimension):
        C.truncate_vertex(C.simplex(1), 0)


def test_kfold_pyramid():
    P = C.square()
    assert C.kfold_pyramid(P, 0) is P
    Q = C.kfold_pyramid(P, 3)
    assert Q.dim == 5 and Q.handle("base").vertex_set == frozenset(range(4))
    with pytest.raises(BadDimension):
        C.kfold_pyramid(P, -1)


def test_small_polytopes():
    assert tuple(C.simplex(0).f_vector()) == ()
    assert C.simplex(0).num_vertices == 1
    assert tuple(C.pyramid(C.simplex(0)).f_vector()) == (2,)
    assert tuple(C.polygon(7).f_vector()) == (7, 7)
    with pytest.raises(BadDimension):
        C.product(C.simplex(0), C.square())


def test_serialisation_round_trip():
    W = C.wedge(C.kfold_pyramid(C.square(), 1), "bottom-base")
    data = json.loads(json.dumps(W.to_dict()))
    R = C.ConstructedPolytope.from_dict(data)
    assert R == W
    assert R.handles.keys() == W.handles.keys() and R.provenance == W.provenance
    assert tuple(R.f_vector()) == (8, 18, 17, 7)

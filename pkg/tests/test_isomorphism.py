import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms import isomorphism as nxiso

from polyforge import constructions as C
from polyforge import families as fam
from polyforge.errors import TooLarge
from polyforge.incidence import IncidenceStructure
from polyforge.isomorphism import are_isomorphic, find_isomorphism


def vf2_isomorphic(P: IncidenceStructure, Q: IncidenceStructure) -> bool:
    # oracle: coloured bipartite vertex-facet graphs through networkx VF2
    def graph(S):
        G = nx.Graph()
        G.add_nodes_from((("v", i) for i in range(S.num_vertices)), side=0)
        G.add_nodes_from((("f", j) for j in range(len(S.facets))), side=1)
        G.add_edges_from((("v", i), ("f", j)) for j, F in enumerate(S.facets) for i in F)
        return G
    if P.dim != Q.dim:
        return False
    match = nxiso.GraphMatcher(graph(P), graph(Q), node_match=lambda a, b: a["side"] == b["side"])
    return match.is_isomorphic()


ZOO = [
    C.prism(C.simplex(3)), fam.ta(4), fam.pentasm_pyr(3, 1), fam.wp(), C.pyramid(fam.sigma3()),
    fam.triplex(3, 1), fam.triplex(2, 2), fam.z(4), fam.grunbaum_T(4, 2, 1),
    fam.grunbaum_T(4, 3, 1), fam.simplex_product_pyr(4, 4, 2), fam.pentasm(4),
    C.truncate_vertex(C.simplex(4), 0), C.direct_sum(C.square(), C.simplex(2)),
    C.product(C.simplex(2), C.simplex(2)), C.kfold_pyramid(C.pentagon(), 2),
]


def test_agrees_with_vf2_on_all_pairs():
    for P, Q in combinations(ZOO, 2):
        assert are_isomorphic(P.structure, Q.structure) == vf2_isomorphic(P.structure, Q.structure)


@pytest.mark.parametrize("P", ZOO, ids=lambda P: P.provenance)
def test_random_relabel_is_isomorphic(P):
    rng = random.Random(P.provenance)
    perm = list(range(P.num_vertices))
    rng.shuffle(perm)
    Q = P.structure.relabel(perm)
    phi = find_isomorphism(P.structure, Q)
    assert phi is not None
    assert {frozenset(phi[v] for v in F) for F in P.structure.facets} == set(Q.facets)


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(10)), st.permutations(range(9)))
def test_relabel_invariance(p10, p9):
    for P, perm in ((fam.ta(5).structure, p10), (fam.z(5).structure, p9)):
        assert are_isomorphic(P, P.relabel(perm))


def test_same_counts_different_types():
    # TA(4) and Pm(3,1) share f-vector, vertex count and facet count
    a, b = fam.ta(4), fam.pentasm_pyr(3, 1)
    assert a.f_vector() == b.f_vector()
    assert not are_isomorphic(a.structure, b.structure)
    assert not vf2_isomorphic(a.structure, b.structure)


def test_dimension_mismatch():
    assert not are_isomorphic(C.simplex(2).structure, C.simplex(1).structure)


def test_size_guard():
    big = C.prism(C.prism(C.prism(C.prism(C.prism(C.prism(C.simplex(1)))))))
    assert big.num_vertices == 128
    with pytest.raises(TooLarge):
        are_isomorphic(big.structure, big.structure)
    assert are_isomorphic(big.structure, big.structure, max_vertices=200)

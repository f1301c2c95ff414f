"""Combinatorial polytope kernel: face lattices from vertex-facet incidences,
the standard constructions, named families, closed-form face counts and an
audit harness tying them together."""

from .constructions import (ConstructedPolytope, direct_sum, kfold_pyramid, pentagon, polygon,
                            prism, product, pyramid, pyramid_wedge_commutation_check, simplex,
                            square, truncate_vertex, wedge)
from .incidence import (FaceHandle, FaceLattice, FVector, IncidenceStructure, count_faces_meeting,
                        enumerate_face_lattice, f_vector, graph_degrees, is_simple_vertex,
                        validate_lattice, vertex_figure)
from .isomorphism import are_isomorphic

__version__ = "0.1.0"

"""Local face modules and local h-vectors of triangulations of simplices."""

from .complexes import (SimplicialComplex, build_complex, canon_face,
                        closed_star, face_key, link, reduced_betti,
                        reduced_betti_all)
from .corpus import (CORPUS_NAMES, builtin_corpus, builtin_names,
                     builtin_triangulation, face_fixture, face_fixture_names,
                     stellar_subdivide, triforce_data, trivial_data)
from .errors import SchemaError, VerificationError
from .facering import (LinearForm, SpecialLsop, derive_seed, graded_basis,
                       marriage_check, monomial_in_IS, quotient_dims,
                       sample_lsop, special_supports, verify_lsop)
from .fileformat import (build_triangulation, canonical_json, load_data,
                         load_triangulation, validate_data)
from .functorial import (AnalysisReport, FaceStructure, InducedMap,
                         InternalEdgeGraph, check_functor_composition,
                         check_monotonicity, face_structure, induced_map,
                         internal_edge_graph, vanishing_structure_audit)
from .linalg import GF, QQ, Matrix, field_for_characteristic
from .localmodule import (LocalModule, build_resolution, local_h_incexc,
                          local_module, presentation_J, restrict_module,
                          restricted_standalone, verify_exactness)
from .triangulation import (CarrierMap, Triangulation, interior_faces,
                            is_quasi_geometric, restriction_gamma_u,
                            validate_homology_triangulation)

__version__ = "0.1.0"

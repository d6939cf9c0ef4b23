"""Exact construction and combinatorial verification of the
doubly-transitive SIC-POVMs: the qubit tetrahedron, the Hesse SIC, and
the Hoggar pair, together with the design-theoretic, graph-theoretic and
compatibility structures they generate.
"""

from .cyclotomic import ConductorMismatch, CycNum, cyclotomic_poly, euler_phi
from .linalg import ExactMatrix
from .heisenberg import (PauliIndex, SymplecticForm, displacement, hermitize,
                         is_antisymmetric, odd_parity, shift_phase,
                         symplectic_value, y_count)
from .ensembles import (LABELS, EnsembleInvariantError, ProbVector,
                        QuantumState, SicEnsemble, build_catalog,
                        enumerate_min_entropy, hesse_affine_lines,
                        qbic_check_general, qbic_check_hesse,
                        qbic_check_hoggar, quadratic_check, reconstruct,
                        rep_of_vector, shannon_entropy, sic_element_rep,
                        sic_rep, sic_rep_exact, signed_pm_sum, state_overlap,
                        zero_count_bound)
from .triples import (ClassificationError, CubeC01, SeidelMatrix, TripleClass,
                      classify, cube_c01, descendant_seidel, gram_from_seidel,
                      per_pair_counts, per_point_counts,
                      phase_sign_after_hermitize, triple_phase, triple_product,
                      two_graph_check, vanishing_matches_symplectic)
from .designs import (BibdParams, BibdViolation, Block, Design, DesignError,
                      bibd_params, complement, design_from_triples,
                      design_from_twin, hadamard_construction, hyperplanes,
                      kantor_value, sdp_check)
from .compat import (HypothesisSet, column_zero_counts, pp_incompatible,
                     pp_odop_criterion, pph_incompatible_by_scan,
                     pph_quartets, quartet_triple_product_bridge,
                     sic_triple_inequalities, venn_region_counts)
from .finitegeo import (FanoElement, GossetPolytope, GossetVertex,
                        fano_incident, fano_lines, fano_points, flag_counts,
                        gosset_line_cosine_squared, gosset_polytope,
                        index_antiflag, zero_pattern_correspondence)
from .grouparith import IdentityError, OrderReport, clifford_order, order_identities

__version__ = "0.1.0"

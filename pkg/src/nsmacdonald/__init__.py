"""Supports, coefficients and polytopes of non-symmetric Macdonald polynomials."""

from ._validation import ContractViolation
from .bruhat import BruhatIdeal, ideal, leq, lower_moves, verify_conjecture38
from .errors import HypothesisViolation, ResultFailure
from .fillings import (Filling, NuFamily, attacking_chain, chain_flip, enumerate_nonattacking,
                       is_nonattacking, multiplicity, support_by_enumeration,
                       verify_inductive_labelings, verify_partial_sym, verify_reflection_inclusion)
from .geometry import (LatticePolytope, contains_point, convex_hull, is_generalized_permutahedron,
                       is_mconvex_exchange, is_mconvex_geometric, is_saturated, is_submodular,
                       lattice_points, minkowski_root_segment, support_function, union_reflection)
from .lattice import pi_op, rotate_right, simple_transposition, transposition
from .macdonald import (MConvexCertificate, QTParams, certify_mconvex, coefficients,
                        macdonald_polynomial, moment_polytope, newton_polytope, support,
                        support_by_recursion, verify_knop_sahi)
from .polynomial import SparsePolynomial, psi_op
from .statistics import HHL, HHLStatistics

__version__ = "0.1.0"

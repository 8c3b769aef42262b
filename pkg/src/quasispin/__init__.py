"""Exact-arithmetic toolkit for the five-dimensional quasi-spin algebra.

Noncommutative Pfaffians in U(o_N) with symbolic identity verification,
fermionic Fock realizations of the quasi-spin operators, representation
analysis over Q(sqrt 2), and the fourth-quantum-number classification of
o_5 states.
"""

from .scalars import Rational, QuadScalar, SQRT2, INV_SQRT2
from .linalg import (ExactMatrix, LinOp, SpanBasis, characteristic_polynomial,
                     rank_and_kernel, solve)
from .liealg import (GenIndex, Weight, bracket, canonical_generators,
                     canonicalize, defining_matrices, root_of, weyl_dimension)
from .uea import (IndexSet, UEAElement, capelli, check_corollary_split,
                  check_lemma_l2, check_minorn, check_split_formula, hat_set,
                  pfaffian, star, weight_shift_of)
from .fock import (FockSpace, build_o5_on_fock, dictionary_to_o5,
                   quasispin_operators, verify_representation)
from .replab import (Irrep, Representation, extract_irreps,
                     extremal_projector_o3, fock_representation,
                     multiplicity_slices, omega_operator, pf_slice_maps,
                     tensor_power_representation, tps_scalar_probe,
                     weight_decompose)
from .tableaux import (GTMolevTableau, Rectangle, assign_k, case_of,
                       enumerate_tableaux, predicted_slice_matrix,
                       quantum_numbers, validate_against_representation)

__version__ = "0.1.0"

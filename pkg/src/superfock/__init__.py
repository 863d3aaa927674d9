"""Exact oscillator representations of osp(M/N;R) on Fock spaces.

Construction of primitive lowest-weight vectors, verification of their
weights and primitivity, and the classification of integrable irreducible
super unitary lowest/highest weight representations, all in exact
arithmetic over the 8th cyclotomic field.
"""

from .cyclo import Cyclotomic, I, ONE, QROOT, SQRT2, ZERO, cyc
from .osp import (Root, SuperDim, SuperMatrix, Weight, cartan_element,
                  negative_roots, osp_basis, osp_membership, positive_roots,
                  root_space_basis, root_system, super_bracket)
from .fock import FockVector, clifford_normalize, inner_product
from .operators import (FockOperator, negative_root_operator, weight_of_vector,
                        weight_operator_so, weight_operator_sp)
from .realization import (CWGenerator, ad_matrix, rho_generator, rho_of_matrix,
                          rho_quadratic, verify_cw_relations, verify_homomorphism)
from .primitive import (PrimitiveParams, build_primitive, c_factor,
                        check_primitive, lambda_det, predicted_weight, r_factor)
from .classify import (ClassifyVerdict, classify_weight, descent_product,
                       enumerate_unitary_lowest_weights, highest_dominance,
                       lowest_defect_bound, lowest_dominance, necessary_band,
                       parameters_from_weight, verify_descent, weight_inequality)

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic", "I", "ONE", "QROOT", "SQRT2", "ZERO", "cyc",
    "Root", "SuperDim", "SuperMatrix", "Weight", "cartan_element",
    "negative_roots", "osp_basis", "osp_membership", "positive_roots",
    "root_space_basis", "root_system", "super_bracket",
    "FockVector", "clifford_normalize", "inner_product",
    "FockOperator", "negative_root_operator", "weight_of_vector",
    "weight_operator_so", "weight_operator_sp",
    "CWGenerator", "ad_matrix", "rho_generator", "rho_of_matrix",
    "rho_quadratic", "verify_cw_relations", "verify_homomorphism",
    "PrimitiveParams", "build_primitive", "c_factor", "check_primitive",
    "lambda_det", "predicted_weight", "r_factor",
    "ClassifyVerdict", "classify_weight", "descent_product",
    "enumerate_unitary_lowest_weights", "highest_dominance",
    "lowest_defect_bound", "lowest_dominance", "necessary_band",
    "parameters_from_weight", "verify_descent", "weight_inequality",
]

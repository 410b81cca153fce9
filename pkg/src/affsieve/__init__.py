"""Dominant maximal weights of affine Kac-Moody modules, their sieving classes and cyclic sieving."""

from .actions import act, decompose_orbits, fixed_count, group_elements, permutation_for
from .cartan import AffineType, RankError, adjugate, affine_type, datum, derive_sieving_set, validate_sieving_set
from .formulas import (count_binomial, count_closed, duality_check, frenkel_dual, get_triangle, m_count,
                       primitive_necklaces)
from .qpoly import QPolynomial, BiQPolynomial, eval_at_primitive_root, q_binomial, reduce_mod_cyclic, weight_gen_poly
from .sieving import verify, verify_bicsp, verify_csp
from .weights import count_mx_oracle, distinguished_representatives, enumerate_level, equivalence_class, s_evaluation
from .words import TupleDescriptor, decode, encode, sagan_step

__version__ = "0.1.0"

"""Exact quaternionic Kahler pullback constants and period-domain checks.

Everything is computed in Q(i, sqrt2) with exact arithmetic; see the module
docstrings for the conventions (quaternion identification, wedge expansion,
chart normalization of the symmetric square).
"""

from .scalars import (FieldElem, JetScalar, Quat, Rational, parse_field_elem,
                      ZERO, ONE, I, SQRT2, I_SQRT2, HALF_SQRT2,
                      QUAT_ONE, QUAT_I, QUAT_J, QUAT_K, QUAT_UNITS)
from .linalg import HermSig, Matrix, Subspace, herm_form
from .geometry import (QuatCoords, TangentVec, SU2_GENERATORS,
                       complex_structure_j, kahler_form, metric_g0, omega4,
                       omega_unit, su2_action_check, to_quat, wedge_square_eval)
from .embeddings import (EmbeddingDiff, EMBEDDING_NAMES, BALL_SIG, W_SIG,
                         E_BASIS_TENSORS, ball_tangent, e_coords_to_sym,
                         make_embedding, phi_embedding, rho_embedding,
                         standard_quadruple, su21_p_matrix, sym_product,
                         sym_square_embedding, sym_square_lie,
                         sym_square_p_block, sym_square_tangent_diff,
                         sym_square_v_block, sym_to_e_coords,
                         totally_real_embedding, w_form_tensor, is_su21)
from .toledo import (CONVENTION, CompositionReport, PullbackReport,
                     composition_invariant, pullback_constant)
from .lifting import (BPlusVector, GradedMask, PeriodTriple, TwistorVerdict,
                      PERIOD_FLAG_H, TWISTOR_H, classify_column,
                      classify_linearity, grading_mask, holomorphy_check_u3u1u2,
                      horizontality_check, horizontality_residues,
                      iota_star_bplus, p_positions, period_triple,
                      twistor_lift_condition, twistor_nonlift_check)
from .selftest import run_selftest

__version__ = "0.1.0"

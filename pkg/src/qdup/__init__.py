"""Exact enumeration and classification of twisted tensor products with a
two-dimensional factor, over prime fields, the rationals, and quadratic
extensions."""

from .config import Budgets, default_budgets
from .fields import (Field, NormResult, PrimeField, QQ, QuadExt, Rationals,
                     Scalar, conj, field_from_spec, is_norm, norm, quad_roots,
                     reduce_char_not2, square_roots)
from .algebras import (LinearMap, StructAlgebra, algebra_from_json,
                       algebra_to_json, check_algebra, check_morphism,
                       direct_product, matrix_algebra, opposite,
                       power_of_field, quotient_poly, restrict_scalars,
                       scalar_extension, truncated_path_algebra)
from .isomorphism import (Fingerprint, fingerprint, fixed_subalgebra,
                          is_simple, iso_search)
from .quivers import (ComponentInfo, FunctionalQuiver, GeneralQuiver,
                      cibils_transform, components, from_set_map,
                      shape_class_sizes, shape_classes)
from .twisting import (TwistingMap2x2, TwistingPair, TwoDimPresentation,
                       brute_force_pairs, brute_force_tau_2x2,
                       build_twisted_product, check_endo_lift,
                       check_involution_lift, conjugate_map,
                       factorize_by_conjugation, lift_endo, make_pair,
                       verify_pair)
from .duplicates import (Coloration, brute_force_colorations, certify,
                         classify, count_twisting_maps, duplicates_entries,
                         enumerate_colorations, pair_from_coloration,
                         verify_coloration)
from .dim4 import (FamilyParam, catalog4, classify_Aq_pair, classify_Cq_matrix,
                   classify_Cq_pair, conjecture_probe, construct_family,
                   quaternion_algebra, quaternion_from_Cq,
                   verify_invariant_ring_lemmas)

__all__ = [name for name in dir() if not name.startswith("_")]

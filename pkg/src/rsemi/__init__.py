"""Restriction semigroups, partial actions on semilattices and their globalization,
built and brute-force verified at finite or bounded scale."""
from .actions import PartialAction, classify_action, underlying_action, verify_partial_action
from .algebra import (BoundedRestrictionAlgebra, FiniteRestrictionAlgebra, check_morphism, classify,
                      natural_order, sigma_congruence, verify_restriction_axioms)
from .constructions import (DoubleAction, double_to_pda, m_product, pda_to_double, verify_proper_representation,
                            verify_double_action, w_product, y_m_t)
from .covers import build_cover, build_kappa, quotient_and_embed
from .errors import (InsufficientBoundError, MalformedInputError, ParseError, RejectedInputError,
                     VerificationError)
from .free_models import build_free_model
from .globalization import build_global_poset_generic, build_w_of_global, canonical_form, embed_mty
from .monoids import FiniteMonoid, FreeMonoid
from .order import build_semilattice
from .report import Report

__all__ = [
    "PartialAction", "classify_action", "underlying_action", "verify_partial_action",
    "BoundedRestrictionAlgebra", "FiniteRestrictionAlgebra", "check_morphism", "classify",
    "natural_order", "sigma_congruence", "verify_restriction_axioms",
    "DoubleAction", "double_to_pda", "m_product", "pda_to_double", "verify_proper_representation",
    "verify_double_action", "w_product", "y_m_t",
    "build_cover", "build_kappa", "quotient_and_embed",
    "InsufficientBoundError", "MalformedInputError", "ParseError", "RejectedInputError", "VerificationError",
    "build_free_model", "build_global_poset_generic", "build_w_of_global", "canonical_form", "embed_mty",
    "FiniteMonoid", "FreeMonoid", "build_semilattice", "Report",
]

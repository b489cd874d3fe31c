"""Wreath products and triangular actions of Lie algebras, in exact rational arithmetic."""
from .actions import (ActionReport, FormalAction, bernoulli_t, fundamental_action, fundamental_formal_action,
                      sigma_apply, verify_formal_action)
from .algebra import (DimensionError, InvalidLieAlgebra, LieAlgebra, LinearMap, NotAnIdeal, ad, bracket,
                      check_lie_algebra, quotient)
from .extensions import (Extension, Section, default_section, kk_component, kk_embed, make_extension,
                         make_section, verify_kk)
from .formal import (FormalSeries, HomogeneousMap, MultilinearTensor, TruncationError, derive_homogeneous,
                     derive_series, evaluate, from_multilinear, polarize, polarize_oracle)
from .lie_series import FieldSeries, bracket_S, bracket_pointwise, embed_SY_into_SZ, embed_TY_into_SZ
from .wreath import WreathElement, WreathProduct, triangular_action, wreath_bracket

__version__ = "0.1.0"

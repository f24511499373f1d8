"""Exact rearrangements and amalgam norms of piecewise-power functions on [0, inf)."""

from .amalgams import (WL, Integrable, Wiener, integrable_norm, rearranged_wiener, space_norm,
                       tia_modulus_bound, wiener_norm, wl_components, wl_norm)
from .duality import (CandidateSet, associate_lower_bound, default_candidates, holder_check,
                      raw_pairing, rearranged_pairing, wl_duality_check)
from .errors import AmalgamError
from .extreal import INF, POS_INF, ExtReal
from .norms import (Lebesgue, Lorentz, dual_exponent, global_stronger, local_stronger,
                    norm_eval, norm_of)
from .stepfn import (PPF, MonotoneProfile, Piece, StepFunction, add, dilate, distribution,
                     equimeasurable, evaluate, indicator, min_with_const, normalize,
                     partial_integral, profile, rearrange_eval, rearrange_step, restrict, scale,
                     step_function, subtract_const_clamped)

__all__ = [name for name in dir() if not name.startswith("_")]

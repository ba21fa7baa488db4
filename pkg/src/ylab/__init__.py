"""Exact computer algebra for Yangian modules on Grassmann weight spaces.

Everything is computed over the rationals with no floating point anywhere:
polynomials and rational functions in the spectral variable, module actions
as matrices of rational functions, intertwining operators as rational
matrices, and classification data as monic polynomial tuples.
"""

from .drinfeld import (DrinfeldData, PairSet, classify_kind, data_of_module,
                       dominant_spec_of_pairs, pair_set, realize,
                       reduce_minimal)
from .duality import (R_map, composite_check, dual_iso, hv_flip_exponent,
                      iso_covector, sign_counters)
from .exact import Poly, RatFun, q
from .grassmann import Grassmann, GrassmannElt
from .intertwiner import (Intertwiner, ReducedWord, build_I, elementary,
                          image_analysis, intertwine_check,
                          word_independence_check)
from .yangian import (ModuleSpec, action_table, eigen_closed, eigen_series,
                      eigenform_check, highest_vector, module_action,
                      rtt_check)

__all__ = [
    "DrinfeldData", "Grassmann", "GrassmannElt", "Intertwiner", "ModuleSpec",
    "PairSet", "Poly", "RatFun", "R_map", "ReducedWord", "action_table",
    "build_I", "classify_kind", "composite_check", "data_of_module",
    "dominant_spec_of_pairs", "dual_iso", "eigen_closed", "eigen_series",
    "eigenform_check", "elementary", "highest_vector", "hv_flip_exponent",
    "image_analysis", "intertwine_check", "iso_covector", "module_action",
    "pair_set", "q", "realize", "reduce_minimal", "rtt_check",
    "sign_counters", "word_independence_check",
]

"""Norms, pointwise multipliers and essential norms for Köthe sequence
spaces, with certified truncation brackets and a desk-scale verification
suite."""

from ._kernels import IMPL as kernel_impl
from .bracket import Bracket
from .seqspec import (AlternatingTail, ConstPlusPowerTail, PowerTail,
                      PowLogTail, SequenceSpec, Truncation, ZERO)
from .seqops import (copson, decreasing_majorant, decreasing_rearrangement,
                     dilate2, hardy, maximal_function, pointwise_product,
                     tail_restrict)
from .spaces import (C0, Cesaro, ConcaveWeight, LInfty, LorentzSp, Lp,
                     MarcinkiewiczSp, MusielakOrlicz, NakanoSp, OrliczSp,
                     PowerWeight, Symmetrized, Tandori, Weighted,
                     fundamental_function, is_order_continuous, kothe_dual,
                     norm, oc_membership, point_norm)
from .orlicz import (ExponentRule, ModularFamily, OrliczFunction,
                     appendix_conjugate, appendix_mtilde, conjugate_function,
                     delta2_evidence, factorization_ratio, luxemburg_norm,
                     mtilde_function, nakano_compactness,
                     nakano_multiplier_exponents, power_function,
                     young_conjugate_generalized)
from .lorentz import (DilationIndices, dilation_indices,
                      multiplier_from_marcinkiewicz, multiplier_into_lorentz,
                      prop42_check)
from .multipliers import (MultiplierResult, factorization_check,
                          multiplier_norm_oracle, multiplier_space,
                          pitt_predicate, product_space_norm_oracle)
from .essnorm import (EssNormReport, approximation_numbers,
                      cesaro_compactness, cesaro_multiplier_space,
                      distance_to_oc_part, essential_norm,
                      essential_norm_self, fourier_multiplier_essnorm)
from .rademacher import (Integrand, MeasurePartition, glued_rademacher,
                         lemma_r_demo, rademacher, rademacher_inner_product)

__version__ = "0.1.0"

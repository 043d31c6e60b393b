"""Tensor products of simple modules of quantum GL2 at a root of unity.

Decomposes L(a,0) ⊗ L(b,0) into twisted tilting summands and checks each
decomposition by exact character arithmetic.
"""
from .characters import (
    ChiExpansion,
    LaurentCharacter,
    chi_decompose,
    chi_expand,
    clebsch_gordan,
    dimension,
    multiply,
    stretch,
    weyl_character,
)
from .decompose import (
    Decomposition,
    TwistedTiltingSummand,
    VerificationReport,
    general_tensor_decompose,
    simple_character,
    summand_character,
    tensor_decompose,
    verify_decomposition,
)
from .errors import (
    DomainError,
    NegativeCoefficientError,
    NotRepresentableError,
    NotSymmetricError,
    QGL2Error,
    RegionError,
)
from .tilting import (
    TiltingLabel,
    greedy_tilting_decompose,
    is_indecomposable_restricted_tensor,
    restricted_tensor_decompose,
    tilting_character,
)
from .weights import (
    DominantWeight,
    LpExpansion,
    ModularParams,
    det_shift,
    in_pi,
    is_restricted,
    linkage_partner,
    lp_expansion,
    recompose,
)

__version__ = "0.1.0"

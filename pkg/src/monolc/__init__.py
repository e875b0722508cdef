"""Multigraded local cohomology and Ext modules for squarefree monomial ideals, computed exactly."""

from .combinat import (
    MonomialIdeal,
    SimplicialComplex,
    alexander_dual,
    contains,
    delta_alpha,
    frobenius_power,
    full_subcomplex,
    minimalize,
    radical,
    stanley_reisner_complex,
    t_complex,
    varset,
)
from .errors import (
    ArgumentError,
    ConsistencyError,
    DimensionMismatch,
    DomainError,
    MonolcError,
    PreconditionError,
    ResourceLimitError,
    UnsupportedIdealError,
)
from .homology import CohomologyBasis, reduced_cohomology, restriction_on_cohomology, strand_cohomology
from .linalg import QQ, ExactMatrix, Field
from .localcoh import (
    GradedPiece,
    ext_piece,
    ext_piece_general,
    hilbert_function_box,
    hilbert_series_closed_form,
    hochster_betti,
    lc_piece,
    lc_piece_via_T,
    multiplication_map,
)
from .structure import (
    BettiTable,
    FiltrationReport,
    PrimeIdealSet,
    associated_primes,
    betti_diagram,
    check_betti_inequality,
    filtration_quotients,
    is_extremal,
    minimal_associated_primes,
)
from .taylor import build_taylor, ext_via_taylor, stabilization_check, tor_via_taylor

__version__ = "0.1.0"

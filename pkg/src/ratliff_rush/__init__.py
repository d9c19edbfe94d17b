"""Ratliff-Rush closures, reduction numbers and Cohen-Macaulay tests for monomial ideals of numerical semigroup rings."""

from .criteria import (
    Microinvariants,
    PullbackData,
    gr_module_is_cm,
    gr_ring_is_cm,
    h_is_one,
    intclosed_h_one,
    micro_ideal,
    micro_semigroup,
    pullback,
)
from .errors import (
    AmbientMismatch,
    BoundExceeded,
    EmptyGenerators,
    GcdNotOne,
    NoStabilization,
    NotClosed,
    NotIntegral,
    NotMember,
    SemigroupError,
)
from .filtration import (
    RRReport,
    conductor_index,
    h_number,
    power_reduction_bound,
    reduction_number,
    rr_closure,
    rr_closure_colon,
    rr_report,
    sufficient_condition,
)
from .ideals import (
    RelativeIdeal,
    blowup,
    conductor_ideal,
    difference,
    ideal,
    integral_closure,
    intersect,
    scale,
    shift,
)
from .semigroup import AperyTable, NumericalSemigroup, semigroup

__version__ = "0.1.0"

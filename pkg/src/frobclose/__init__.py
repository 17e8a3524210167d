"""Closure operations on parameter ideals in prime characteristic."""

from .closures import (
    ClosureResult,
    TightProbeResult,
    f_lim_closure,
    frobenius_closure,
    lim_then_frobenius,
    limit_closure,
    tight_closure_probe,
)
from .config import Config
from .criteria import (
    check_m_containment,
    corgor_search,
    fedder_fpure,
    is_parameter_sequence,
    probe_constancy,
    sample_parameter_sequences,
)
from .ideal_ops import (
    IdealHandle,
    bracket_power,
    colon,
    ideal,
    ideal_contains,
    ideal_equal,
    ideal_sum,
    intersect,
    product,
    saturate,
)
from .invariants import colength, invariant_record, multiplicity, quotient_length
from .ringcore import MonomialOrder, Polynomial, PolynomialRing, RingPresentation, load_ring, poly_parse

__version__ = "0.1.0"

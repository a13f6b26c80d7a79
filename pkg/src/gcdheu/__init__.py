"""Heuristic gcd of multivariate polynomials over Z and Z[i]."""

from .errors import (
    DomainError,
    GcdError,
    HeuristicFailure,
    InvalidModulus,
    ParseError,
    ReconstructionOverflow,
    RingError,
    StructuralError,
    Unsupported,
)
from .heugcd import GcdConfig, GcdResult, choose_z, gcd_auto, heugcd, next_z
from .multipoly import MultiPoly, content_main
from .oracle import bezout_gamma, cauchy_root_bound, prs_gcd, verify_first_try_bound
from .ring import GaussInt, Ring, coeff_height, exact_div, gint_gcd, gsmod, smod
from .zadic import reconstruct, symmetric_digits

__version__ = "0.1.0"

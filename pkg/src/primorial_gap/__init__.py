"""Verification toolkit for prime gap and primorial inequalities.

The package checks classical inequalities between primes, primorials, and
binomial quantities over explicit ranges, with certified comparisons that
fall back to exact big-integer arithmetic whenever floating point cannot
separate the two sides.
"""

from .bigmath import (
    CertifiedLog,
    PrimorialLogs,
    binomial,
    compare_certified,
    ln_factorial,
    log_binomial_certified,
    log_certified,
    primorial,
    totient_primorial,
)
from .bounds import (
    AlphaProfile,
    ChainLink,
    ChainReport,
    RobbinsTerm,
    ThresholdForm,
    contradiction_chain,
    count_tuples_bruteforce,
    count_tuples_closed,
    eval_threshold,
    floor_power,
    robbins_gamma,
    solve_x0,
    stirling_bound_central,
    stirling_bound_power,
    x1_closed_form,
)
from .errors import DomainError, NoRootError, PrecisionError, ResourceLimitError
from .primes import PrimeEngine, PrimeTable, default_engine, sieve_upto
from .registry import (
    InequalitySpec,
    VerificationReport,
    get_spec,
    registry,
    run_suite,
    verify,
    verify_theorem_alpha,
    verify_theorem_linear,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaProfile",
    "CertifiedLog",
    "ChainLink",
    "ChainReport",
    "DomainError",
    "InequalitySpec",
    "NoRootError",
    "PrecisionError",
    "PrimeEngine",
    "PrimeTable",
    "PrimorialLogs",
    "ResourceLimitError",
    "RobbinsTerm",
    "ThresholdForm",
    "VerificationReport",
    "binomial",
    "compare_certified",
    "contradiction_chain",
    "count_tuples_bruteforce",
    "count_tuples_closed",
    "default_engine",
    "eval_threshold",
    "floor_power",
    "get_spec",
    "ln_factorial",
    "log_binomial_certified",
    "log_certified",
    "primorial",
    "registry",
    "robbins_gamma",
    "run_suite",
    "sieve_upto",
    "solve_x0",
    "stirling_bound_central",
    "stirling_bound_power",
    "totient_primorial",
    "verify",
    "verify_theorem_alpha",
    "verify_theorem_linear",
    "x1_closed_form",
    "__version__",
]

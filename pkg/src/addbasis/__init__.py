"""Exact invariants of additive bases given as eventually periodic sets.

The package computes, without sampling error, everything the decomposition
theory attaches to such a basis: its order with a per-residue coverage
certificate, essential elements and finite essential subsets, the module
and the primitive/elementary derived sets, the full dessentialization
trace, the underlying arithmetic progression (difference, offset, core,
reservoir), and the prime-indexed witness families with their analytic
coefficient bounds.  A brute-force oracle and an empirical profiler cover
cross-validation and non-periodic streams.
"""

from .eps import (EMPTY, EPS, NATURALS, EventuallyPeriodicSet, canonicalize,
                  from_elements, gcd_of_differences, is_equivalent_cofinite)
from .essentials import (CoprimalityReport, EssentialProfile,
                         audit_divisor_coprimality, divisor_for,
                         essential_elements, module_of)
from .oracle import (DifferentialReport, EmpiricalProfile, differential_check,
                     empirical_profile, naive_essential_subsets, naive_order,
                     random_basis, random_eps)
from .order import (BasisDecision, CycleProof, ExceptionalSums, NotABasisError,
                    OrderCertificate, decide_basis, effective_bound, is_basis,
                    membership_from_certificate, order, order_certificate,
                    sumset_membership_table)
from .primes import (MRReport, PrimeTable, SweepResult, alpha_threshold,
                     best_constant, c_coefficient, coefficient_sweep,
                     family_An, family_An_order, family_Xn, nth_prime,
                     prime_sum, primes_up_to, verify_mr)
from .progression import (DecompositionReport, ProgressionProfile,
                          ReservoirReport, audit_decomposition,
                          audit_reservoir_bound, essential_subsets,
                          has_essential_subset, progression_profile)
from .reduction import (BoundReport, ReductionStep, ReductionTrace,
                        audit_elementary_order, audit_order_sandwich,
                        audit_prime_sum_floor, construct_prescribed,
                        elementary_set, primitive_set, reduction_depth_bound,
                        strip_essential_elements, strip_essential_subsets)
from .setexpr import SetExprError, format_set_expr, parse_set_expr

__version__ = "0.1.0"

__all__ = [
    "EMPTY", "EPS", "NATURALS", "EventuallyPeriodicSet", "canonicalize",
    "from_elements", "gcd_of_differences", "is_equivalent_cofinite",
    "CoprimalityReport", "EssentialProfile", "audit_divisor_coprimality",
    "divisor_for", "essential_elements", "module_of",
    "DifferentialReport", "EmpiricalProfile", "differential_check",
    "empirical_profile", "naive_essential_subsets", "naive_order",
    "random_basis", "random_eps",
    "BasisDecision", "CycleProof", "ExceptionalSums", "NotABasisError",
    "OrderCertificate", "decide_basis", "effective_bound", "is_basis",
    "membership_from_certificate", "order", "order_certificate",
    "sumset_membership_table",
    "MRReport", "PrimeTable", "SweepResult", "alpha_threshold",
    "best_constant", "c_coefficient", "coefficient_sweep", "family_An",
    "family_An_order", "family_Xn", "nth_prime", "prime_sum", "primes_up_to",
    "verify_mr",
    "DecompositionReport", "ProgressionProfile", "ReservoirReport",
    "audit_decomposition", "audit_reservoir_bound", "essential_subsets",
    "has_essential_subset", "progression_profile",
    "BoundReport", "ReductionStep", "ReductionTrace", "audit_elementary_order",
    "audit_order_sandwich", "audit_prime_sum_floor", "construct_prescribed",
    "elementary_set", "primitive_set", "reduction_depth_bound",
    "strip_essential_elements", "strip_essential_subsets",
    "SetExprError", "format_set_expr", "parse_set_expr",
    "__version__",
]

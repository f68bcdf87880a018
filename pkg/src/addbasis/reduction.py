"""Primitive and elementary sets, and the iterated reductions built on them.

For a basis A with essential elements Ess(A), module m = m(A) and least
non-essential element x0:

    primitive_set(A)  = ((A minus Ess) - x0) / m      (strips essentiality)
    elementary_set(A) = (m N + x0) u Ess(A)           (keeps only essentiality)

Iterating primitive_set must reach a set with no essential elements: each
step divides the set's period by m >= 2 (q divides m, and q >= 2 while
essential elements exist), so the depth is at most log2 of the starting
period.  The general variant removes the union of all essential subsets per
step instead; its depth is bounded by the number of prime factors, counted
with multiplicity, of the progression difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .eps import EPS, NATURALS, gcd_of_differences
from .essentials import _require_basis, essential_elements
from .order import order, order_certificate
from .progression import essential_subsets, progression_profile
from .primes import nth_prime, prime_sum


@dataclass(frozen=True)
class ReductionStep:
    """One stage of a reduction: the stage's set, how many essential
    elements (or subsets) it carries, and the module/anchor used to contract
    it into the next stage."""
    stage: EPS
    essential_count: int
    module: int
    anchor: int


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    delta: int

    @property
    def final(self) -> EPS:
        return self.steps[-1].stage

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(st.essential_count for st in self.steps)


def primitive_set(s: EPS) -> EPS:
    profile = essential_elements(s)
    return s.remove(profile.elements).affine_contract(profile.module,
                                                      profile.anchor)


def elementary_set(s: EPS) -> EPS:
    profile = essential_elements(s)
    m = profile.module
    tail = EPS(m, frozenset({profile.anchor % m}), profile.anchor, ())
    return tail.union(EPS(1, frozenset(), 0, profile.elements))


def strip_essential_elements(s: EPS) -> ReductionTrace:
    """Iterate primitive_set until no essential element remains, recording
    every stage."""
    _require_basis(s)
    steps: list[ReductionStep] = []
    cur = s
    while True:
        profile = essential_elements(cur)
        steps.append(ReductionStep(cur, profile.count, profile.module,
                                   profile.anchor))
        if profile.count == 0:
            return ReductionTrace(tuple(steps), len(steps) - 1)
        cur = cur.remove(profile.elements).affine_contract(profile.module,
                                                           profile.anchor)


def strip_essential_subsets(s: EPS) -> ReductionTrace:
    """Iterate the coarser reduction that removes the union of all essential
    subsets per step.  The progression difference divides down by the
    contraction module every step, so it reaches 1."""
    _require_basis(s)
    steps: list[ReductionStep] = []
    cur = s
    while True:
        parts = essential_subsets(cur)
        removed = sorted({x for p in parts for x in p})
        rest = cur.remove(removed)
        m = gcd_of_differences(rest)
        anchor = rest.min_element
        assert anchor is not None
        steps.append(ReductionStep(cur, len(parts), m, anchor))
        if not parts:
            if progression_profile(cur).difference != 1:
                raise RuntimeError(
                    "no essential subset found on a set with difference > 1")
            return ReductionTrace(tuple(steps), len(steps) - 1)
        cur = rest.affine_contract(m, anchor)


def reduction_depth_bound(s: EPS) -> float:
    """Bound on the element-stripping depth in terms of the order h and the
    coverage point N of the h-fold sums: max(log2 N + 1, N^(1/h) - 2).

    N here is the certificate threshold (largest per-class first covered
    value), not the refined bound after exceptional sums: the refinement
    can push N to 0 on sets of positive depth, where the displayed formula
    is simply false.  N is still replaced by max(N, 1) so the degenerate
    full-coverage case m = 1, N = 0 stays defined.  The bound is asserted
    against the actual depth before being returned."""
    h = order(s)
    n_eff = max(order_certificate(s).coverage_from, 1)
    bound = max(math.log2(n_eff) + 1, n_eff ** (1.0 / h) - 2)
    delta = strip_essential_elements(s).delta
    if delta > bound:
        raise AssertionError(
            f"stripping depth {delta} exceeds its bound {bound}")
    return bound


def construct_prescribed(counts: list[int], modulus_cap: int = 10 ** 8) -> EPS:
    """A basis whose element-stripping trace has exactly the given essential
    counts (then 0).

    Built innermost-first: starting from N, each layer for count c scales by
    p_1 ... p_c and adjoins the c products with one prime omitted.  The
    resulting trace is post-verified, not trusted.
    """
    if not counts or any(c < 1 for c in counts):
        raise ValueError("counts must be a nonempty list of positive integers")
    modulus = math.prod(math.prod(nth_prime(i + 1) for i in range(c))
                        for c in counts)
    if modulus > modulus_cap:
        raise ValueError(
            f"constructed period {modulus} exceeds the cap {modulus_cap}")
    cur = NATURALS
    for c in reversed(counts):
        primes = [nth_prime(i + 1) for i in range(c)]
        q = math.prod(primes)
        hats = tuple(q // p for p in primes)
        cur = cur.scale(q).union(EPS(1, frozenset(), 0, hats))
    trace = strip_essential_elements(cur)
    expected = tuple(counts) + (0,)
    if trace.counts != expected or trace.delta != len(counts):
        raise RuntimeError(
            f"construction produced trace {trace.counts}, wanted {expected}")
    return cur


@dataclass(frozen=True)
class BoundReport:
    name: str
    quantities: dict[str, int | float]
    holds: bool
    equality: bool | None = None


def audit_order_sandwich(s: EPS) -> BoundReport:
    """ord(elementary) <= ord(A) <= ord(primitive) + ord(elementary) - 1."""
    ord_a = order(s)
    ord_p = order(primitive_set(s))
    ord_d = order(elementary_set(s))
    return BoundReport(
        name="order-sandwich",
        quantities={"ord": ord_a, "ord_primitive": ord_p,
                    "ord_elementary": ord_d},
        holds=ord_d <= ord_a <= ord_p + ord_d - 1,
    )


def audit_elementary_order(s: EPS) -> BoundReport:
    """sum(d_i) - s + 1 <= ord(elementary) <= (m/q)(sum(d_i) - s (q/m)^(1/s)) + 1,
    an equality whenever q = m.  The right side needs a real s-th root, so it
    is evaluated in floating point with a 1e-9 tolerance unless the exact
    q = m shortcut applies."""
    profile = essential_elements(s)
    sct = profile.count
    if sct == 0:
        return BoundReport("elementary-order-bounds",
                           {"essential_count": 0}, holds=True, equality=None)
    ord_d = order(elementary_set(s))
    dsum = sum(profile.divisors)
    lower = dsum - sct + 1
    q, m = profile.q, profile.module
    if q == m:
        return BoundReport(
            "elementary-order-bounds",
            {"lower": lower, "ord_elementary": ord_d, "upper": lower,
             "q": q, "module": m},
            holds=lower == ord_d, equality=True)
    upper = (m / q) * (dsum - sct * (q / m) ** (1.0 / sct)) + 1
    return BoundReport(
        "elementary-order-bounds",
        {"lower": lower, "ord_elementary": ord_d, "upper": upper,
         "q": q, "module": m},
        holds=lower <= ord_d <= upper + 1e-9, equality=False)


def audit_prime_sum_floor(s: EPS) -> BoundReport:
    """A basis with s essential elements has order at least
    p_1 + ... + p_s - s + 1 (the divisors are pairwise coprime, hence at
    least the first s primes)."""
    profile = essential_elements(s)
    sct = profile.count
    floor = prime_sum(sct) - sct + 1
    ord_a = order(s)
    return BoundReport(
        name="prime-sum-floor",
        quantities={"essential_count": sct, "floor": floor, "ord": ord_a},
        holds=ord_a >= floor,
    )

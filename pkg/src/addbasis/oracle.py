"""Brute-force cross-checks, deliberately sharing no sumset or gcd code
with the exact engine, plus an empirical profile for streams that are not
eventually periodic (primes, k-th powers).

naive_order works on a plain enumerated prefix of the set.  Its h-fold
tables are exact on [0, max(elements)] (a sum below the bound only ever
uses summands below the bound), so the only failure mode is an
inconclusive answer, never a wrong one, provided the covering run is
demanded at the very top of the enumerated range: transient runs made of
small-element sums sit low in the table, while a class the set never
covers punches periodic holes all the way up.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .eps import EPS
from .order import decide_basis
from .progression import essential_subsets


def naive_order(elements: Sequence[int], h_max: int, window: int,
                tail_min: int = 0) -> int | None:
    """Smallest h <= h_max whose exact h-fold sums cover the entire window
    [B - window + 1, B], B = max(elements); None when no level concludes
    (not a basis, or the enumeration bound was too small to tell).

    tail_min mirrors the periodic-part discipline naively: only sums using
    at least one element >= tail_min count as covering.  The default 0
    makes every element tail-eligible.
    """
    if h_max < 1 or window < 1:
        raise ValueError("h_max and window must be >= 1")
    xs = sorted(set(elements))
    if not xs or xs[0] < 0:
        raise ValueError("elements must be nonnegative and nonempty")
    top = xs[-1]
    if window > top + 1:
        raise ValueError("window exceeds the enumerated range")
    table_mask = (1 << (top + 1)) - 1
    window_mask = (1 << window) - 1
    low = [x for x in xs if x < tail_min]
    high = [x for x in xs if x >= tail_min]

    plain = 1  # exact 0-fold sums: {0}, no tail element used yet
    tailed = 0
    for h in range(1, h_max + 1):
        both = plain | tailed
        nxt_plain = 0
        nxt_tailed = 0
        for x in low:
            nxt_plain |= plain << x
            nxt_tailed |= tailed << x
        for x in high:
            nxt_tailed |= both << x
        plain = nxt_plain & table_mask
        tailed = nxt_tailed & table_mask
        if (tailed >> (top - window + 1)) & window_mask == window_mask:
            return h
    return None


def naive_essential_subsets(s: EPS, cap: int = 16) -> list[tuple[int, ...]]:
    """Exhaustive search for the inclusion-minimal finite parts whose
    removal kills the basis.  Candidates are subsets of the exceptional
    block, enumerated by size with killer-superset pruning; basicity of
    each survivor is decided by the exact engine."""
    pool = sorted(s.exceptional)
    if len(pool) > cap:
        raise ValueError(f"exceptional block larger than cap ({len(pool)} > {cap})")
    if not decide_basis(s).is_basis:
        raise ValueError("not an additive basis")
    found: list[tuple[int, ...]] = []
    for k in range(1, len(pool) + 1):
        for part in combinations(pool, k):
            chosen = set(part)
            if any(set(f) <= chosen for f in found):
                continue
            if not decide_basis(s.remove(part)).is_basis:
                found.append(part)
    return sorted(found, key=lambda p: (len(p), p))


@dataclass(frozen=True)
class EmpiricalProfile:
    """Progression estimates from a finite ascending sample; no maximality
    certificate is attached, the labels are empirical by construction.

    gcd_all is the gcd of differences over the whole sample; difference is
    the gcd once it has stabilized on the upper part of the sample (for the
    primes: 1 versus 2).  stable_from is the first sample index from which
    every later gap conforms to `difference`; conclusive says the
    stabilization happened before the upper half began.
    """
    gcd_all: int
    difference: int
    offset: int
    reservoir: tuple[int, ...]
    stable_from: int
    sample_count: int
    conclusive: bool


def empirical_profile(stream: Iterable[int], bound: int) -> EmpiricalProfile:
    xs: list[int] = []
    last = -1
    for x in stream:
        if x <= last:
            raise ValueError("stream must be strictly ascending")
        if x > bound:
            break
        xs.append(x)
        last = x
    if len(xs) < 2:
        raise ValueError("need at least two sample elements within the bound")

    gaps = [b - a for a, b in zip(xs, xs[1:])]
    suffix = gaps[:]  # suffix[k] = gcd of gaps[k:]
    for k in range(len(gaps) - 2, -1, -1):
        suffix[k] = math.gcd(suffix[k], suffix[k + 1])
    gcd_all = suffix[0]
    mid = len(gaps) // 2
    difference = suffix[mid] if mid < len(gaps) else gaps[-1]
    stable_from = mid
    while stable_from > 0 and suffix[stable_from - 1] == difference:
        stable_from -= 1
    offset = xs[-1] % difference
    reservoir = tuple(x for x in xs if x % difference != offset)
    return EmpiricalProfile(
        gcd_all=gcd_all,
        difference=difference,
        offset=offset,
        reservoir=reservoir,
        stable_from=stable_from,
        sample_count=len(xs),
        conclusive=stable_from < mid and all(x < xs[mid] for x in reservoir),
    )


# ---------------------------------------------------------------------------
# randomized instances for differential validation


def random_eps(rng: random.Random, max_modulus: int = 40,
               max_exceptional: int = 8) -> EPS:
    """Random infinite EPS: modest modulus, a few residue classes, a small
    exceptional block.  Canonicalization runs in the constructor, so the
    draw parameters are raw, not canonical."""
    m = rng.randint(1, max_modulus)
    classes = rng.randint(1, min(m, 4))
    residues = frozenset(rng.sample(range(m), classes))
    threshold = rng.randint(0, 2 * m)
    f_count = rng.randint(0, max_exceptional)
    exceptional = tuple(rng.randint(0, 3 * m) for _ in range(f_count))
    return EPS(m, residues, threshold, exceptional)


def random_basis(rng: random.Random, max_modulus: int = 40,
                 max_exceptional: int = 8, max_order: int | None = None,
                 attempts: int = 2000) -> EPS:
    """Rejection-sample random_eps until the engine certifies a basis (and,
    when max_order is given, one of order at most that)."""
    for _ in range(attempts):
        s = random_eps(rng, max_modulus, max_exceptional)
        decision = decide_basis(s)
        if not decision.is_basis:
            continue
        if max_order is not None and decision.order > max_order:
            continue
        return s
    raise RuntimeError("random basis sampling hit the attempt cap")


@dataclass(frozen=True)
class DifferentialReport:
    instances: int
    conclusive_orders: int
    order_disagreements: tuple[str, ...]
    subset_disagreements: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.order_disagreements and not self.subset_disagreements


def differential_check(seed: int, iters: int, max_order: int = 20,
                       subset_cap: int = 12) -> DifferentialReport:
    """Engine versus oracle on `iters` random bases: orders must agree
    whenever the oracle concludes, essential-subset lists must agree
    whenever the exceptional block fits under subset_cap.  The enumeration
    bound is sized from the instance so that a conclusive run sits beyond
    every purely-exceptional sum."""
    rng = random.Random(seed)
    conclusive = 0
    bad_orders: list[str] = []
    bad_subsets: list[str] = []
    for _ in range(iters):
        s = random_basis(rng, max_order=max_order)
        h = decide_basis(s).order
        e_max = s.threshold + 2 * s.modulus + max(s.exceptional, default=0)
        window = 2 * s.modulus + 2
        bound = h * e_max + 2 * window + 1
        naive = naive_order(s.enumerate_upto(bound), h + 2, window)
        if naive is not None:
            conclusive += 1
            if naive != h:
                bad_orders.append(f"{s!r}: engine {h}, oracle {naive}")
        if len(s.exceptional) <= subset_cap:
            a = essential_subsets(s)
            b = naive_essential_subsets(s, cap=subset_cap)
            if a != b:
                bad_subsets.append(f"{s!r}: engine {a}, oracle {b}")
    return DifferentialReport(iters, conclusive,
                              tuple(bad_orders), tuple(bad_subsets))

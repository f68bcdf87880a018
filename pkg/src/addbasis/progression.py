"""Progression structure of a basis: its largest underlying arithmetic
progression and the finite pool holding every essential subset.

Any eventually periodic basis A decomposes uniquely as

    A = (a B + b)  |_|  E,     0 <= b < a,  every x in E has x != b mod a,

where a is the gcd of differences of the cofinite core of A (so it is the
LARGEST difference for which such a decomposition exists), B is again a
basis, and E is finite.  Essential subsets of A live inside E: removing a
part P kills the basis exactly when the survivors collapse into one residue
class mod some prime p, the tail forces p | a, and then P must contain
everything off that class.  That gives the complete candidate family

    P_p = {x in E : x != b mod p},   p prime, p | a,

which only needs a minimality check (a candidate can properly contain
another essentiality, in which case it is not one itself).
"""

from __future__ import annotations

from dataclasses import dataclass

from .eps import EMPTY, EPS, gcd_of_differences
from .essentials import _require_basis
from .order import is_basis


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class ProgressionProfile:
    """difference a, offset b, the contracted core B, the off-progression
    reservoir E, and the prime-factor lengths of a.  For non-bases (reported
    with basis=False for diagnosis) the same decomposition of the eventual
    part is used; finite sets get the 0 sentinel difference."""
    difference: int
    offset: int
    core: EPS
    reservoir: tuple[int, ...]
    radical_length: int
    total_length: int
    basis: bool

    def rebuild(self) -> EPS:
        """(a B + b) u E; equals the profiled set."""
        if self.difference == 0:
            return EPS(1, frozenset(), 0, self.reservoir)
        progression = self.core.scale(self.difference).translate(self.offset)
        return progression.union(EPS(1, frozenset(), 0, self.reservoir))


def progression_profile(s: EPS) -> ProgressionProfile:
    basis = (not s.is_finite) and gcd_of_differences(s) == 1
    if s.is_finite:
        return ProgressionProfile(0, 0, EMPTY, s.exceptional, 0, 0, False)
    tail = EPS(s.modulus, s.residues, s.threshold, ())
    a = gcd_of_differences(tail)
    if a == 0:
        a = 1  # single tail class with modulus folding to one value cannot occur
    b = min(tail.tail_starts()) % a if a > 1 else 0
    on_class = tuple(f for f in s.exceptional if f % a == b)
    reservoir = tuple(f for f in s.exceptional if f % a != b)
    core = EPS(s.modulus, s.residues, s.threshold, on_class).affine_contract(a, b)
    fac = _factorize(a) if a > 1 else {}
    return ProgressionProfile(a, b, core, reservoir,
                              len(fac), sum(fac.values()), basis)


def has_essential_subset(s: EPS) -> bool:
    _require_basis(s)
    return progression_profile(s).difference >= 2


def essential_subsets(s: EPS) -> list[tuple[int, ...]]:
    """All essential subsets (finite inclusion-minimal parts whose removal
    kills the basis), via the candidate family above; each candidate is
    verified to kill and checked minimal through the order engine."""
    _require_basis(s)
    profile = progression_profile(s)
    a, b = profile.difference, profile.offset
    if a == 1:
        return []
    found: set[tuple[int, ...]] = set()
    for p in _factorize(a):
        cand = tuple(x for x in profile.reservoir if x % p != b % p)
        if not cand or is_basis(s.remove(cand)):
            continue
        minimal = all(is_basis(s.remove([x for x in cand if x != y]))
                      for y in cand)
        if minimal:
            found.add(cand)
    parts = [p1 for p1 in found
             if not any(set(p2) < set(p1) for p2 in found)]
    return sorted(parts, key=lambda p: (len(p), p))


@dataclass(frozen=True)
class ReservoirReport:
    parts: tuple[tuple[int, ...], ...]
    reservoir: tuple[int, ...]
    difference: int
    radical_length: int
    within_reservoir: bool
    count_bounded: bool

    @property
    def holds(self) -> bool:
        return self.within_reservoir and self.count_bounded


def audit_reservoir_bound(s: EPS) -> ReservoirReport:
    """Every essential subset sits inside the reservoir, and there are at
    most as many as the difference has distinct prime factors."""
    profile = progression_profile(s)
    parts = tuple(essential_subsets(s))
    pool = set(profile.reservoir)
    return ReservoirReport(
        parts=parts,
        reservoir=profile.reservoir,
        difference=profile.difference,
        radical_length=profile.radical_length,
        within_reservoir=all(set(p) <= pool for p in parts),
        count_bounded=len(parts) <= profile.radical_length,
    )


@dataclass(frozen=True)
class DecompositionReport:
    difference_matches: bool
    core_translate_matches: bool
    core_is_free: bool

    @property
    def consistent(self) -> bool:
        return (self.difference_matches == self.core_translate_matches
                == self.core_is_free)


def _equivalent_up_to_translation(s1: EPS, s2: EPS) -> bool:
    if s1.is_finite or s2.is_finite:
        return s1.is_finite and s2.is_finite
    import math as _math
    m = _math.lcm(s1.modulus, s2.modulus)
    r1 = {c for c in range(m) if c % s1.modulus in s1.residues}
    r2 = {c for c in range(m) if c % s2.modulus in s2.residues}
    return any({(c + k) % m for c in r2} == r1 for k in range(m))


def audit_decomposition(s: EPS, a_alt: int, b_alt: int,
                        core_alt: EPS) -> DecompositionReport:
    """Given an alternative decomposition S ~ a' B' + b', the three
    statements "a' is the true difference", "B' is a translate of the true
    core up to finite differences" and "B' is a basis with no essential
    subset" stand or fall together; the report checks all three on this
    instance."""
    _require_basis(s)
    if a_alt < 1:
        raise ValueError("difference must be >= 1")
    rebuilt = core_alt.scale(a_alt).translate(b_alt)
    if not s.equivalent(rebuilt):
        raise ValueError("decomposition mismatch: a'B'+b' is not "
                         "cofinitely equal to the set")
    profile = progression_profile(s)
    alt_free = (not core_alt.is_finite
                and gcd_of_differences(core_alt) == 1
                and progression_profile(core_alt).difference == 1)
    return DecompositionReport(
        difference_matches=a_alt == profile.difference,
        core_translate_matches=_equivalent_up_to_translation(
            profile.core, core_alt),
        core_is_free=alt_free,
    )

"""Essential elements of a basis and their associated divisors.

An element x of a basis A is essential when A without x stops being a basis,
which for an infinite eventually periodic set happens exactly when the gcd of
differences of A minus x jumps to d >= 2 (the removal criterion).  Only
exceptional elements can be essential: removing a tail member leaves the rest
of its residue class in place, so every witness difference survives and the
gcd stays 1.  That pruning is asserted against exhaustive removal in the test
suite rather than trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .eps import EPS, gcd_of_differences
from .order import NotABasisError


@dataclass(frozen=True)
class EssentialProfile:
    """Essential elements with their divisors and the derived quantities:
    q = product of divisors, module = gcd of differences of the basis with
    all essential elements removed, anchor = least non-essential element."""
    elements: tuple[int, ...]
    divisors: tuple[int, ...]
    q: int
    module: int
    anchor: int

    @property
    def count(self) -> int:
        return len(self.elements)


def _require_basis(s: EPS) -> None:
    # gcd = 1 on an infinite eventually periodic set is equivalent to
    # basicity; the equivalence with the order engine is property-tested.
    if s.is_finite or gcd_of_differences(s) != 1:
        raise NotABasisError("not an additive basis")


def essential_elements(s: EPS) -> EssentialProfile:
    _require_basis(s)
    ess: list[int] = []
    divs: list[int] = []
    for f in s.exceptional:
        d = gcd_of_differences(s.remove([f]))
        if d >= 2:
            ess.append(f)
            divs.append(d)
    rest = s.remove(ess)
    profile = EssentialProfile(
        elements=tuple(ess),
        divisors=tuple(divs),
        q=math.prod(divs),
        module=gcd_of_differences(rest),
        anchor=rest.min_element if rest.min_element is not None else 0,
    )
    return profile


def divisor_for(s: EPS, x: int) -> int:
    """Associated divisor of an essential element: the gcd of differences
    left behind by its removal."""
    if x not in s:
        raise ValueError(f"{x} is not a member")
    d = gcd_of_differences(s.remove([x]))
    if d < 2:
        raise ValueError(f"{x} is not essential (gcd stays {d})")
    return d


def module_of(s: EPS) -> int:
    """gcd of differences of the basis without its essential elements."""
    return essential_elements(s).module


@dataclass(frozen=True)
class CoprimalityReport:
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    divisor1: int
    divisor2: int
    coprime: bool


def _is_essentiality(s: EPS, part: tuple[int, ...]) -> bool:
    """part is a finite essentiality: removing it kills the basis and it is
    inclusion-minimal for that."""
    if not part or any(p not in s for p in part):
        return False
    if gcd_of_differences(s.remove(part)) == 1:
        return False
    return all(gcd_of_differences(s.remove([p for p in part if p != x])) == 1
               for x in part)


def audit_divisor_coprimality(s: EPS, part1: tuple[int, ...],
                              part2: tuple[int, ...]) -> CoprimalityReport:
    """Two distinct essentialities that do not jointly exhaust the basis
    leave behind coprime divisors.  Preconditions are enforced, not assumed:
    the guard is what rules out the classic failure on infinite
    essentialities (all of 2N removed from N, say)."""
    _require_basis(s)
    p1, p2 = tuple(sorted(part1)), tuple(sorted(part2))
    if p1 == p2:
        raise ValueError("the two parts must be distinct")
    if not _is_essentiality(s, p1):
        raise ValueError(f"{p1} is not a (finite) essentiality of the basis")
    if not _is_essentiality(s, p2):
        raise ValueError(f"{p2} is not a (finite) essentiality of the basis")
    d1 = gcd_of_differences(s.remove(p1))
    d2 = gcd_of_differences(s.remove(p2))
    return CoprimalityReport(p1, p2, d1, d2, math.gcd(d1, d2) == 1)

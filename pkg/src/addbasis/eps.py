"""Eventually periodic subsets of the nonnegative integers.

An EventuallyPeriodicSet describes

    S = F  |_|  { x >= t : x mod m in R }

with a finite exceptional part F kept disjoint from the periodic tail.  Every
set-valued operation in this package (translation, affine contraction, element
removal, union) stays inside this class, which is what makes the order,
essential-element and progression computations exact instead of sampled.

Canonical form (enforced on construction, so equality and hashing are
structural):

* every f in F has f < t or f mod m not in R (nothing in F duplicates the tail);
* t is minimal: lowering it further would claim an integer that is not in the
  set (members of F met on the way down are absorbed into the tail instead);
* m is the minimal period of the tail residue set R;
* a finite set is stored as m = 1, R = {}, t = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    modulus: int = 1
    residues: frozenset[int] = field(default_factory=frozenset)
    threshold: int = 0
    exceptional: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        m, r, t, f = _canonical(self.modulus, self.residues,
                                self.threshold, self.exceptional)
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "residues", r)
        object.__setattr__(self, "threshold", t)
        object.__setattr__(self, "exceptional", f)

    # -- membership and enumeration --------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.threshold and n % self.modulus in self.residues:
            return True
        return n in set(self.exceptional)

    @property
    def is_finite(self) -> bool:
        return not self.residues

    @property
    def min_element(self) -> int | None:
        """Smallest member, or None for the empty set."""
        candidates = list(self.exceptional)
        if self.residues:
            candidates.append(min(self._class_start(r) for r in self.residues))
        return min(candidates, default=None)

    def _class_start(self, r: int) -> int:
        """First tail member of residue class r (>= threshold)."""
        t, m = self.threshold, self.modulus
        return t + (r - t) % m

    def tail_starts(self) -> list[int]:
        """Least tail member per residue class, ascending."""
        return sorted(self._class_start(r) for r in self.residues)

    def enumerate_upto(self, bound: int) -> list[int]:
        """All members <= bound, ascending.  Steps class-by-class, so the
        cost is the output size, not the bound."""
        out: list[int] = [f for f in self.exceptional if f <= bound]
        for r in self.residues:
            out.extend(range(self._class_start(r), bound + 1, self.modulus))
        out.sort()
        return out

    # -- structural operations --------------------------------------------

    def translate(self, k: int) -> "EventuallyPeriodicSet":
        """The set {x + k : x in S}; k may be negative if no member drops
        below zero."""
        lo = self.min_element
        if lo is None:
            return self
        if lo + k < 0:
            raise ValueError(f"translation by {k} sends {lo} below zero")
        m = self.modulus
        res = frozenset((r + k) % m for r in self.residues)
        return EventuallyPeriodicSet(m, res, max(self.threshold + k, 0),
                                     tuple(f + k for f in self.exceptional))

    def scale(self, a: int) -> "EventuallyPeriodicSet":
        """The set {a x : x in S} for a >= 1."""
        if a < 1:
            raise ValueError("scale factor must be >= 1")
        if a == 1:
            return self
        m = self.modulus
        res = frozenset((a * r) % (a * m) for r in self.residues)
        return EventuallyPeriodicSet(a * m, res, a * self.threshold,
                                     tuple(a * f for f in self.exceptional))

    def affine_contract(self, a: int, b: int) -> "EventuallyPeriodicSet":
        """The set {(x - b)/a : x in S}, defined when every member is >= b
        and congruent to b mod a.  Violations raise ValueError: they signal
        that the caller's set was not uniform on one residue class."""
        if a < 1:
            raise ValueError("contraction factor must be >= 1")
        b_mod = b % a
        for f in self.exceptional:
            if f < b or f % a != b_mod:
                raise ValueError(f"element {f} is not of the form {a}x+{b}")
        if not self.residues:
            return EventuallyPeriodicSet(
                1, frozenset(), 0, tuple((f - b) // a for f in self.exceptional))
        if self.modulus % a != 0:
            raise ValueError(
                f"tail of period {self.modulus} is not contained in one class mod {a}")
        acc = EventuallyPeriodicSet(
            1, frozenset(), 0, tuple((f - b) // a for f in self.exceptional))
        m_new = self.modulus // a
        for r in self.residues:
            w = self._class_start(r)
            if w < b or w % a != b_mod:
                raise ValueError(f"tail element {w} is not of the form {a}x+{b}")
            z = (w - b) // a
            acc = acc.union(EventuallyPeriodicSet(m_new, frozenset({z % m_new}), z, ()))
        return acc

    def remove(self, points: Iterable[int]) -> "EventuallyPeriodicSet":
        """The set S without the given (finite, contained) points.  A removed
        tail member punches a hole in the periodic part, so the threshold is
        raised past it and the surviving tail members below become
        exceptional."""
        pts = sorted(set(points))
        for p in pts:
            if p not in self:
                raise ValueError(f"{p} is not a member, cannot remove it")
        f_left = [f for f in self.exceptional if f not in set(pts)]
        in_tail = [p for p in pts
                   if p >= self.threshold and p % self.modulus in self.residues]
        if not in_tail:
            return EventuallyPeriodicSet(self.modulus, self.residues,
                                         self.threshold, tuple(f_left))
        t_new = max(in_tail) + 1
        removed = set(in_tail)
        for r in self.residues:
            for x in range(self._class_start(r), t_new, self.modulus):
                if x not in removed:
                    f_left.append(x)
        return EventuallyPeriodicSet(self.modulus, self.residues, t_new,
                                     tuple(f_left))

    def union(self, other: "EventuallyPeriodicSet") -> "EventuallyPeriodicSet":
        a, b = self, other
        if a.is_finite and b.is_finite:
            return EventuallyPeriodicSet(
                1, frozenset(), 0, a.exceptional + b.exceptional)
        if a.is_finite:
            a, b = b, a
        if b.is_finite:
            return EventuallyPeriodicSet(a.modulus, a.residues, a.threshold,
                                         a.exceptional + b.exceptional)
        m = math.lcm(a.modulus, b.modulus)
        res = frozenset(c for c in range(m)
                        if c % a.modulus in a.residues or c % b.modulus in b.residues)
        t = max(a.threshold, b.threshold)
        extra: list[int] = []
        for part in (a, b):
            for r in part.residues:
                extra.extend(range(part._class_start(r), t, part.modulus))
        return EventuallyPeriodicSet(
            m, res, t, a.exceptional + b.exceptional + tuple(extra))

    def equivalent(self, other: "EventuallyPeriodicSet") -> bool:
        """True when the symmetric difference is finite.  Only the eventual
        residue structure matters, so align both tails to the lcm modulus and
        compare residue sets."""
        if self.is_finite or other.is_finite:
            return self.is_finite and other.is_finite
        m = math.lcm(self.modulus, other.modulus)
        mine = {c for c in range(m) if c % self.modulus in self.residues}
        theirs = {c for c in range(m) if c % other.modulus in other.residues}
        return mine == theirs


EPS = EventuallyPeriodicSet


def _canonical(m: int, residues: Iterable[int], t: int,
               exceptional: Iterable[int]) -> tuple[int, frozenset[int], int, tuple[int, ...]]:
    if m < 1:
        raise ValueError("modulus must be a positive integer")
    if t < 0:
        raise ValueError("threshold must be nonnegative")
    r = frozenset(residues)
    if any(not 0 <= x < m for x in r):
        raise ValueError("residues must lie in [0, modulus)")
    f = set(exceptional)
    if any(x < 0 for x in f):
        raise ValueError("exceptional elements must be nonnegative")

    if not r:
        return 1, frozenset(), 0, tuple(sorted(f))

    # Minimal threshold: walk the tail's residue-class members downward from
    # t; members found in F are absorbed, the first one missing from the set
    # stops the walk.  At most |F|+1 probes.
    while t > 0:
        below = [x for x in (t - 1 - ((t - 1 - c) % m) for c in r) if x >= 0]
        if not below:
            t = 0
            break
        x = max(below)
        if x in f:
            t = x
            continue
        t = x + 1
        break
    f = {x for x in f if x < t or x % m not in r}

    # Minimal period: the shifts fixing R form a subgroup of Z/m, so the
    # smallest divisor of m that works is the true period.
    for d in _divisors(m):
        if d == m or all((x + d) % m in r for x in r):
            if d < m:
                r = frozenset(x % d for x in r)
                m = d
            break
    return m, r, t, tuple(sorted(f))


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


NATURALS = EPS(1, frozenset({0}), 0, ())
EMPTY = EPS()


def canonicalize(modulus: int, residues: Iterable[int], threshold: int,
                 exceptional: Iterable[int]) -> EPS:
    """Canonical EPS for a raw (modulus, residues, threshold, exceptional)
    description of a set.  Idempotent; the constructor calls the same
    normalization."""
    return EPS(modulus, frozenset(residues), threshold, tuple(exceptional))


def gcd_of_differences(s: EPS) -> int:
    """gcd{x - y : x, y in S}, the quantity the removal criterion tests:
    an infinite S is an additive basis exactly when this gcd is 1.

    Exact via a finite witness set: the modulus (if the tail is nonempty),
    every exceptional element, and the least tail member of each residue
    class, all differenced against min(S).  Convention: 0 when |S| <= 1.
    """
    witnesses = list(s.exceptional) + s.tail_starts()
    if len(witnesses) < 2 and not s.residues:
        return 0
    lo = min(witnesses)
    g = s.modulus if s.residues else 0
    for w in witnesses:
        g = math.gcd(g, w - lo)
    return g


def is_equivalent_cofinite(s1: EPS, s2: EPS) -> bool:
    return s1.equivalent(s2)


def from_elements(elements: Iterable[int]) -> EPS:
    """Finite EPS from explicit elements."""
    return EPS(1, frozenset(), 0, tuple(elements))

"""Exact basicity and order of an eventually periodic set.

The h-fold sums of S = F u {x >= t : x mod m in R} are tracked through a
finite automaton over (residue mod m, tail-flag).  The flag records whether a
sum uses at least one tail summand; that is the soundness core:

* a flagged sum with value v and v = c mod m yields v + km in hA for every
  k >= 0, because the tail summand can absorb +km (the tail contains a full
  residue class beyond the threshold);
* unflagged sums draw on the finite exceptional part only, so there are
  finitely many of them and they can never certify cofinite coverage.

Hence hA agrees with N up to a finite set exactly when every residue class
mod m carries a flagged h-sum.  Reachable state sets are propagated as two
m-bit masks (unflagged, flagged); the sequence of mask pairs is deterministic
over a finite space, so the first repetition without success is an exact
negative certificate and no heuristic cap on h is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eps import EPS, gcd_of_differences


class NotABasisError(ValueError):
    pass


@dataclass(frozen=True)
class CycleProof:
    """The reach-set sequence repeated: step `repeats_at` equals step
    `first_seen` with no fully-covered step in between, so none ever occurs."""
    first_seen: int
    repeats_at: int


@dataclass(frozen=True)
class OrderCertificate:
    """Positive witness for hA ~ N at h = order.

    residue_minima[c] is the least value of an order-fold sum congruent to
    c mod modulus that uses a tail summand; the class is then covered from
    that value on in steps of modulus, so hA contains every integer >=
    coverage_from = max(residue_minima).
    """
    order: int
    modulus: int
    residue_minima: tuple[int, ...]
    coverage_from: int


@dataclass(frozen=True)
class BasisDecision:
    is_basis: bool
    order: int | None
    certificate: OrderCertificate | None
    cycle: CycleProof | None  # None for finite sets (no tail, trivially not a basis)


def decide_basis(s: EPS, allow_fewer: bool = False) -> BasisDecision:
    """Decide whether some h has hA ~ N; exact in both directions.

    allow_fewer switches to sums of at most h elements by adding a free zero
    summand (unflagged, value 0).
    """
    if s.is_finite:
        return BasisDecision(False, None, None, None)
    m = s.modulus
    mask = (1 << m) - 1

    def rot(x: int, g: int) -> int:
        return ((x << g) | (x >> (m - g))) & mask if g else x

    gens = [(r, True) for r in sorted(s.residues)]
    gens += sorted({(f % m, False) for f in s.exceptional})
    if allow_fewer:
        gens.append((0, False))
    u = 0  # residue classes holding a sum with no tail summand
    v = 0  # residue classes holding a sum with at least one tail summand
    for g, flagged in gens:
        if flagged:
            v |= 1 << g
        else:
            u |= 1 << g
    seen: dict[tuple[int, int], int] = {}
    h = 1
    while True:
        if v == mask:
            return BasisDecision(True, h, _certificate(s, h, allow_fewer), None)
        state = (u, v)
        if state in seen:
            return BasisDecision(False, None, None, CycleProof(seen[state], h))
        seen[state] = h
        nu, nv = 0, 0
        for g, flagged in gens:
            if flagged:
                nv |= rot(u | v, g)
            else:
                nu |= rot(u, g)
                nv |= rot(v, g)
        u, v = nu, nv
        h += 1


def is_basis(s: EPS) -> bool:
    return decide_basis(s).is_basis


def order(s: EPS, allow_fewer: bool = False) -> int:
    d = decide_basis(s, allow_fewer)
    if not d.is_basis:
        raise NotABasisError(
            f"not an additive basis (gcd of differences {gcd_of_differences(s)})")
    assert d.order is not None
    return d.order


def order_certificate(s: EPS, allow_fewer: bool = False) -> OrderCertificate:
    d = decide_basis(s, allow_fewer)
    if not d.is_basis or d.certificate is None:
        raise NotABasisError("not an additive basis")
    return d.certificate


_INF = np.int64(2 ** 62)


def _generator_values(s: EPS, allow_fewer: bool) -> dict[tuple[int, bool], int]:
    """Least value per (residue, tail-flag) generator.  Keeping only the
    minimum is lossless for min-plus purposes: a larger summand in the same
    class with the same flag can always be swapped down."""
    m = s.modulus
    gens: dict[tuple[int, bool], int] = {}
    for r in s.residues:
        gens[(r, True)] = s._class_start(r)
    for f in s.exceptional:
        key = (f % m, False)
        gens[key] = min(gens.get(key, f), f)
    if allow_fewer:
        key = (0, False)
        gens[key] = min(gens.get(key, 0), 0)
    return gens


def _certificate(s: EPS, h: int, allow_fewer: bool) -> OrderCertificate:
    """Min-plus DP over h steps for the least flagged h-sum per class.
    Values stay below h * max(generator), far from the int64 sentinel."""
    m = s.modulus
    gens = _generator_values(s, allow_fewer)
    du = np.full(m, _INF, dtype=np.int64)
    dv = np.full(m, _INF, dtype=np.int64)
    for (g, flagged), val in gens.items():
        tgt = dv if flagged else du
        tgt[g] = min(tgt[g], val)
    for _ in range(h - 1):
        nu = np.full(m, _INF, dtype=np.int64)
        nv = np.full(m, _INF, dtype=np.int64)
        for (g, flagged), val in gens.items():
            su = np.where(du < _INF, du + val, _INF)
            sv = np.where(dv < _INF, dv + val, _INF)
            if flagged:
                np.minimum(nv, np.roll(su, g), out=nv)
                np.minimum(nv, np.roll(sv, g), out=nv)
            else:
                np.minimum(nu, np.roll(su, g), out=nu)
                np.minimum(nv, np.roll(sv, g), out=nv)
        du, dv = nu, nv
    if bool(np.any(dv >= _INF)):
        raise NotABasisError(f"no flagged {h}-fold sum in some residue class")
    minima = tuple(int(x) for x in dv)
    return OrderCertificate(h, m, minima, max(minima))


class ExceptionalSums:
    """Values of h-fold sums drawn purely from the exceptional part: a small
    finite table, stored as a 0/1 array over [0, limit]."""

    def __init__(self, s: EPS, h: int, allow_fewer: bool = False) -> None:
        pool = list(s.exceptional)
        if allow_fewer:
            pool.append(0)
        self.limit = h * max(pool) if pool else -1
        if not pool:
            self.table = np.zeros(0, dtype=np.uint8)
            return
        bits = 1
        for _ in range(h):
            nxt = 0
            for p in pool:
                nxt |= bits << p
            bits = nxt
        raw = bits.to_bytes((self.limit >> 3) + 1, "little")
        self.table = np.unpackbits(np.frombuffer(raw, dtype=np.uint8),
                                   bitorder="little")

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and bool(self.table[n])

    def mask_members(self, values: np.ndarray) -> np.ndarray:
        """Boolean mask of which entries of `values` are table members."""
        if self.limit < 0:
            return np.zeros(values.shape, dtype=bool)
        in_range = (values >= 0) & (values <= self.limit)
        idx = np.where(in_range, values, 0)
        return in_range & (self.table[idx] == 1)


def membership_from_certificate(cert: OrderCertificate, exc: ExceptionalSums,
                                n: int) -> bool:
    """n in hA, decided structurally: the flagged h-sums in class c are
    exactly {v_c + k m : k >= 0}, and everything else is purely exceptional."""
    return n >= cert.residue_minima[n % cert.modulus] or n in exc


def effective_bound(s: EPS, h: int, allow_fewer: bool = False) -> int:
    """Least N with hA containing every integer >= N (exactly-h sums).

    The largest integer missing from hA is found per residue class: walk down
    from v_c - m in steps of m while the values are purely-exceptional sums.
    Cross-checked against the dense table in the test suite.
    """
    if h < order(s, allow_fewer):
        raise ValueError(f"h={h} is below the order")
    cert = _certificate(s, h, allow_fewer)
    exc = ExceptionalSums(s, h, allow_fewer)
    m = cert.modulus
    miss = np.asarray(cert.residue_minima, dtype=np.int64) - m
    while True:
        hit = (miss >= 0) & exc.mask_members(miss)
        if not hit.any():
            break
        miss[hit] -= m
    return max(int(miss.max()) + 1, 0)


def sumset_membership_table(s: EPS, h: int, bound: int) -> list[bool]:
    """Dense table of hA over [0, bound] via direct dynamic programming on
    the enumerated elements; deliberately independent of the certificate
    arithmetic so the two routes can be compared."""
    if h < 1:
        raise ValueError("h must be >= 1")
    elements = s.enumerate_upto(bound)
    mask = (1 << (bound + 1)) - 1
    layer = 0
    for e in elements:
        layer |= 1 << e
    acc = layer
    for _ in range(h - 1):
        nxt = 0
        for e in elements:
            nxt |= acc << e
        acc = nxt & mask
    return [bool(acc >> n & 1) for n in range(bound + 1)]

"""Prime tables, the two witness families built from primorials, and the
analytic side: the coefficient c_n = n sqrt(log h_n / h_n), its maximum over
the verified range, the Massias-Robin style inequality checks, and the
threshold function attached to the best constant.

Numeric policy: integer quantities (primes, prefix sums, h values) are exact;
every inequality verdict on them is certified by comparing exact integers
against directed-rounding enclosures (gmpy2), with float64 only as a
prefilter or for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import gmpy2
import numpy as np

from .eps import EPS


# ---------------------------------------------------------------------------
# prime table


def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def _upper_bound_for_count(n: int) -> int:
    # p_n < n (log n + log log n) for n >= 6 (Rosser), small cases padded
    if n < 6:
        return 15
    x = float(n)
    return int(x * (math.log(x) + math.log(math.log(x)))) + 10


class PrimeTable:
    """Growable sieve with prefix sums.  p(1) = 2; capacity bounds how many
    primes may ever be requested through this table."""

    def __init__(self, capacity: int = 2_000_000):
        self.capacity = capacity
        self._primes = _sieve(1 << 16)
        self._sums = np.concatenate(([0], np.cumsum(self._primes)))

    @property
    def limit(self) -> int:
        return int(self._primes[-1])

    def _grow_to_limit(self, limit: int) -> None:
        if limit > self.limit:
            self._primes = _sieve(limit)
            self._sums = np.concatenate(([0], np.cumsum(self._primes)))

    def ensure_count(self, n: int) -> None:
        if n > self.capacity:
            raise ValueError(
                f"requested prime index {n} exceeds table capacity {self.capacity}")
        while len(self._primes) < n:
            self._grow_to_limit(max(_upper_bound_for_count(n), 2 * self.limit))

    def nth(self, n: int) -> int:
        if n < 1:
            raise ValueError("prime indices start at 1")
        self.ensure_count(n)
        return int(self._primes[n - 1])

    def up_to(self, x: int) -> list[int]:
        if x > _upper_bound_for_count(self.capacity):
            raise ValueError(f"sieve bound {x} exceeds table capacity")
        self._grow_to_limit(max(x, 2))
        return [int(p) for p in self._primes[: int(np.searchsorted(self._primes, x, side="right"))]]

    def prefix_sum(self, n: int) -> int:
        self.ensure_count(n)
        return int(self._sums[n])

    def prefix_sums(self, n: int) -> np.ndarray:
        """sums[k] = p_1 + ... + p_k for k = 0..n."""
        self.ensure_count(n)
        return self._sums[: n + 1]


_TABLE = PrimeTable()


def nth_prime(n: int) -> int:
    return _TABLE.nth(n)


def primes_up_to(x: int) -> list[int]:
    return _TABLE.up_to(x)


def prime_sum(n: int) -> int:
    """p_1 + ... + p_n, exact."""
    return _TABLE.prefix_sum(n)


# ---------------------------------------------------------------------------
# witness families


def family_An(n: int, modulus_cap: int = 10**8) -> EPS:
    """q N u {q / p_i : i <= n} with q the product of the first n primes.

    Each hat element q/p_i is essential with divisor p_i; the family attains
    order p_1 + ... + p_n - n + 1.  n = 1 uses the empty-hat convention,
    giving 2N u {1}.
    """
    if n < 1:
        raise ValueError("family index must be >= 1")
    ps = [nth_prime(i) for i in range(1, n + 1)]
    q = math.prod(ps)
    if q > modulus_cap:
        raise ValueError(f"family modulus {q} exceeds cap {modulus_cap}")
    return EPS(q, frozenset([0]), 0, tuple(q // p for p in ps))


def family_Xn(n: int, modulus_cap: int = 10**6) -> EPS:
    """q N u {1, ..., q - 1} with q the product of the first n primes: an
    order-2 basis carrying exactly n essential subsets.  The exceptional
    block is materialized, hence the tighter default cap."""
    if n < 1:
        raise ValueError("family index must be >= 1")
    q = math.prod(nth_prime(i) for i in range(1, n + 1))
    if q > modulus_cap:
        raise ValueError(f"family modulus {q} exceeds cap {modulus_cap}")
    return EPS(q, frozenset([0]), 0, tuple(range(1, q)))


def family_An_order(n: int) -> int:
    """Order of family_An(n), in closed form: p_1 + ... + p_n - n + 1."""
    if n < 1:
        raise ValueError("family index must be >= 1")
    return prime_sum(n) - n + 1


# ---------------------------------------------------------------------------
# the coefficient and its maximum


def c_coefficient(n: int) -> float:
    """n * sqrt(log h / h) evaluated at h = family_An_order(n)."""
    if n < 2:
        raise ValueError("coefficient defined for n >= 2")
    h = family_An_order(n)
    return n * math.sqrt(math.log(h) / h)


def best_constant(precision_bits: int = 96) -> float:
    """The maximum of c_coefficient over the verified range, attained at
    n = 30 where h = 1564: the value 30 sqrt(log 1564 / 1564), about
    2.0572841285.  Computed in extended precision, returned as float."""
    ctx = gmpy2.context(precision=max(precision_bits, 64))
    h = gmpy2.mpz(family_An_order(30))
    return float(ctx.mul(gmpy2.mpfr(30), ctx.sqrt(ctx.div(ctx.log(h), h))))


@dataclass(frozen=True)
class SweepRow:
    n: int
    h: int
    c: float

    def render(self) -> str:
        return f"{self.n}\t{self.h}\t{self.c:.12g}"


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Verdict of the scan c_n <= c_30 over 2 <= n <= n_max.

    equalities lists the n whose coefficient ties c_30 exactly (expected:
    (30,) once the range reaches it), violations the n exceeding it
    (expected: none), flagged the n whose cross-multiplied margin falls
    inside the tie band without being an exact tie (expected: none).
    """
    n_max: int
    argmax_n: int
    equalities: tuple[int, ...]
    violations: tuple[int, ...]
    flagged: tuple[int, ...]
    checked: int
    _h: np.ndarray
    _c: np.ndarray

    @property
    def holds(self) -> bool:
        expected = (30,) if self.n_max >= 30 else ()
        return not self.violations and self.equalities == expected

    def row(self, n: int) -> SweepRow:
        if not 2 <= n <= self.n_max:
            raise ValueError(f"row index outside swept range: {n}")
        return SweepRow(n, int(self._h[n - 2]), float(self._c[n - 2]))

    def rows(self) -> Iterator[SweepRow]:
        for n in range(2, self.n_max + 1):
            yield self.row(n)


def _certify_margin(lhs_int: int, rhs_int: int, lhs_log_of: int,
                    rhs_log_of: int, precision: int) -> int:
    """Sign of lhs_int*log(lhs_log_of) - rhs_int*log(rhs_log_of), certified
    by directed rounding; 0 means the enclosure straddles zero."""
    down = gmpy2.context(precision=precision, round=gmpy2.RoundDown)
    up = gmpy2.context(precision=precision, round=gmpy2.RoundUp)
    lhs_lo = down.mul(gmpy2.mpz(lhs_int), down.log(gmpy2.mpz(lhs_log_of)))
    rhs_hi = up.mul(gmpy2.mpz(rhs_int), up.log(gmpy2.mpz(rhs_log_of)))
    if lhs_lo > rhs_hi:
        return 1
    lhs_hi = up.mul(gmpy2.mpz(lhs_int), up.log(gmpy2.mpz(lhs_log_of)))
    rhs_lo = down.mul(gmpy2.mpz(rhs_int), down.log(gmpy2.mpz(rhs_log_of)))
    if rhs_lo > lhs_hi:
        return -1
    return 0


def coefficient_sweep(n_max: int = 127042, tie_band: float = 1e-12,
                      precision_bits: int = 96) -> SweepResult:
    """Check c_n <= c_30 for all 2 <= n <= n_max.

    The comparison c_n <= c_30 is taken in the cross-multiplied form
    900 * h_n * log(h_30) >= h_30 * n^2 * log(h_n), which pits exact
    integer weights against logarithms and avoids cancellation.  A float64
    pass decides rows whose relative margin clears a conservative guard;
    the rest are certified with directed rounding, doubling the working
    precision until the enclosure resolves or lands inside tie_band.
    """
    if n_max < 2:
        raise ValueError("sweep needs n_max >= 2")
    h30 = family_An_order(30)
    sums = _TABLE.prefix_sums(max(n_max, 30))
    ns = np.arange(2, n_max + 1, dtype=np.int64)
    h = sums[2 : n_max + 1] - ns + 1
    logh = np.log(h.astype(np.float64))
    c = ns * np.sqrt(logh / h)

    lhs = 900.0 * h * math.log(h30)
    rhs = float(h30) * ns.astype(np.float64) ** 2 * logh
    margin = lhs - rhs
    suspicious = np.flatnonzero(np.abs(margin) <= 1e-9 * lhs)
    certified_bad = np.flatnonzero(margin < 0)

    equalities: list[int] = []
    violations: list[int] = []
    flagged: list[int] = []
    for idx in sorted(set(suspicious.tolist()) | set(certified_bad.tolist())):
        n = int(ns[idx])
        hn = int(h[idx])
        if hn == h30 and n * n == 900:
            equalities.append(n)
            continue
        prec, sign = precision_bits, 0
        while sign == 0 and prec <= 4096:
            sign = _certify_margin(900 * hn, h30 * n * n, h30, hn, prec)
            prec *= 2
        if sign < 0:
            violations.append(n)
        elif sign == 0 or abs(float(margin[idx])) <= tie_band * float(lhs[idx]):
            flagged.append(n)

    argmax = int(ns[int(np.argmax(c))])
    return SweepResult(n_max, argmax, tuple(equalities), tuple(violations),
                       tuple(flagged), len(ns), h, c)


# ---------------------------------------------------------------------------
# Massias-Robin inequality checks


def _windows(values: list[int]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for v in values:
        if out and v == out[-1][1] + 1:
            out[-1] = (out[-1][0], v)
        else:
            out.append((v, v))
    return tuple(out)


@dataclass(frozen=True)
class MRReport:
    """Certified verdicts for the two prime-sum lower bounds on [n_lo, n_hi]:

        (1)  2 (p_1 + ... + p_n) >= n^2 (log n + log log n - 1.5034)
        (2)  2 (p_1 + ... + p_n) >= n^2 log n

    Violations are reported as inclusive windows of consecutive n.
    """
    n_lo: int
    n_hi: int
    first_holds: bool
    second_holds: bool
    first_violations: tuple[tuple[int, int], ...]
    second_violations: tuple[tuple[int, int], ...]
    checked: int

    @property
    def holds(self) -> bool:
        return self.first_holds and self.second_holds


def _mr_row(n: int, lhs: int, prec: int) -> tuple[int, int]:
    """Certified signs of lhs - n^2(log n + loglog n - 1.5034) and of
    lhs - n^2 log n; escalates precision internally until both resolve."""
    nn = gmpy2.mpz(n * n)
    while True:
        down = gmpy2.context(precision=prec, round=gmpy2.RoundDown)
        up = gmpy2.context(precision=prec, round=gmpy2.RoundUp)
        ln_lo, ln_hi = down.log(n), up.log(n)
        lnln_lo, lnln_hi = down.log(ln_lo), up.log(ln_hi)
        c = gmpy2.mpq(15034, 10000)

        rhs1_hi = up.mul(nn, up.sub(up.add(ln_hi, lnln_hi), c))
        rhs1_lo = down.mul(nn, down.sub(down.add(ln_lo, lnln_lo), c))
        rhs2_hi = up.mul(nn, ln_hi)
        rhs2_lo = down.mul(nn, ln_lo)

        s1 = 1 if lhs >= rhs1_hi else (-1 if lhs < rhs1_lo else 0)
        s2 = 1 if lhs >= rhs2_hi else (-1 if lhs < rhs2_lo else 0)
        if s1 != 0 and s2 != 0:
            return s1, s2
        if prec >= 4096:
            raise RuntimeError(f"inequality margin unresolved at n={n}")
        prec *= 2


def verify_mr(n_lo: int, n_hi: int, precision_bits: int = 80) -> MRReport:
    """Check both inequalities for every n in [n_lo, n_hi], exact integer
    left sides against directed-rounding enclosures of the right sides."""
    if not 2 <= n_lo <= n_hi:
        raise ValueError("need 2 <= n_lo <= n_hi")
    sums = _TABLE.prefix_sums(n_hi)
    bad1: list[int] = []
    bad2: list[int] = []
    for n in range(n_lo, n_hi + 1):
        s1, s2 = _mr_row(n, 2 * int(sums[n]), precision_bits)
        if s1 < 0:
            bad1.append(n)
        if s2 < 0:
            bad2.append(n)
    return MRReport(n_lo, n_hi, not bad1, not bad2,
                    _windows(bad1), _windows(bad2), n_hi - n_lo + 1)


# ---------------------------------------------------------------------------
# threshold attached to the best constant


def alpha_threshold(alpha: float) -> float:
    """exp(-(7/2) a^2 log(a^2 - 4) / (a^2 - 4)) for a > 2; the h beyond
    which the coefficient bound at level alpha applies.  Blows up to
    infinity as alpha drops to 2."""
    if alpha <= 2:
        raise ValueError("threshold defined for alpha > 2")
    u = alpha * alpha - 4
    try:
        return math.exp(-3.5 * alpha * alpha * math.log(u) / u)
    except OverflowError:
        return math.inf

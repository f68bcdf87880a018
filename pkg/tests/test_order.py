from __future__ import annotations

import random
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addbasis import (EPS, NATURALS, ExceptionalSums, NotABasisError,
                      decide_basis, effective_bound, gcd_of_differences,
                      is_basis, membership_from_certificate, order,
                      order_certificate, parse_set_expr,
                      sumset_membership_table)


def brute_sumset_table(s, h, bound):
    """h-fold sumset membership by explicit enumeration."""
    elems = s.enumerate_upto(bound)
    reachable = {0}
    for _ in range(h):
        reachable = {a + x for a in reachable for x in elems if a + x <= bound}
    return [n in reachable for n in range(bound + 1)]


class TestBasisDecision:
    def test_naturals(self):
        d = decide_basis(NATURALS)
        assert d.is_basis and d.order == 1 and d.cycle is None

    def test_even_numbers_rejected_with_cycle(self):
        d = decide_basis(EPS(2, frozenset({0}), 0, ()))
        assert not d.is_basis
        assert (d.cycle.first_seen, d.cycle.repeats_at) == (1, 2)

    def test_gcd_two_with_exceptional_elements(self):
        d = decide_basis(parse_set_expr("6N U {2,4}"))
        assert not d.is_basis
        assert (d.cycle.first_seen, d.cycle.repeats_at) == (2, 3)

    def test_finite_set_is_not_a_basis(self):
        assert not is_basis(parse_set_expr("{0,1,2,3}"))

    def test_order_raises_with_gcd_in_message(self):
        with pytest.raises(NotABasisError) as exc:
            order(EPS(2, frozenset({0}), 0, ()))
        assert "gcd" in str(exc.value)

    @given(m=st.integers(1, 60),
           res=st.sets(st.integers(0, 59), min_size=1, max_size=5),
           f=st.sets(st.integers(0, 40), max_size=5))
    @settings(max_examples=150, deadline=None)
    def test_criterion_matches_engine(self, m, res, f):
        res = {r for r in res if r < m} or {0}
        s = EPS(m, frozenset(res), 0, tuple(f))
        criterion = (not s.is_finite) and gcd_of_differences(s) == 1
        assert is_basis(s) == criterion


class TestOrder:
    @pytest.mark.parametrize("expr,h", [
        ("1N", 1),
        ("2N U {1}", 2),
        ("6N U {2,3}", 4),
        ("30N U {6,10,15}", 8),
        ("6N U [1..5]", 2),
    ])
    def test_known_orders(self, expr, h):
        assert order(parse_set_expr(expr)) == h

    def test_at_most_order_never_exceeds_exact(self, random_bases):
        for s in random_bases[:40]:
            assert order(s, allow_fewer=True) <= order(s)


class TestCertificate:
    def test_a2_certificate(self, a2):
        cert = order_certificate(a2)
        assert cert.order == 4
        assert cert.modulus == 6
        assert cert.residue_minima == (0, 7, 2, 3, 4, 5)
        assert cert.coverage_from == 7

    def test_minima_start_stable_class_coverage(self, random_bases):
        # below v_c the class may still see transient all-exceptional hits,
        # so only soundness is checked: from v_c on the class never misses
        for s in random_bases[:25]:
            cert = order_certificate(s)
            m = cert.modulus
            bound = cert.coverage_from + 3 * m + 1
            table = sumset_membership_table(s, cert.order, bound)
            for c, v in enumerate(cert.residue_minima):
                assert v % m == c
                assert all(table[n] for n in range(v, bound + 1, m))

    def test_coverage_from_is_max_of_minima(self, random_bases):
        for s in random_bases[:25]:
            cert = order_certificate(s)
            assert cert.coverage_from == max(cert.residue_minima)

    def test_certificate_membership_matches_table(self, a2):
        cert = order_certificate(a2)
        exc = ExceptionalSums(a2, cert.order)
        table = sumset_membership_table(a2, cert.order, 40)
        for n in range(41):
            assert membership_from_certificate(cert, exc, n) == table[n]

    def test_certificate_membership_matches_table_randomly(self, random_bases):
        for s in random_bases[:15]:
            cert = order_certificate(s)
            exc = ExceptionalSums(s, cert.order)
            bound = cert.coverage_from + 2 * cert.modulus + 1
            table = sumset_membership_table(s, cert.order, bound)
            for n in range(bound + 1):
                assert membership_from_certificate(cert, exc, n) == table[n]


class TestSumsetTable:
    @pytest.mark.parametrize("expr,h,bound,want", [
        ("1N", 2, 5, {0, 1, 2, 3, 4, 5}),
        ("2N", 2, 5, {0, 2, 4}),
        ("6N U {2,3}", 2, 12, {0, 2, 3, 4, 5, 6, 8, 9, 12}),
    ])
    def test_examples(self, expr, h, bound, want):
        table = sumset_membership_table(parse_set_expr(expr), h, bound)
        assert {n for n, hit in enumerate(table) if hit} == want

    @given(m=st.integers(1, 12),
           res=st.sets(st.integers(0, 11), min_size=1, max_size=3),
           f=st.sets(st.integers(0, 15), max_size=3),
           h=st.integers(1, 4))
    @settings(max_examples=80, deadline=None)
    def test_matches_brute_enumeration(self, m, res, f, h):
        res = {r for r in res if r < m} or {0}
        s = EPS(m, frozenset(res), 0, tuple(f))
        bound = 3 * h * m + 20
        assert sumset_membership_table(s, h, bound) == \
            brute_sumset_table(s, h, bound)

    def test_exact_h_fold_sums_without_zero(self):
        # with 0 absent the table counts exactly-h sums, not at-most-h
        s = parse_set_expr("2N U {1}").translate(1)
        members = s.enumerate_upto(30)
        exact = {sum(c) for c in combinations_with_replacement(members, 3)}
        table = sumset_membership_table(s, 3, 30)
        assert {n for n, hit in enumerate(table) if hit} == \
            {n for n in exact if n <= 30}


class TestEffectiveBound:
    @pytest.mark.parametrize("expr,h,want", [
        ("1N", 1, 0),
        ("2N U {1}", 2, 0),
        ("6N U {2,3}", 4, 2),
    ])
    def test_examples(self, expr, h, want):
        assert effective_bound(parse_set_expr(expr), h, ) == want

    def test_matches_last_gap_in_dense_table(self, random_bases):
        for s in random_bases[:25]:
            cert = order_certificate(s)
            h = cert.order
            bound = cert.coverage_from + 2 * cert.modulus + 2
            table = sumset_membership_table(s, h, bound)
            misses = [n for n, hit in enumerate(table) if not hit]
            want = 0 if not misses else misses[-1] + 1
            assert effective_bound(s, h) == want

    def test_extra_summands_never_hurt(self, random_bases):
        for s in random_bases[:20]:
            h = order(s)
            b1 = effective_bound(s, h)
            b2 = effective_bound(s, h + 1)
            assert b2 >= 0
            if 0 in s:
                assert b2 <= b1

    def test_below_order_raises(self, a2):
        with pytest.raises(ValueError):
            effective_bound(a2, order(a2) - 1)


class TestExceptionalSums:
    # the table records sums built from exceptional elements alone; the
    # certificate handles every sum that touches the periodic tail

    def test_table_lists_exactly_h_exceptional_sums(self):
        s = parse_set_expr("4N U {1}")
        h = order(s)
        exc = ExceptionalSums(s, h)
        assert exc.limit == h * max(s.exceptional)
        hits = {n for n in range(exc.limit + 1) if exc.table[n]}
        assert hits == {4}

    def test_table_matches_brute_on_random_instances(self, random_bases):
        for s in random_bases[:15]:
            if not s.exceptional:
                continue
            h = order(s)
            exc = ExceptionalSums(s, h)
            want = {0}
            for _ in range(h):
                want = {a + f for a in want for f in s.exceptional}
            hits = {n for n in range(exc.limit + 1) if exc.table[n]}
            assert hits == want


@given(seed=st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_random_small_order_against_brute(seed):
    rng = random.Random(seed)
    m = rng.randrange(2, 14)
    residues = frozenset(rng.sample(range(m), rng.randrange(1, 3)))
    extras = tuple(rng.sample(range(1, 2 * m), rng.randrange(0, 3)))
    s = EPS(m, residues, 0, extras)
    if not is_basis(s):
        return
    h = order(s)
    horizon = 6 * h * m + 60
    # at h summands every integer from the effective bound on is reachable
    table = brute_sumset_table(s, h, horizon)
    assert all(table[effective_bound(s, h):])
    # one summand fewer still leaves a miss inside the stable window
    if h > 1:
        prev = brute_sumset_table(s, h - 1, horizon)
        assert not all(prev)

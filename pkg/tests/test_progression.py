from __future__ import annotations

import pytest

from addbasis import (EPS, NATURALS, audit_decomposition,
                      audit_reservoir_bound, essential_elements,
                      essential_subsets, gcd_of_differences,
                      has_essential_subset, parse_set_expr,
                      progression_profile)


def distinct_prime_count(n):
    count, d = 0, 2
    while d * d <= n:
        if n % d == 0:
            count += 1
            while n % d == 0:
                n //= d
        d += 1
    return count + (1 if n > 1 else 0)


class TestProfile:
    def test_naturals(self):
        prof = progression_profile(NATURALS)
        assert (prof.difference, prof.offset) == (1, 0)
        assert prof.core == NATURALS
        assert prof.reservoir == () and prof.basis

    def test_x2(self, x2):
        prof = progression_profile(x2)
        assert (prof.difference, prof.offset) == (6, 0)
        assert prof.core == NATURALS
        assert prof.reservoir == (1, 2, 3, 4, 5)
        assert prof.radical_length == 2  # 6 = 2 * 3
        assert prof.total_length == 2

    def test_two_one(self, two_one):
        prof = progression_profile(two_one)
        assert (prof.difference, prof.offset) == (2, 0)
        assert prof.core == NATURALS and prof.reservoir == (1,)

    def test_nonzero_offset(self):
        prof = progression_profile(parse_set_expr("6N+2 U {1}"))
        assert (prof.difference, prof.offset) == (6, 2)
        assert prof.reservoir == (1,)

    def test_non_basis_keeps_sentinel_flag(self):
        prof = progression_profile(EPS(2, frozenset({0}), 0, ()))
        assert prof.difference == 2 and not prof.basis

    def test_finite_set(self):
        prof = progression_profile(parse_set_expr("{3,5}"))
        assert prof.difference == 0 and not prof.basis
        assert prof.reservoir == (3, 5)

    def test_rebuild_roundtrip(self, random_bases):
        for s in random_bases:
            prof = progression_profile(s)
            assert prof.rebuild() == s

    def test_decomposition_structure(self, random_bases):
        for s in random_bases[:40]:
            prof = progression_profile(s)
            a, b = prof.difference, prof.offset
            tail = EPS(s.modulus, s.residues, s.threshold, ())
            assert a == gcd_of_differences(tail)
            assert b == tail.min_element % a
            assert prof.reservoir == tuple(
                x for x in s.exceptional if x % a != b)
            on_class = tuple(x for x in s.exceptional if x % a == b)
            assert prof.core == tail.union(
                EPS(1, frozenset(), 0, on_class)).affine_contract(a, b)
            # the core of a basis has difference 1 and no essential elements
            assert gcd_of_differences(prof.core) == 1
            assert essential_elements(prof.core).q == 1


class TestHasEssentialSubset:
    def test_examples(self, x2):
        assert not has_essential_subset(NATURALS)
        assert has_essential_subset(x2)
        assert has_essential_subset(parse_set_expr("3N U {1,2}"))

    def test_matches_difference_threshold(self, random_bases):
        for s in random_bases:
            prof = progression_profile(s)
            assert has_essential_subset(s) == (prof.difference >= 2)


class TestEssentialSubsets:
    def test_x2(self, x2):
        assert essential_subsets(x2) == [(1, 3, 5), (1, 2, 4, 5)]

    def test_a2_singletons(self, a2):
        assert essential_subsets(a2) == [(2,), (3,)]

    def test_no_subsets_for_naturals(self):
        assert essential_subsets(NATURALS) == []

    def test_non_minimal_candidate_is_rejected(self):
        # the odd-residue part {1,3,9} strictly contains the essential
        # subset {1}, so only the latter may be reported
        assert essential_subsets(parse_set_expr("12N U {1,3,6,9}")) == [(1,)]

    def test_each_subset_kills_and_is_minimal(self, random_bases):
        for s in random_bases[:40]:
            for part in essential_subsets(s):
                assert gcd_of_differences(s.remove(part)) >= 2
                for x in part:
                    restored = [p for p in part if p != x]
                    assert gcd_of_differences(s.remove(restored)) == 1

    def test_singleton_subsets_are_the_essential_elements(self, random_bases):
        for s in random_bases[:40]:
            singles = {p[0] for p in essential_subsets(s) if len(p) == 1}
            assert singles == set(essential_elements(s).elements)

    def test_subsets_live_in_the_reservoir(self, random_bases):
        for s in random_bases[:40]:
            reservoir = set(progression_profile(s).reservoir)
            for part in essential_subsets(s):
                assert set(part) <= reservoir


class TestReservoirAudit:
    def test_x3_is_tight(self):
        rep = audit_reservoir_bound(parse_set_expr("30N U [1..29]"))
        assert rep.within_reservoir and rep.count_bounded
        assert len(rep.parts) == 3 == rep.radical_length
        assert rep.difference == 30

    def test_x2(self, x2):
        rep = audit_reservoir_bound(x2)
        assert len(rep.parts) == 2 and rep.radical_length == 2
        assert rep.within_reservoir and rep.count_bounded

    def test_naturals_trivial(self):
        rep = audit_reservoir_bound(NATURALS)
        assert rep.parts == () and rep.count_bounded

    def test_bound_on_random_bases(self, random_bases):
        for s in random_bases:
            rep = audit_reservoir_bound(s)
            assert rep.within_reservoir and rep.count_bounded
            assert len(rep.parts) <= distinct_prime_count(max(
                rep.difference, 1)) or rep.difference <= 1


class TestDecompositionAudit:
    def test_true_decomposition(self, x2):
        prof = progression_profile(x2)
        rep = audit_decomposition(x2, prof.difference, prof.offset, prof.core)
        assert rep.difference_matches and rep.core_translate_matches
        assert rep.core_is_free and rep.consistent

    def test_coarser_decomposition_fails_consistently(self, two_one):
        # 2N u {1} also reads as 1 * N' + 0 with N' = the set itself; the
        # audit accepts it as a decomposition but every flag goes false
        rep = audit_decomposition(two_one, 1, 0, two_one)
        assert not rep.difference_matches
        assert not rep.core_translate_matches
        assert not rep.core_is_free
        assert rep.consistent

    def test_mismatched_decomposition_rejected(self, x2):
        with pytest.raises(ValueError, match="mismatch"):
            audit_decomposition(x2, 3, 0, NATURALS)

    def test_equivalences_on_random_bases(self, random_bases):
        # the three characterizations agree: the guessed decomposition is
        # the canonical one exactly when its core is essentially free
        for s in random_bases[:40]:
            prof = progression_profile(s)
            rep = audit_decomposition(s, prof.difference, prof.offset,
                                      prof.core)
            assert rep.consistent and rep.core_is_free

import math

import pytest

from quatsurf.census import (
    PrimePredicate,
    algebra_census,
    count_squarefree_over_P,
    mean_value_fit,
    prime_density_report,
    ramification_probability_check,
    wood_stats,
)
from quatsurf.errors import BoundaryPrimeError
from quatsurf.quadfields import QuadraticField, SplitType, fundamental_discriminants, splitting
from quatsurf.quatalg import embeds, fuchsian_admissible, is_isomorphic
from quatsurf.relquad import RelQuadExt


class TestInP:
    def test_examples(self, predicate_n1):
        assert predicate_n1.in_P(41)
        assert not predicate_n1.in_P(13)
        assert not predicate_n1.in_P(3)  # inert in Q(i)

    def test_boundary_rejected(self, predicate_n1):
        assert sorted(predicate_n1.boundary) == [2, 5]
        with pytest.raises(BoundaryPrimeError):
            predicate_n1.in_P(5)
        with pytest.raises(BoundaryPrimeError):
            predicate_n1.in_P(2)

    def test_composite_rejected(self, predicate_n1):
        with pytest.raises(ValueError):
            predicate_n1.in_P(15)

    def test_conjugate_symmetry(self, family_n1):
        # evaluating with either square root of delta gives the same answer
        from quatsurf import arith

        ext = family_n1.extensions[0]
        for p in (13, 17, 29, 37, 41, 53, 61, 73, 89, 97):
            r = arith.mod_sqrt(-4 % p, p)
            answers = set()
            for root in (r, p - r):
                bs = [(ext.x + root) % p, (ext.x - root) % p]
                answers.add(all(arith.kronecker(b, p) == -1 for b in bs))
            assert len(answers) == 1, p

    def test_smallest_member(self, predicate_n1):
        members = [int(m) for m in predicate_n1.members_up_to(100)]
        assert members[0] == 41

    def test_empty_family_is_split_primes(self):
        pred = PrimePredicate(-4)
        k = QuadraticField(-4)
        for p in (3, 5, 7, 11, 13, 17):
            if p in pred.boundary:
                continue
            assert pred.in_P(p) == (splitting(k, p) is SplitType.SPLIT)


class TestDensityReport:
    def test_n0_near_half(self):
        report = prime_density_report(PrimePredicate(-4), 10**5)
        assert abs(report.final_ratio - 0.5) < 0.1

    def test_checkpoints_monotone(self, predicate_n1):
        report = prime_density_report(predicate_n1, 10**4)
        counts = [r.count for r in report.rows]
        assert counts == sorted(counts)
        assert report.rows[-1].checkpoint == 10**4

    def test_n2_family_near_one_thirtysecond(self):
        from quatsurf.fieldforge import construct_fields

        fam = construct_fields(-4, 2)
        report = prime_density_report(PrimePredicate(-4, fam.extensions), 10**6)
        assert 0.02 <= report.final_ratio <= 0.045  # around 1/32 = 0.03125

    def test_small_bound_rejected(self, predicate_n1):
        with pytest.raises(ValueError):
            prime_density_report(predicate_n1, 50)


class TestSquarefreeCount:
    def test_examples(self, predicate_n1):
        assert count_squarefree_over_P(predicate_n1, 40) == 0
        assert count_squarefree_over_P(predicate_n1, 41) == 1
        assert count_squarefree_over_P(predicate_n1, 1) == 0

    def test_dual_mode_agreement(self, predicate_n1):
        # include bounds that do not align with sieve segments or checkpoints
        for bound in (37, 1234, 10**3, 10**4, 99_999, 10**5):
            sieve = count_squarefree_over_P(predicate_n1, bound, "sieve")
            enum = count_squarefree_over_P(predicate_n1, bound, "enumerate")
            assert sieve == enum, bound

    def test_dual_mode_agreement_n2(self):
        from quatsurf.fieldforge import construct_fields

        fam = construct_fields(-4, 2)
        pred = PrimePredicate(-4, fam.extensions)
        for bound in (10**3, 10**4):
            assert count_squarefree_over_P(pred, bound, "sieve") == count_squarefree_over_P(pred, bound, "enumerate")

    def test_bad_mode(self, predicate_n1):
        with pytest.raises(ValueError):
            count_squarefree_over_P(predicate_n1, 100, "fancy")


class TestMeanValueFit:
    def test_degenerate_tau_one(self):
        counts = [(10**2, 10**2), (10**3, 10**3), (10**4, 10**4)]
        fit = mean_value_fit(counts, 1.0)
        assert fit.constant == pytest.approx(1.0)
        assert all(r.local_constant == pytest.approx(1.0) for r in fit.rows)

    def test_preconditions(self):
        good = [(100, 5), (1000, 30), (10000, 200)]
        with pytest.raises(ValueError):
            mean_value_fit(good, 1.5)
        with pytest.raises(ValueError):
            mean_value_fit(good, 0.0)
        with pytest.raises(ValueError):
            mean_value_fit(good[:2], 0.5)
        with pytest.raises(ValueError):
            mean_value_fit([(100, 5), (200, 8), (400, 12)], 0.5)

    def test_stabilizing_constant(self, predicate_n1):
        counts = [(10**k, count_squarefree_over_P(predicate_n1, 10**k, "enumerate")) for k in (3, 4, 5)]
        fit = mean_value_fit(counts, 1 / 8)
        assert fit.constant > 0
        assert fit.last_decade_drift < 0.10


class TestAlgebraCensus:
    def test_threshold_examples(self, family_n1):
        census = algebra_census(-4, family_n1.extensions, 1682)
        assert census.count == 1
        assert census.d_values == [41]
        assert census.algebras[0].disc_f_abs == 41**2
        assert algebra_census(-4, family_n1.extensions, 1600).count == 0

    def test_every_algebra_verified(self, family_n1, predicate_n1):
        census = algebra_census(-4, family_n1.extensions, 10**6, pred=predicate_n1)
        assert census.count == count_squarefree_over_P(predicate_n1, math.isqrt(10**6 - 1), "enumerate")
        for alg in census.algebras:
            assert fuchsian_admissible(alg)
            for ext in family_n1.extensions:
                assert embeds(alg, ext)
        # pairwise distinct ramification sets
        for i, a in enumerate(census.algebras):
            for b in census.algebras[i + 1 :]:
                assert not is_isomorphic(a, b)

    def test_predicate_mismatch_rejected(self, family_n1):
        with pytest.raises(ValueError):
            algebra_census(-4, [], 100, pred=PrimePredicate(-4, family_n1.extensions))


class TestWoodStats:
    def test_seven_split_three_inert(self):
        stats = wood_stats(7, [3], 10**5)
        assert stats.predicted == pytest.approx((6 / math.pi**2) * 10**5 * 0.5 * (7 / 16) * (3 / 8))
        assert abs(stats.ratio - 1) < 0.05

    def test_no_constraints(self):
        stats = wood_stats(None, [], 10**5)
        assert stats.count == sum(1 for _ in fundamental_discriminants(10**5, "imaginary"))
        assert stats.predicted == pytest.approx((3 / math.pi**2) * 10**5)

    def test_contradictory(self):
        stats = wood_stats(3, [3], 10**4)
        assert stats == (0, 0.0, None)

    def test_matches_scalar_enumeration(self):
        def oracle(q_split, q_inert, x):
            count = 0
            for d in fundamental_discriminants(x, "imaginary"):
                k = QuadraticField(d)
                if q_split is not None and splitting(k, q_split) is not SplitType.SPLIT:
                    continue
                if any(splitting(k, q) is not SplitType.INERT for q in q_inert):
                    continue
                count += 1
            return count

        for q_split, q_inert in ((7, [3]), (2, [5]), (None, [2, 3]), (13, []), (None, [7, 11, 13])):
            assert wood_stats(q_split, q_inert, 10**4).count == oracle(q_split, q_inert, 10**4)

    def test_independence_multiplicativity(self):
        # predicted(A u B) * base = predicted(A) * predicted(B) for disjoint sets
        x = 10**5
        base = (6 / math.pi**2) * x * 0.5
        pa = wood_stats(None, [3, 7], x).predicted
        pb = wood_stats(None, [11], x).predicted
        pab = wood_stats(None, [3, 7, 11], x).predicted
        assert pab * base == pytest.approx(pa * pb)

    def test_duplicate_inert_rejected(self):
        with pytest.raises(ValueError):
            wood_stats(None, [3, 3], 10**4)


class TestRamificationProbability:
    def test_small_primes(self):
        for ell, x, tol in ((2, 10**5, 0.02), (3, 10**5, 0.02), (5, 10**5, 0.05)):
            check = ramification_probability_check(ell, x)
            assert check.target == pytest.approx(1 / (ell + 1))
            assert abs(check.ratio / check.target - 1) < tol, ell

    def test_counts_both_signs(self):
        check = ramification_probability_check(2, 10**4)
        brute = sum(1 for d in fundamental_discriminants(10**4, "both") if d % 2 == 0)
        total = sum(1 for _ in fundamental_discriminants(10**4, "both"))
        assert (check.count, check.total) == (brute, total)

import pytest

from quatsurf import arith
from quatsurf.errors import SearchCapExceeded
from quatsurf.fieldforge import construct_fields, find_xi, hensel_sqrt


class TestHenselSqrt:
    def test_examples(self):
        assert hensel_sqrt(1, 5) == 1
        assert hensel_sqrt(4, 7) == 2
        assert hensel_sqrt(2, 7) == 10

    def test_minimality_by_exhaustion(self):
        for a, p in ((2, 7), (3, 11), (5, 19), (10, 13)):
            r = hensel_sqrt(a, p)
            roots = [t for t in range(p * p) if (t * t - a) % (p * p) == 0]
            assert r == min(roots)

    def test_errors(self):
        with pytest.raises(ValueError, match="not a residue"):
            hensel_sqrt(3, 5)
        with pytest.raises(ValueError, match="divides"):
            hensel_sqrt(14, 7)
        with pytest.raises(ValueError):
            hensel_sqrt(1, 2)


class TestFindXi:
    def test_examples(self):
        assert find_xi(-4, [5, 13], 1).x == 1
        assert find_xi(-4, [5, 13], 2).x == 3
        assert find_xi(-4, [5], 1).x == 1

    def test_valuation_pinned_to_one(self):
        for delta, primes in ((-4, [5, 13, 17]), (-3, [7, 13, 19]), (-8, [3, 11, 17])):
            for i in range(1, len(primes) + 1):
                x = find_xi(delta, primes, i).x
                assert arith.valuation(x * x - delta, primes[i - 1]) == 1
                for j, q in enumerate(primes, start=1):
                    if j != i:
                        assert (x * x - delta) % q != 0

    def test_cap_exceeded(self):
        with pytest.raises(SearchCapExceeded):
            find_xi(-4, [5, 13], 1, search_cap=-1)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            find_xi(-4, [5], 2)


class TestConstructFields:
    def test_delta_minus_four_n_two(self):
        fam = construct_fields(-4, 2)
        assert [r.x for r in fam.rows] == [1, 3]
        assert [r.disc_bound for r in fam.rows] == [20480, 53248]
        assert fam.certified
        assert fam.split_primes == [5, 13]

    def test_n_one_prefix(self):
        fam = construct_fields(-4, 1)
        assert [r.x for r in fam.rows] == [1]

    def test_delta_minus_three(self):
        fam = construct_fields(-3, 1)
        assert fam.split_primes == [7]
        assert fam.rows[0].x == 2  # hensel_sqrt(4, 7) = 2, no side conditions

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            construct_fields(-4, 0)
        with pytest.raises(ValueError):
            construct_fields(5, 1)

    def test_certificates_over_small_range(self):
        for delta in (-3, -4, -7, -8, -11):
            for n in (1, 2, 3, 4):
                fam = construct_fields(delta, n)
                assert fam.certified, (delta, n)
                assert not any(fam.galois_flags)
                for row in fam.rows:
                    assert arith.valuation(row.x**2 - delta, row.prime) == 1

    def test_growth_out_of_sample(self):
        # fit the n^9 envelope on n <= 4, check it holds for n = 5..8
        for delta in (-3, -4, -7, -8, -11):
            bounds = {n: construct_fields(delta, n).max_disc_bound for n in range(1, 9)}
            envelope = max(bounds[n] / n**9 for n in (1, 2, 3, 4))
            for n in (5, 6, 7, 8):
                assert bounds[n] <= envelope * n**9, (delta, n)

import math
import random

import pytest
import sympy

from quatsurf import arith


class TestPrimality:
    def test_against_sympy_range(self):
        for n in range(-5, 2000):
            assert arith.is_prime(n) == sympy.isprime(n), n

    def test_large_values(self):
        assert arith.is_prime(2**61 - 1)
        assert not arith.is_prime(2**67 - 1)
        assert arith.is_prime(10**18 + 9)

    def test_sieve_matches_walk(self):
        from itertools import islice

        sieve = [int(p) for p in arith.primes_up_to(500)]
        walk = list(islice(arith.iter_primes(), len(sieve)))
        assert sieve == walk

    def test_iter_primes_start(self):
        gen = arith.iter_primes(14)
        assert [next(gen) for _ in range(3)] == [17, 19, 23]


class TestSquarefree:
    def test_table_matches_scalar(self):
        table = arith.squarefree_table(500)
        for n in range(1, 501):
            assert bool(table[n]) == arith.is_squarefree(n), n

    def test_scalar_edges(self):
        assert not arith.is_squarefree(0)
        assert arith.is_squarefree(1)
        assert arith.is_squarefree(-30)
        assert not arith.is_squarefree(-12)


class TestKronecker:
    def test_euler_criterion_odd_primes(self):
        for p in (int(q) for q in arith.primes_up_to(200)):
            if p == 2:
                continue
            for a in range(-2 * p, 2 * p + 1):
                euler = pow(a % p, (p - 1) // 2, p)
                want = 0 if a % p == 0 else (1 if euler == 1 else -1)
                assert arith.kronecker(a, p) == want, (a, p)

    def test_two_convention(self):
        for a in range(-20, 21):
            if a % 2 == 0:
                want = 0
            elif a % 8 in (1, 7):
                want = 1
            else:
                want = -1
            assert arith.kronecker(a, 2) == want, a

    def test_multiplicative_in_modulus(self):
        rng = random.Random(5)
        for _ in range(300):
            a = rng.randint(-50, 50)
            m, n = rng.randint(1, 60), rng.randint(1, 60)
            assert arith.kronecker(a, m * n) == arith.kronecker(a, m) * arith.kronecker(a, n)

    def test_zero_modulus(self):
        assert arith.kronecker(1, 0) == 1
        assert arith.kronecker(-1, 0) == 1
        assert arith.kronecker(5, 0) == 0


class TestModSqrt:
    def test_all_small_primes(self):
        # exercises the p % 4 == 3, p % 8 == 5, and Tonelli-Shanks branches
        for p in (int(q) for q in arith.primes_up_to(300)):
            squares = {(t * t) % p for t in range(p)}
            for a in range(p):
                if a in squares:
                    r = arith.mod_sqrt(a, p)
                    assert r * r % p == a, (a, p)
                else:
                    with pytest.raises(ValueError):
                        arith.mod_sqrt(a, p)

    def test_one_mod_eight_path(self):
        for p in (17, 41, 73, 89, 97, 113, 137, 193):
            for a in (2, 4, 8, 16):
                if pow(a, (p - 1) // 2, p) == 1:
                    r = arith.mod_sqrt(a, p)
                    assert r * r % p == a


class TestFactorizationHelpers:
    def test_factorize_round_trip(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(2, 10**7)
            f = arith.factorize(n)
            assert math.prod(p**e for p, e in f.items()) == n
            assert all(arith.is_prime(p) for p in f)

    def test_valuation(self):
        assert arith.valuation(2000, 2) == 4
        assert arith.valuation(2000, 5) == 3
        assert arith.valuation(7, 2) == 0
        with pytest.raises(ValueError):
            arith.valuation(0, 3)

    def test_is_square(self):
        squares = {n * n for n in range(100)}
        for n in range(-10, 5000):
            assert arith.is_square(n) == (n in squares)

"""Brute-force oracles, independent of the package's own arithmetic paths.

Splitting oracles factor minimal polynomials mod p by exhaustive root
enumeration; the Pell oracle iterates b directly; the recovery oracle redoes
the subfield intersection with enumeration-based splitting throughout.
"""

import math

import numpy as np

from quatsurf.quadfields import SplitType


def quadratic_split_oracle(delta: int, p: int) -> SplitType:
    """Factorization type of p from root counts of the integral generator's
    minimal polynomial mod p: 2 roots split, 0 inert, 1 (double) ramified."""
    if delta % 4 == 1:
        c1, c0 = -1, (1 - delta) // 4  # generator (1 + sqrt(delta))/2
    else:
        c1, c0 = 0, -delta // 4  # generator sqrt(delta/4)
    t = np.arange(p, dtype=np.int64)
    roots = int((((t * t + c1 * t + c0) % p) == 0).sum())
    return {2: SplitType.SPLIT, 0: SplitType.INERT, 1: SplitType.RAMIFIED}[roots]


def is_square_mod_oracle(b: int, p: int) -> bool:
    b %= p
    return any((t * t) % p == b for t in range(p))


def prime_in_L_oracle(ext, prime) -> SplitType | None:
    """Per-prime splitting in L by residue enumeration; None when the
    symbolic criterion legitimately refuses (even positive valuation)."""
    p = prime.p
    b = (ext.x - prime.root) % p if ext.conjugate else (ext.x + prime.root) % p
    if b == 0:
        n, v = ext.norm_beta, 0
        while n % p == 0:
            n //= p
            v += 1
        return SplitType.RAMIFIED if v % 2 == 1 else None
    return SplitType.SPLIT if is_square_mod_oracle(b, p) else SplitType.INERT


def quartic_root_count(ext, p: int) -> int:
    """Distinct roots of the quartic minimal polynomial mod p, by enumeration."""
    t = np.arange(p, dtype=np.int64)
    vals = (t**4 - 2 * ext.x * t**2 + ext.norm_beta) % p
    return int((vals == 0).sum())


def pell_unit_oracle(d: int, b_limit: int = 10**6):
    """Smallest (a, b, norm) with a^2 - d*b^2 = +-4, b >= 1, by direct iteration."""
    for b in range(1, b_limit + 1):
        for n in (-1, 1):
            a2 = d * b * b + 4 * n
            if a2 > 0:
                a = math.isqrt(a2)
                if a * a == a2:
                    return a, b, n
    raise RuntimeError(f"no unit below b = {b_limit} for d = {d}")


def fundamental_discs_oracle(x: int, sign: str) -> list[int]:
    """Fundamental discriminants by per-integer definition checking."""

    def fundamental(d):
        def squarefree(m):
            m = abs(m)
            return m != 0 and all(m % (q * q) != 0 for q in range(2, math.isqrt(m) + 1))

        if d in (0, 1):
            return False
        if d % 4 == 1:
            return squarefree(d)
        return d % 4 == 0 and (d // 4) % 4 in (2, 3) and squarefree(d // 4)

    out = []
    for a in range(3, x + 1):
        if sign in ("imaginary", "both") and fundamental(-a):
            out.append(-a)
        if sign in ("real", "both") and fundamental(a):
            out.append(a)
    return out


def recover_oracle(delta_k: int, pairing: list[int], d_bound: int, prime_bound: int) -> set[int]:
    """The subfield intersection redone with enumeration-based splitting."""

    def nonsplit(disc, p) -> bool:
        return quadratic_split_oracle(disc, p) is not SplitType.SPLIT

    primes = [p for p in range(2, prime_bound + 1) if all(p % q for q in range(2, p))]
    aux_pool = [q for q in primes if nonsplit(delta_k, q)]
    need_aux = len(pairing) % 2 == 1
    surviving = set(primes)
    admissible = 0
    for disc in fundamental_discs_oracle(d_bound, "both"):
        if not all(nonsplit(disc, p) for p in pairing):
            continue
        if need_aux and not any(nonsplit(disc, q) for q in aux_pool):
            continue
        admissible += 1
        surviving &= {p for p in primes if nonsplit(disc, p)}
    if admissible == 0:
        raise RuntimeError("oracle: no admissible field")
    return surviving


def catalan_oracle(terms: int = 200_000) -> float:
    """Catalan's constant by its alternating series; error below 1/(2*terms+1)^2."""
    return math.fsum((-1) ** k / (2 * k + 1) ** 2 for k in range(terms))

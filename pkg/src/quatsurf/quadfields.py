"""Quadratic fields, fundamental discriminants, and prime splitting.

A quadratic field is presented by its fundamental discriminant only; prime
ideals are presented symbolically as (rational prime, square-root residue)
pairs.  That encoding answers every splitting and norm question the rest of
the package asks without any general ideal arithmetic.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

import numpy as np

from . import arith


class SplitType(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    def __repr__(self):
        return f"SplitType.{self.name}"


def is_fundamental_discriminant(d: int) -> bool:
    """True iff d is the discriminant of a quadratic field.

    Either d = 1 (mod 4) and squarefree, or d = 4m with m = 2, 3 (mod 4)
    and m squarefree.  d = 1 is excluded.
    """
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return arith.is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and arith.is_squarefree(m)
    return False


@dataclass(frozen=True)
class QuadraticField:
    """The quadratic field of fundamental discriminant delta."""

    delta: int

    def __post_init__(self):
        if not is_fundamental_discriminant(self.delta):
            raise ValueError(f"{self.delta} is not a fundamental discriminant")

    @property
    def is_imaginary(self) -> bool:
        return self.delta < 0


@dataclass(frozen=True)
class PrimeOfK:
    """A prime ideal of a quadratic field, encoded symbolically.

    For a split prime the root r satisfies r^2 = delta (mod p) and pins down
    which of the two conjugate ideals is meant (sqrt(delta) maps to r in the
    residue field).  A ramified prime carries the forced double root 0; an
    inert prime carries no root.  The conjugate pair above a split p = 2 is
    not separable in this encoding (both conjugates reduce to root 1); no
    operation downstream consumes split primes above 2.
    """

    p: int
    kind: SplitType
    root: int | None = None

    def __post_init__(self):
        if not arith.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind is SplitType.INERT:
            if self.root is not None:
                raise ValueError("inert primes carry no root")
        elif self.kind is SplitType.RAMIFIED:
            if self.root != 0:
                raise ValueError("ramified primes carry the double root 0")
        else:
            if self.root is None or not 0 <= self.root < self.p:
                raise ValueError("split primes need a canonical root in [0, p)")

    @property
    def norm(self) -> int:
        return self.p * self.p if self.kind is SplitType.INERT else self.p

    @property
    def conjugate(self) -> "PrimeOfK":
        if self.kind is SplitType.SPLIT:
            return PrimeOfK(self.p, self.kind, (self.p - self.root) % self.p)
        return self


def splitting(k: QuadraticField, p: int) -> SplitType:
    """Factorization type of the rational prime p in k.

    Ramified iff p | delta; for odd p split iff delta is a nonzero square
    mod p; for p = 2 split iff delta = 1 (mod 8).
    """
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    d = k.delta
    if d % p == 0:
        return SplitType.RAMIFIED
    if p == 2:
        return SplitType.SPLIT if d % 8 == 1 else SplitType.INERT
    return SplitType.SPLIT if arith.kronecker(d, p) == 1 else SplitType.INERT


def primes_above(k: QuadraticField, p: int) -> list[PrimeOfK]:
    """The primes of k above p, with split roots canonicalized to 0 <= r < p."""
    kind = splitting(k, p)
    if kind is SplitType.RAMIFIED:
        return [PrimeOfK(p, kind, 0)]
    if kind is SplitType.INERT:
        return [PrimeOfK(p, kind, None)]
    r = arith.mod_sqrt(k.delta % p, p)
    roots = sorted({r, (p - r) % p}) if p > 2 else [1, 1]
    return [PrimeOfK(p, kind, root) for root in roots]


class SplitPrimePrefix(NamedTuple):
    primes: list[int]
    # p_n over n*log(2n); the classical progression bound says this stays bounded
    linnik_ratio: float


def split_primes_prefix(k: QuadraticField, n: int, odd_only: bool = True) -> SplitPrimePrefix:
    """The n smallest (odd) rational primes that split in k, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    found: list[int] = []
    for p in arith.iter_primes(3 if odd_only else 2):
        if splitting(k, p) is SplitType.SPLIT:
            found.append(p)
            if len(found) == n:
                break
    return SplitPrimePrefix(found, found[-1] / (n * math.log(2 * n)))


def fundamental_masks(x: int):
    """Vectorized fundamental-discriminant tests for 0 <= a <= x.

    Returns (neg, pos) boolean arrays: neg[a] true iff -a is fundamental,
    pos[a] true iff +a is fundamental.
    """
    sf = arith.squarefree_table(x)
    a = np.arange(x + 1)
    m4 = a & 3
    quarter = a >> 2
    div4 = m4 == 0
    qmod = quarter & 3
    sf_quarter = np.zeros(x + 1, dtype=bool)
    sf_quarter[div4] = sf[quarter[div4]]
    neg = ((m4 == 3) & sf) | (div4 & ((qmod == 1) | (qmod == 2)) & sf_quarter)
    pos = ((m4 == 1) & sf) | (div4 & ((qmod == 2) | (qmod == 3)) & sf_quarter)
    if x >= 1:
        pos[1] = False
    return neg, pos


def fundamental_discriminants(x: int, sign: str = "both") -> Iterator[int]:
    """Fundamental discriminants with |delta| <= x, ascending in |delta|.

    sign is one of "imaginary", "real", "both"; at equal |delta| the negative
    discriminant comes first.  Deterministic, no randomness.
    """
    if sign not in ("imaginary", "real", "both"):
        raise ValueError(f"bad sign {sign!r}")
    if x < 3:
        return
    neg, pos = fundamental_masks(x)
    want_neg = sign in ("imaginary", "both")
    want_pos = sign in ("real", "both")
    for a in range(3, x + 1):
        if want_neg and neg[a]:
            yield -a
        if want_pos and pos[a]:
            yield a


def count_fundamental_discriminants(x: int, sign: str = "both") -> int:
    """Count of fundamental discriminants with |delta| <= x (density 6/pi^2 for both signs)."""
    if sign not in ("imaginary", "real", "both"):
        raise ValueError(f"bad sign {sign!r}")
    neg, pos = fundamental_masks(x)
    total = 0
    if sign in ("imaginary", "both"):
        total += int(neg.sum())
    if sign in ("real", "both"):
        total += int(pos.sum())
    return total



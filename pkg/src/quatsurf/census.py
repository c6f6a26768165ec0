"""Counting engines: restricted prime sets, squarefree censuses, splitting statistics.

The prime set P attached to a family of relative quadratic extensions
consists of the rational primes p that split in the base field k and whose
primes of k see every generator beta_i and conjugate reduce to a nonsquare.
Membership is decided one prime at a time with exact modular arithmetic; the
bulk scans only use numpy for prime generation.  Squarefree integers
supported on P are counted twice over, by a sieve and by direct enumeration
of subset products, and the two counts must agree exactly.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from . import arith
from .errors import BoundaryPrimeError, VerificationError
from .quadfields import (
    QuadraticField,
    SplitType,
    fundamental_masks,
    primes_above,
)
from .quatalg import QuatAlgK, embeds, fuchsian_admissible
from .relquad import RelQuadExt


def _nonsquare_at_all(delta: int, xs: tuple[int, ...], p: int) -> bool:
    """Core membership test at an odd prime p outside the boundary set.

    p must split in k, and at a fixed prime of k above p every beta and
    conjugate must reduce to a nonsquare; conjugate symmetry makes the choice
    of the prime above p irrelevant.
    """
    if pow(delta % p, (p - 1) // 2, p) != 1:
        return False
    r = arith.mod_sqrt(delta % p, p)
    e = (p - 1) // 2
    for x in xs:
        if pow((x + r) % p, e, p) != p - 1:
            return False
        if pow((x - r) % p, e, p) != p - 1:
            return False
    return True


def _scan_range(delta: int, xs: tuple[int, ...], boundary: tuple[int, ...], lo: int, hi: int) -> list[int]:
    """Members of P in [lo, hi]; standalone so shards can run in worker processes."""
    ps = arith.primes_up_to(hi)
    ps = ps[np.searchsorted(ps, lo) :]
    excl = set(boundary) | {2}
    out = []
    for p in ps:
        pi = int(p)
        if pi not in excl and _nonsquare_at_all(delta, xs, pi):
            out.append(pi)
    return out


def _scan_range_args(args) -> list[int]:
    return _scan_range(*args)


class PrimePredicate:
    """Deterministic membership test for the prime set P of a family of extensions.

    The finitely many primes dividing 2, delta_k, or any norm x_i^2 - delta_k
    are excluded from P by convention (they change nothing asymptotically);
    in_P raises BoundaryPrimeError on them.  An empty family gives the split
    primes of k.  Scans are cached as an ascending member array.
    """

    def __init__(self, delta_k: int, exts: Sequence[RelQuadExt] = ()):
        k = QuadraticField(delta_k)
        if not k.is_imaginary:
            raise ValueError("base field must be imaginary quadratic")
        for e in exts:
            if e.delta_k != delta_k:
                raise ValueError("extension base field mismatch")
        self.delta_k = delta_k
        self.exts = tuple(RelQuadExt(delta_k, e.x) for e in exts)
        self.xs = tuple(e.x for e in self.exts)
        bad: set[int] = {2}
        bad.update(arith.factorize(delta_k))
        for e in self.exts:
            bad.update(arith.factorize(e.norm_beta))
        self.boundary = frozenset(bad)
        self._members = np.empty(0, dtype=np.int64)
        self._scanned_to = 1

    def in_P(self, p: int) -> bool:
        if not arith.is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p in self.boundary:
            raise BoundaryPrimeError(f"boundary prime {p} - excluded by convention")
        return _nonsquare_at_all(self.delta_k, self.xs, p)

    def members_up_to(self, bound: int, shards: int = 1, progress: Callable[[int], None] | None = None) -> np.ndarray:
        """Ascending int64 array of the members of P up to bound (cached)."""
        if bound > self._scanned_to:
            lo = self._scanned_to + 1
            ranges = []
            step = max(10, (bound - lo + 1) // max(1, shards))
            start = lo
            while start <= bound:
                stop = min(bound, start + step - 1)
                ranges.append((self.delta_k, self.xs, tuple(sorted(self.boundary)), start, stop))
                start = stop + 1
            if shards > 1 and len(ranges) > 1:
                with ProcessPoolExecutor(max_workers=shards) as pool:
                    chunks = list(pool.map(_scan_range_args, ranges))
            else:
                chunks = []
                for r in ranges:
                    chunks.append(_scan_range_args(r))
                    if progress is not None:
                        progress(r[4])
            new = [p for chunk in chunks for p in chunk]
            self._members = np.concatenate([self._members, np.asarray(new, dtype=np.int64)])
            self._scanned_to = bound
        return self._members[: int(np.searchsorted(self._members, bound, side="right"))]


class DensityRow(NamedTuple):
    checkpoint: int
    count: int
    ratio: float  # count * log(checkpoint) / checkpoint


@dataclass(frozen=True)
class DensityReport:
    rows: list[DensityRow]

    @property
    def final_ratio(self) -> float:
        return self.rows[-1].ratio


def default_checkpoints(bound: int, start: int = 100) -> list[int]:
    """Powers of 10 from start up to bound, always including bound itself."""
    cps = []
    c = start
    while c < bound:
        cps.append(c)
        c *= 10
    cps.append(bound)
    return cps


def prime_density_report(
    pred: PrimePredicate,
    bound: int,
    checkpoints: Sequence[int] | None = None,
    shards: int = 1,
    progress: Callable[[int], None] | None = None,
) -> DensityReport:
    """Counts of P up to geometric checkpoints, normalized by x/log(x).

    For a family of n extensions the normalized count approaches 1/2^(2n+1):
    split primes have density 1/2 and each of the 2n nonsquare conditions
    halves it again.
    """
    if bound < 100:
        raise ValueError("bound too small to say anything")
    cps = sorted(set(checkpoints)) if checkpoints else default_checkpoints(bound)
    if cps[-1] > bound:
        raise ValueError("checkpoint beyond the scan bound")
    members = pred.members_up_to(bound, shards=shards, progress=progress)
    rows = []
    for c in cps:
        count = int(np.searchsorted(members, c, side="right"))
        rows.append(DensityRow(c, count, count * math.log(c) / c))
    return DensityReport(rows)


def _squarefree_count_sieve(pred: PrimePredicate, bound: int, segment: int = 1 << 20) -> int:
    """Sieve mode: strike multiples of non-members and of every p^2, count survivors.

    Processes [2, bound] in disjoint segments; each segment is an independent
    boolean strip, so the merge is plain addition.
    """
    members = pred.members_up_to(bound)
    member_set = {int(m) for m in members}
    all_primes = [int(p) for p in arith.primes_up_to(bound)]
    non_members = [p for p in all_primes if p not in member_set]
    squares = [p * p for p in all_primes if p * p <= bound]
    total = 0
    lo = 2
    while lo <= bound:
        hi = min(bound, lo + segment - 1)
        good = np.ones(hi - lo + 1, dtype=bool)
        for p in non_members:
            if p > hi:
                break
            start = ((lo + p - 1) // p) * p
            if start <= hi:
                good[start - lo :: p] = False
        for q in squares:
            if q > hi:
                break
            start = ((lo + q - 1) // q) * q
            if start <= hi:
                good[start - lo :: q] = False
        total += int(good.sum())
        lo = hi + 1
    return total


def _iter_subset_products(members: list[int], bound: int):
    stack = [(1, 0)]
    while stack:
        prod, idx = stack.pop()
        for j in range(idx, len(members)):
            nxt = prod * members[j]
            if nxt > bound:
                break
            yield nxt
            stack.append((nxt, j + 1))


def _squarefree_count_enumerate(pred: PrimePredicate, bound: int) -> int:
    """Enumeration mode: walk products of strictly increasing members of P."""
    members = [int(m) for m in pred.members_up_to(bound)]
    return sum(1 for _ in _iter_subset_products(members, bound))


def count_squarefree_over_P(pred: PrimePredicate, bound: int, mode: str = "sieve") -> int:
    """Squarefree d with 2 <= d <= bound, all prime factors in P.

    d = 1 is excluded: the empty product corresponds to a matrix algebra.
    Both modes must agree exactly; "sieve" strikes a segmented boolean strip,
    "enumerate" walks subset products of the member list.
    """
    if bound < 2:
        return 0
    if mode == "sieve":
        return _squarefree_count_sieve(pred, bound)
    if mode == "enumerate":
        return _squarefree_count_enumerate(pred, bound)
    raise ValueError(f"unknown mode {mode!r}")


def squarefree_values(pred: PrimePredicate, bound: int) -> list[int]:
    """The squarefree P-supported values up to bound, ascending."""
    if bound < 2:
        return []
    members = [int(m) for m in pred.members_up_to(bound)]
    return sorted(_iter_subset_products(members, bound))


class FitRow(NamedTuple):
    checkpoint: int
    count: int
    local_constant: float  # count / (X * (log X)^(tau-1))


@dataclass(frozen=True)
class MeanValueFit:
    tau: float
    constant: float
    rows: list[FitRow]

    @property
    def last_decade_drift(self) -> float:
        """Relative change of the local constant across the final two rows."""
        a, b = self.rows[-2].local_constant, self.rows[-1].local_constant
        return abs(b - a) / a


def mean_value_fit(counts: Sequence[tuple[int, int]], tau: float) -> MeanValueFit:
    """Least-squares constant C in N(X) ~ C*X*(log X)^(tau-1).

    Needs at least three checkpoints spanning at least two decades and a
    density exponent tau in (0, 1] (tau = 1 is the degenerate full-density case).
    """
    if not 0 < tau <= 1:
        raise ValueError("tau must lie in (0, 1]")
    if len(counts) < 3:
        raise ValueError("need at least three checkpoints")
    xs = [x for x, _ in counts]
    if max(xs) < 100 * min(xs):
        raise ValueError("checkpoints must span at least two decades")
    gs = [x * math.log(x) ** (tau - 1) for x, _ in counts]
    ns = [n for _, n in counts]
    constant = sum(n * g for n, g in zip(ns, gs)) / sum(g * g for g in gs)
    rows = [FitRow(x, n, n / g) for (x, n), g in zip(counts, gs)]
    return MeanValueFit(tau, constant, rows)


@dataclass(frozen=True)
class AlgebraCensus:
    delta_k: int
    x_bound: int
    d_values: list[int]
    algebras: list[QuatAlgK]

    @property
    def count(self) -> int:
        return len(self.algebras)


def algebra_census(
    delta_k: int, exts: Sequence[RelQuadExt], x_bound: int, pred: PrimePredicate | None = None
) -> AlgebraCensus:
    """All admissible algebras over k with |disc_f| < x_bound.

    One algebra per squarefree d supported on P: its ramification is the full
    conjugate pair above each p | d, so |disc_f| = d^2 and the census range is
    d <= sqrt(x_bound - 1).  Every algebra is checked against the embedding
    criterion for each member extension and against the pairing test; both
    are automatic, so a failure raises VerificationError.
    """
    if pred is None:
        pred = PrimePredicate(delta_k, exts)
    elif pred.delta_k != delta_k or pred.xs != tuple(e.x for e in exts):
        raise ValueError("predicate does not match the extension family")
    k = QuadraticField(delta_k)
    d_max = math.isqrt(max(0, x_bound - 1))
    ds = squarefree_values(pred, d_max)
    algebras = []
    for d in ds:
        ram: set = set()
        for p in arith.factorize(d):
            ram.update(primes_above(k, p))
        alg = QuatAlgK(delta_k, frozenset(ram))
        if not fuchsian_admissible(alg):
            raise VerificationError(f"census algebra for d={d} is not admissible")
        for e in pred.exts:
            if not embeds(alg, e):
                raise VerificationError(f"census algebra for d={d} rejects an extension")
        algebras.append(alg)
    return AlgebraCensus(delta_k, x_bound, ds, algebras)


class WoodStats(NamedTuple):
    count: int
    predicted: float
    ratio: float | None


def _split_condition_table(ell: int, want: SplitType) -> np.ndarray:
    """Boolean table over residues (mod ell, or mod 8 for ell = 2) for the
    condition 'a discriminant with this residue has the given behavior at ell'."""
    if ell == 2:
        table = np.zeros(8, dtype=bool)
        if want is SplitType.SPLIT:
            table[1] = True
        elif want is SplitType.INERT:
            table[5] = True
        else:
            table[[0, 4]] = True
        return table
    table = np.zeros(ell, dtype=bool)
    if want is SplitType.RAMIFIED:
        table[0] = True
        return table
    for r in range(1, ell):
        qr = arith.kronecker(r, ell) == 1
        table[r] = qr if want is SplitType.SPLIT else not qr
    return table


def wood_stats(q_split: int | None, q_inert: Sequence[int], x: int) -> WoodStats:
    """Count imaginary fundamental discriminants with prescribed splitting.

    Counts |delta| <= x with q_split split and every listed prime inert, and
    compares with the independence heuristic
    (6/pi^2)*x * (1/2) * prod ell/(2*ell+2): the per-prime factor is the
    probability of either prescribed behavior, after ramification eats
    1/(ell+1).  Contradictory constraints (one prime on both sides) give
    count 0 and predicted 0.
    """
    if x < 10**4:
        raise ValueError("x too small for meaningful statistics")
    q_inert = list(q_inert)
    if len(set(q_inert)) != len(q_inert):
        raise ValueError("duplicate primes in the inert list")
    constrained = q_inert + ([q_split] if q_split is not None else [])
    for q in constrained:
        if not arith.is_prime(q):
            raise ValueError(f"{q} is not prime")
    if q_split is not None and q_split in q_inert:
        return WoodStats(0, 0.0, None)

    neg, _pos = fundamental_masks(x)
    mags = np.flatnonzero(neg).astype(np.int64)
    keep = np.ones(len(mags), dtype=bool)
    conditions = [(q_split, SplitType.SPLIT)] if q_split is not None else []
    conditions += [(q, SplitType.INERT) for q in q_inert]
    for q, want in conditions:
        modulus = 8 if q == 2 else q
        table = _split_condition_table(q, want)
        keep &= table[(-mags) % modulus]
    count = int(keep.sum())

    predicted = (6 / math.pi**2) * x * 0.5
    for q in constrained:
        predicted *= q / (2 * q + 2)
    return WoodStats(count, predicted, count / predicted if predicted > 0 else None)


class RamificationCheck(NamedTuple):
    count: int
    total: int
    ratio: float
    target: float


def ramification_probability_check(ell: int, x: int) -> RamificationCheck:
    """Fraction of fundamental discriminants |delta| <= x divisible by ell.

    Divisibility by ell is exactly ramification of ell; across the family of
    quadratic fields (both signatures) the fraction converges to 1/(ell+1).
    """
    if not arith.is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if x < 10**4:
        raise ValueError("x too small for meaningful statistics")
    neg, pos = fundamental_masks(x)
    total = int(neg.sum()) + int(pos.sum())
    count = 0
    for mask in (neg, pos):
        idx = np.flatnonzero(mask)
        count += int((idx % ell == 0).sum())
    return RamificationCheck(count, total, count / total, 1 / (ell + 1))

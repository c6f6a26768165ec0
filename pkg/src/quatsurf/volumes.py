"""Covolume and coarea formulas, and the Dirichlet L-value they need.

The Dedekind zeta of an imaginary quadratic field factors as
zeta(s) * L(s, chi_delta), and at s = 2 the zeta(2) = pi^2/6 cancels the
4*pi^2 of the covolume formula, so every covolume here is an exact rational
times sqrt|delta| times one numerically summed L-value.  Coareas of the
rational (Fuchsian) groups are exact rational multiples of pi.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import arith
from .quadfields import is_fundamental_discriminant
from .quatalg import QuatAlgK, QuatAlgQ


def dirichlet_L2(delta: int, tol: float = 1e-10) -> float:
    """L(2, chi_delta) by direct summation with a proven tail bound <= tol.

    Partial sums of the period-|delta| character are bounded by twice the
    largest running sum over one period (the full period sums to zero), so by
    partial summation the tail beyond N is at most that bound divided by
    (N+1)^2; N is chosen deterministically from tol.  For delta = -4 this is
    Catalan's constant.
    """
    if not is_fundamental_discriminant(delta):
        raise ValueError(f"{delta} is not a fundamental discriminant")
    if not tol > 0:
        raise ValueError("tol must be positive")
    q = abs(delta)
    chi = np.array([arith.kronecker(delta, n) for n in range(q)], dtype=np.float64)
    running = np.cumsum(chi)
    bound = 2 * float(np.max(np.abs(running)))
    n_terms = max(q, math.isqrt(int(bound / tol)) + 1)
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    vals = chi[np.arange(1, n_terms + 1) % q]
    return float(np.sum(vals / (n * n)))


@dataclass(frozen=True)
class KleinianCovolume:
    """Covolume |delta|^(3/2) * L(2, chi) * prod(norm(p) - 1) / 24, kept structured.

    rational_factor carries |delta| * prod(norm(p) - 1) / 24 exactly, so that
    adding ramified pairs scales it by an exact rational.
    """

    rational_factor: Fraction
    abs_delta: int
    l_value: float

    @property
    def value(self) -> float:
        return float(self.rational_factor) * math.sqrt(self.abs_delta) * self.l_value


def kleinian_covolume(b: QuatAlgK, tol: float = 1e-10) -> KleinianCovolume:
    """Covolume of the norm-one group of a maximal order in a division algebra.

    zeta_k(2) = zeta(2) * L(2, chi_delta) with zeta(2) = pi^2/6 in closed
    form, so the pi's cancel against the 4*pi^2 and only the L-value is
    numerical.  Matrix algebras are rejected: their quotients have infinite
    volume and are out of scope.
    """
    if not b.is_division:
        raise ValueError("matrix algebra: no finite covolume")
    prod = 1
    for pr in b.ram_finite:
        prod *= pr.norm - 1
    return KleinianCovolume(
        rational_factor=Fraction(abs(b.delta_k) * prod, 24),
        abs_delta=abs(b.delta_k),
        l_value=dirichlet_L2(b.delta_k, tol),
    )


@dataclass(frozen=True)
class FuchsianCoarea:
    """Coarea (pi/3) * prod(p - 1) as an exact rational multiple of pi."""

    pi_multiple: Fraction

    @property
    def value(self) -> float:
        return float(self.pi_multiple) * math.pi


def fuchsian_coarea(b: QuatAlgQ) -> FuchsianCoarea:
    """Coarea of the norm-one Fuchsian group of an indefinite rational division algebra.

    Classical evaluation of the maximal-order norm-one group gives equality
    (pi/3) * prod_{p | disc}(p - 1); height-bound arguments usually quote it
    only as an upper bound.
    """
    if b.is_definite:
        raise ValueError("definite algebra: no Fuchsian group")
    if not b.ram_finite:
        raise ValueError("matrix algebra: the modular group has finite coarea but is out of scope")
    prod = 1
    for p in b.ram_finite:
        prod *= p - 1
    return FuchsianCoarea(Fraction(prod, 3))


def count_scaling(n: int, volume: float, kind: str) -> float:
    """Volume scaling of the two orbifold-census growth rates (constants suppressed).

    kind "off_surface": V^(1/2) * (log V)^(-(1 - 2^-(2n+1))), the growth of
    the census of classes carrying n short geodesics avoiding all surfaces.
    kind "on_surface": V^(2/3), the growth for n short geodesics on pairwise
    distinct surfaces; its n-dependent prefactor is existential and omitted.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not volume > math.e:
        raise ValueError("volume must exceed e")
    if kind == "off_surface":
        return math.sqrt(volume) * math.log(volume) ** -(1 - 0.5 ** (2 * n + 1))
    if kind == "on_surface":
        return volume ** (2 / 3)
    raise ValueError(f"unknown kind {kind!r}")

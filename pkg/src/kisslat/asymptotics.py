"""Closed-form rate/exponent arithmetic for the lattice kissing bounds.

Everything here is a pure function of small scalars: binary entropy,
the light-vector exponent E_s(delta), its zeros, the headline constant
of the kissing-number lower bound, and the parameter formulas of the
Drinfeld curve towers that the asymptotic constructions rely on.  All
logarithms are binary.  Floats are double precision (the quoted
constants carry 4-6 digits, so doubles leave orders of magnitude of
margin); genus and point counts are exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .outer_codes import rate_threshold


def binary_entropy(delta: float) -> float:
    """H(delta) = -delta*log2(delta) - (1-delta)*log2(1-delta); H(0)=H(1)=0."""
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"entropy argument {delta} outside [0, 1]")
    if delta in (0.0, 1.0):
        return 0.0
    return -delta * math.log2(delta) - (1.0 - delta) * math.log2(1.0 - delta)


def light_vector_exponent(s: int, delta: float) -> float:
    """E_s(delta) = H(delta) - 2s/(2^s - 1) - log2(2^(2s)/(2^(2s) - 1)).

    Positive exactly between its two zeros; at the positive values a
    code family of relative distance delta over the 2^(2s)-ary alphabet
    carries 2^(E_s(delta)/2^(2s) * n) minimum-weight words.
    """
    if s < 2:
        raise ValueError(f"s={s} out of range (s >= 2)")
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta={delta} outside (0, 1)")
    q2 = 1 << (2 * s)
    return binary_entropy(delta) - 2 * s / ((1 << s) - 1) - math.log2(q2 / (q2 - 1))


def exponent_zeros(s: int, tol: float = 1e-10) -> tuple[float, float]:
    """The two zeros delta_1 < delta_2 of E_s, by bisection to `tol`.

    E_s depends on delta only through H(delta), so the zeros are
    symmetric about 1/2; both are still located independently.
    """
    mid = light_vector_exponent(s, 0.5)
    if mid <= 0:
        raise ValueError(f"E_{s}(0.5) = {mid} <= 0: no sign change to bracket")
    d1 = _bisect(lambda d: light_vector_exponent(s, d), 1e-12, 0.5, tol)
    d2 = _bisect(lambda d: light_vector_exponent(s, d), 0.5, 1.0 - 1e-12, tol)
    return d1, d2


def _bisect(fn, lo: float, hi: float, tol: float) -> float:
    flo = fn(lo)
    if flo == 0.0:
        return lo
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        fmid = fn(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2.0


def kissing_exponent_constant(margin: float = 1e-6) -> float:
    """(1/7 - log2(64/63) - margin) / 64, about 0.001877.

    The asymptotic lower bound on log2(kissing number)/dimension for
    the lattice family built from binary images of self-orthogonal
    64-ary codes; `margin` absorbs the drop from evaluating the
    exponent at the design distance instead of exactly 1/2.
    """
    return (1.0 / 7.0 - math.log2(64.0 / 63.0) - margin) / 64.0


class TargetDistance(NamedTuple):
    """Design relative distance 6/7 - rho0(64), its offset from 1/2, and the sign."""

    value: float
    offset: float
    sign: int


def target_relative_distance() -> TargetDistance:
    """delta_0 = 6/7 - rho0(64): the relative distance the plan aims at.

    Computes to 1/2 + 5.78e-5 (sign +; sometimes quoted with the
    opposite sign, which changes nothing downstream: E_3 is symmetric
    about 1/2, so both readings give E_3(delta_0) within 1e-8 of
    E_3(0.5)).
    """
    d0 = 6.0 / 7.0 - rate_threshold(64).rho0
    off = d0 - 0.5
    return TargetDistance(value=d0, offset=abs(off), sign=1 if off >= 0 else -1)


@dataclass(frozen=True)
class BoundParams:
    """E_s evaluated at one point, with the pieces used downstream."""

    s: int
    delta: float
    entropy: float
    exponent: float
    exponent_over_q: float


def bound_params(s: int, delta: float) -> BoundParams:
    e = light_vector_exponent(s, delta)
    return BoundParams(
        s=s,
        delta=delta,
        entropy=binary_entropy(delta),
        exponent=e,
        exponent_over_q=e / (1 << (2 * s)),
    )


@dataclass(frozen=True)
class DrinfeldParams:
    """Genus/point-count data of the k-th Drinfeld curve over GF(2^(2s))."""

    s: int
    k: int
    genus: Fraction
    genus_integral: bool
    point_lower_bound: int
    ratio_ok: bool  # point bound >= (2^(2s) - 1) * genus


def drinfeld_params(s: int, k: int) -> DrinfeldParams:
    """Exact tower parameters: genus (2^(ms)-1)^2/(2^(2s)-1) for k = 2m,
    and the point-count lower bound 2^(sk).

    The genus formula only applies to even k; odd k is reported as an
    error rather than guessed.  Non-integral genus values (possible for
    small even k) are flagged, not rounded.
    """
    if s < 2 or k < 2:
        raise ValueError(f"need s >= 2 and k >= 2, got s={s}, k={k}")
    if k % 2:
        raise ValueError(f"genus formula needs even k (k = 2m); got k={k}")
    m = k // 2
    genus = Fraction(((1 << (m * s)) - 1) ** 2, (1 << (2 * s)) - 1)
    points = 1 << (s * k)
    return DrinfeldParams(
        s=s,
        k=k,
        genus=genus,
        genus_integral=genus.denominator == 1,
        point_lower_bound=points,
        ratio_ok=points >= ((1 << (2 * s)) - 1) * genus,
    )


@dataclass(frozen=True)
class PlanRow:
    """One row of the construction planning table (no existence claim)."""

    k: int
    K: int
    N: int
    genus: Fraction | None
    target_dimension: int
    target_distance: int
    log2_kissing_bound: float


def param_table(kmax: int) -> list[PlanRow]:
    """Planning rows for N = 8^k, k = 1..kmax (kmax <= 12).

    K = 3k - 1 so that N = 2^(K+1); the genus column is filled from
    drinfeld_params (s = 3 throughout) for even k and left empty for
    odd k; target dimension and distance are floor(rho0 * N) and
    floor(delta0 * N); the last column scales the headline constant
    by N.  A planning table only: no existence claim at any finite N.
    """
    if kmax > 12:
        raise ValueError(f"kmax={kmax} exceeds 12")
    s = 3
    rho = rate_threshold(1 << (2 * s)).rho0
    d0 = target_relative_distance().value
    c = kissing_exponent_constant()
    rows = []
    for k in range(1, kmax + 1):
        n = (1 << s) ** k
        genus = drinfeld_params(s, k).genus if k % 2 == 0 else None
        rows.append(
            PlanRow(
                k=k,
                K=s * k - 1,
                N=n,
                genus=genus,
                target_dimension=math.floor(rho * n),
                target_distance=math.floor(d0 * n),
                log2_kissing_bound=c * n,
            )
        )
    return rows

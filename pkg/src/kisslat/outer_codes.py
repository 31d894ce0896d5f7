"""Generalized Reed-Solomon codes over GF(2^m) and rate thresholds.

A GRS code evaluates polynomials of degree < K at N distinct points and
scales coordinate j by a nonzero column multiplier.  These are the
genus-zero stand-ins for the algebraic-geometry codes the asymptotic
results need: small, exactly checkable, and rich enough to produce
Euclidean self-orthogonal instances for the concatenation machinery.

Self-orthogonal instances are found constructively rather than by blind
search: G * G^T = 0 reduces to a linear system on the squared
multipliers, so we sample the system's solution space (seeded) until a
solution with all coordinates nonzero appears, then take square roots
(unique in characteristic 2).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .finite_field import FieldTable


@dataclass(frozen=True)
class GrsCode:
    """[N, K] GRS code: rows t = 0..K-1 of (multiplier_j * point_j^t)."""

    field: FieldTable
    points: tuple[int, ...]
    multipliers: tuple[int, ...]
    K: int

    def __post_init__(self):
        f = self.field
        if len(set(self.points)) != len(self.points):
            raise ValueError("evaluation points must be pairwise distinct")
        if any(p >= f.order for p in self.points):
            raise ValueError("evaluation point outside the field")
        if len(self.multipliers) != len(self.points):
            raise ValueError("need one multiplier per point")
        if any(v == 0 for v in self.multipliers):
            raise ValueError("column multipliers must be nonzero")
        if any(v >= f.order for v in self.multipliers):
            raise ValueError("multiplier outside the field")
        if not 0 <= self.K <= self.N:
            raise ValueError(f"dimension K={self.K} out of range 0..{self.N}")

    @property
    def N(self) -> int:
        return len(self.points)

    def generator_rows(self) -> list[list[int]]:
        f = self.field
        rows = []
        for t in range(self.K):
            rows.append([f.mul(v, f.pow(a, t)) for a, v in zip(self.points, self.multipliers)])
        return rows

    def encode(self, message: list[int]) -> list[int]:
        """Codeword for K message symbols (coefficients of the polynomial)."""
        f = self.field
        word = [0] * self.N
        for t, c in enumerate(message):
            if c == 0:
                continue
            for j, (a, v) in enumerate(zip(self.points, self.multipliers)):
                word[j] ^= f.mul(c, f.mul(v, f.pow(a, t)))
        return word

    def codewords(self):
        """All q^K codewords by message enumeration."""
        f = self.field
        rows = self.generator_rows()
        for idx in range(f.order**self.K):
            msg = []
            x = idx
            for _ in range(self.K):
                msg.append(x % f.order)
                x //= f.order
            word = [0] * self.N
            for c, row in zip(msg, rows):
                if c:
                    for j, rj in enumerate(row):
                        word[j] ^= f.mul(c, rj)
            yield word


def build_grs(
    field: FieldTable, points, multipliers, K: int
) -> GrsCode:
    return GrsCode(field, tuple(points), tuple(multipliers), K)


def minimum_distance(c: GrsCode) -> int:
    """Enumerated minimum Hamming weight; GRS must give N - K + 1."""
    if c.field.order**c.K > 1 << 20:
        raise ValueError("codeword space too large to enumerate")
    best = None
    for w in c.codewords():
        wt = sum(1 for x in w if x)
        if wt and (best is None or wt < best):
            best = wt
    if best is None:
        raise ValueError("zero-dimensional code has no nonzero codeword")
    return best


def is_euclidean_self_orthogonal(c: GrsCode) -> bool:
    """True iff G * G^T = 0 over GF(q) (literal, not up to equivalence)."""
    f = c.field
    rows = c.generator_rows()
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            acc = 0
            for x, y in zip(rows[i], rows[j]):
                acc ^= f.mul(x, y)
            if acc:
                return False
    return True


def find_self_orthogonal_multipliers(
    field: FieldTable, points, K: int, seed: int = 0, budget: int = 10_000
) -> tuple[int, ...]:
    """Multipliers making GRS(points, ., K) Euclidean self-orthogonal.

    Row t dot row u is sum_j v_j^2 a_j^(t+u), so self-orthogonality says
    the vector w = (v_j^2) kills the Vandermonde rows of degree
    0..2K-2.  We compute that nullspace once, then draw seeded random
    combinations until every coordinate is nonzero; v_j = sqrt(w_j).
    """
    points = tuple(points)
    n = len(points)
    f = field
    if 2 * K > n:
        # self-orthogonality needs K <= N - K, and the squared-multiplier
        # system has solution space of dimension N - (2K - 1)
        raise ValueError(f"no self-orthogonal [N={n}, K={K}] GRS: need 2K <= N")
    system = [[f.pow(a, s) for a in points] for s in range(2 * K - 1)]
    null = _nullspace(f, system, n)
    if not null:
        raise ValueError("empty nullspace: no candidate multipliers")
    rng = random.Random(seed)
    for _ in range(budget):
        w = [0] * n
        any_used = False
        for vec in null:
            c = rng.randrange(f.order)
            if c:
                any_used = True
                for j in range(n):
                    w[j] ^= f.mul(c, vec[j])
        if any_used and all(w):
            return tuple(f.sqrt(x) for x in w)
    raise ValueError(
        f"no all-nonzero nullspace vector found within {budget} draws (seed {seed})"
    )


def _nullspace(f: FieldTable, rows: list[list[int]], n: int) -> list[list[int]]:
    """Basis of the right nullspace of `rows` over the field."""
    mat = [row[:] for row in rows]
    pivots: list[tuple[int, int]] = []  # (row index in mat, column)
    r = 0
    for col in range(n):
        sel = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = f.inv(mat[r][col])
        mat[r] = [f.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                c = mat[i][col]
                mat[i] = [x ^ f.mul(c, y) for x, y in zip(mat[i], mat[r])]
        pivots.append((r, col))
        r += 1
    pivot_cols = {col for _, col in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        vec = [0] * n
        vec[free] = 1
        for i, col in pivots:
            vec[col] = mat[i][free]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class RateThresholds:
    """Threshold data below which an AG code is self-orthogonal-equivalent."""

    q: int
    r: int
    rho0: float
    g: int | None = None
    kmax: int | None = None


def max_self_orthogonal_dimension(q: int, n: int, g: int) -> int:
    """Largest k with k <= (n - 1 - log_q(1 + 2/q)/q)/2 - g.

    May be negative, meaning no dimension qualifies.  Logs are binary
    internally; log_q x = log2(x)/log2(q).
    """
    if q < 2 or q & (q - 1):
        raise ValueError(f"q={q} is not a power of 2")
    if n < 1 or g < 0:
        raise ValueError(f"need n >= 1 and g >= 0, got n={n}, g={g}")
    logq = math.log2(1.0 + 2.0 / q) / math.log2(q)
    return math.floor((n - 1 - logq / q) / 2.0 - g)


def rate_threshold(q: int, n: int | None = None, g: int | None = None) -> RateThresholds:
    """rho0 = 1/2 - log_q(1 + 2/q)/(2q) - 1/(r - 1) for q = r^2.

    Codes of rate below rho0 on good curves (n = (r-1)g) fall under the
    self-orthogonality threshold.  rho0 <= 0 (it happens for r = 2)
    means the threshold is empty.  When n and g are supplied the
    concrete dimension bound is attached.
    """
    if q < 4 or q & (q - 1):
        raise ValueError(f"q={q} is not a square power of 2")
    r = math.isqrt(q)
    if r * r != q:
        raise ValueError(f"q={q} is not a perfect square")
    logq = math.log2(1.0 + 2.0 / q) / math.log2(q)
    rho = 0.5 - logq / (2.0 * q) - 1.0 / (r - 1)
    kmax = max_self_orthogonal_dimension(q, n, g) if n is not None and g is not None else None
    return RateThresholds(q=q, r=r, rho0=rho, g=g, kmax=kmax)


# --- text format --------------------------------------------------------
#
# header:  grs q=<q> N=<N> K=<K> [modulus=<hex>]
# line 2:  N points in hex, whitespace separated
# line 3:  N multipliers in hex

def format_grs(c: GrsCode) -> str:
    head = f"grs q={c.field.order} N={c.N} K={c.K} modulus={c.field.modulus:#x}"
    pts = " ".join(f"{a:x}" for a in c.points)
    mults = " ".join(f"{v:x}" for v in c.multipliers)
    return "\n".join([head, pts, mults]) + "\n"


def parse_grs(text: str) -> GrsCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("grs"):
        raise ValueError("expected header 'grs q=<q> N=<N> K=<K>'")
    kv = dict(p.split("=", 1) for p in lines[0].split()[1:] if "=" in p)
    try:
        q, n, k = int(kv["q"]), int(kv["N"]), int(kv["K"])
    except (KeyError, ValueError):
        raise ValueError(f"malformed grs header: {lines[0]!r}") from None
    m = q.bit_length() - 1
    if 1 << m != q:
        raise ValueError(f"q={q} is not a power of 2")
    modulus = int(kv["modulus"], 16) if "modulus" in kv else None
    field = FieldTable(m, modulus)
    if len(lines) < 3:
        raise ValueError("grs file needs a points line and a multipliers line")
    points = tuple(int(t, 16) for t in lines[1].split())
    mults = tuple(int(t, 16) for t in lines[2].split())
    if len(points) != n or len(mults) != n:
        raise ValueError(f"expected {n} points and {n} multipliers")
    return GrsCode(field, points, mults, k)

"""Lattices from binary self-orthogonal codes via 2-adic digit levels.

Fix a code C of length n.  Two nested objects are handled here:

* the *level set*: integer vectors whose first n binary digit vectors
  (2-adic, so negatives work out) all lie in C.  Equivalently, sums
  sum_j 2^j lift(c_j) + 2^n z with c_j in C.  Membership is decided
  exactly by digit peeling; each digit is forced, so no search happens.
  The set is closed under negation but not, in general, under addition:
  carries are Schur (coordinatewise) products of codewords, and those
  may leave C.  `closure_probe` measures exactly that.

* the *span lattice*: the integer span of the level set, generated by
  {lift(c) : c in C} together with 2^n Z^n.  Always a lattice; when the
  level set happens to be additively closed the two coincide.  The span
  basis is kept in Hermite normal form (upper triangular, positive
  pivots, entries above a pivot reduced), all arithmetic on exact
  Python integers.

Short-vector enumeration works backwards from the residue structure:
every lattice vector reduces mod 2 into the code, so candidates of a
given norm are generated per residue codeword (odd coordinates sit
exactly on the codeword support) and only then checked against the
basis.  That prunes the bulk of the naive signed-support candidates
before any exact membership test runs.
"""

from __future__ import annotations

import hashlib
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from math import isqrt

from .binary_codes import (
    BinaryCode,
    codewords_by_weight,
    is_self_orthogonal,
    row_space,
    weight_distribution,
)

MAX_SPAN_DIMENSION = 20  # 2^k codeword lifts are inserted one by one


def lift(word: int, n: int) -> tuple[int, ...]:
    """Embed an n-bit word into Z^n with coordinates in {0, 1}."""
    return tuple((word >> i) & 1 for i in range(n))


@dataclass(frozen=True)
class LatticeBasis:
    """Hermite-form basis of a sublattice of Z^n containing 2^n Z^n."""

    n: int
    rows: tuple[tuple[int, ...], ...]
    source: str = ""

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"basis must be {self.n}x{self.n}")
        for i, row in enumerate(self.rows):
            if any(row[j] for j in range(i)):
                raise ValueError(f"row {i} is not upper triangular")
            if row[i] <= 0:
                raise ValueError(f"pivot {i} is {row[i]}, must be positive")
        det = self.determinant()
        if det & (det - 1):
            raise ValueError(f"determinant {det} is not a power of 2")

    def determinant(self) -> int:
        d = 1
        for i in range(self.n):
            d *= self.rows[i][i]
        return d

    def contains(self, x) -> bool:
        """Exact membership by triangular back-substitution."""
        y = list(x)
        for i in range(self.n):
            q, r = divmod(y[i], self.rows[i][i])
            if r:
                return False
            if q:
                row = self.rows[i]
                for j in range(i, self.n):
                    y[j] -= q * row[j]
        return True

    def residue_code(self) -> BinaryCode:
        """The basis rows mod 2 span exactly the generating code."""
        return row_space(self.n, (sum((r[j] & 1) << j for j in range(self.n)) for r in self.rows))

    def digest(self) -> str:
        return hashlib.sha256(format_basis_file(self).encode()).hexdigest()[:16]


def hermite_form(n: int, vectors) -> tuple[tuple[int, ...], ...]:
    """Canonical HNF of the lattice spanned by `vectors` (must be full rank)."""
    by_pivot: dict[int, list[int]] = {}
    for vec in vectors:
        _insert(by_pivot, list(vec), n)
    if len(by_pivot) != n:
        raise ValueError(f"generators span rank {len(by_pivot)} < {n}")
    rows = [by_pivot[j] for j in range(n)]
    # reduce entries above each pivot into [0, pivot)
    for j in range(n):
        pivot = rows[j][j]
        for i in range(j):
            q = rows[i][j] // pivot
            if q:
                for t in range(j, n):
                    rows[i][t] -= q * rows[j][t]
    return tuple(tuple(r) for r in rows)


def _insert(by_pivot: dict[int, list[int]], v: list[int], n: int) -> None:
    for j in range(n):
        if v[j] == 0:
            continue
        row = by_pivot.get(j)
        if row is None:
            if v[j] < 0:
                v = [-t for t in v]
            by_pivot[j] = v
            return
        a, b = row[j], v[j]
        if b % a == 0:
            q = b // a
            for t in range(j, n):
                v[t] -= q * row[t]
        else:
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            new_row = [x * row[t] + y * v[t] for t in range(n)]
            v = [ag * v[t] - bg * row[t] for t in range(n)]
            by_pivot[j] = new_row
    # fully reduced: v was already in the lattice


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, x, y with x*a + y*b == g == gcd(a, b) > 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    g, r = a, b
    while r:
        q = g // r
        g, r = r, g - q * r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if g < 0:
        g, x0, y0 = -g, -x0, -y0
    return g, x0, y0


def build_span_basis(c: BinaryCode, source: str | None = None) -> LatticeBasis:
    """Hermite basis of span({lift(w) : w in C} + 2^n Z^n).

    Inserts the lift of every codeword (lift is not GF(2)-to-Z linear,
    so generator rows alone are not enough), then the scaled unit
    vectors.  Cost grows as 2^k; k is capped accordingly.  A
    non-self-orthogonal input still produces a lattice, just without
    the minimum-norm guarantees, so it only warns.
    """
    if c.n > 32:
        raise ValueError(f"dimension n={c.n} exceeds 32")
    if c.k > MAX_SPAN_DIMENSION:
        raise ValueError(f"k={c.k} exceeds the all-codewords span guard {MAX_SPAN_DIMENSION}")
    if not is_self_orthogonal(c):
        warnings.warn("code is not self-orthogonal: span is still a lattice, but the "
                      "minimum-norm and kissing guarantees lapse", stacklevel=2)
    n = c.n
    gens = [lift(w, n) for w in c.codewords()]
    big = 1 << n
    gens += [tuple(big if j == i else 0 for j in range(n)) for i in range(n)]
    if source is None:
        h = hashlib.sha256(repr((c.n, c.generator)).encode()).hexdigest()[:12]
        source = f"binary-code n={c.n} k={c.k} {h}"
    return LatticeBasis(n=n, rows=hermite_form(n, gens), source=source)


def set_contains(c: BinaryCode, x) -> bool:
    """Level-set membership: n rounds of forced digit peeling.

    Each round takes the vector mod 2 (two's-complement, so negatives
    peel correctly), requires that digit word to be a codeword, and
    divides out.  After n rounds the remainder is absorbed by 2^n Z^n.
    """
    y = list(x)
    for _ in range(c.n):
        word = 0
        for i, v in enumerate(y):
            if v & 1:
                word |= 1 << i
        if not c.contains(word):
            return False
        y = [(v - ((word >> i) & 1)) >> 1 for i, v in enumerate(y)]
    return True


def random_set_member(c: BinaryCode, rng: random.Random) -> tuple[int, ...]:
    """sum_j 2^j lift(c_j) over n uniform codewords c_j."""
    x = [0] * c.n
    for j in range(c.n):
        w = c.encode(rng.getrandbits(c.k)) if c.k else 0
        for i in range(c.n):
            x[i] += ((w >> i) & 1) << j
    return tuple(x)


@dataclass(frozen=True)
class ClosureReport:
    """Sampled additive-closure probe of the level set."""

    trials: int
    passes: int
    failures: int
    counterexamples: tuple[tuple[int, ...], ...]

    @property
    def closed(self) -> bool:
        return self.failures == 0


def closure_probe(c: BinaryCode, trials: int = 1000, seed: int = 0) -> ClosureReport:
    """Sample pairs of level-set members and test membership of the sum.

    A failure is a genuine witness (digit peeling is exact), so up to
    10 counterexample vectors are returned for the record.
    """
    rng = random.Random(seed)
    passes = 0
    bad: list[tuple[int, ...]] = []
    for _ in range(trials):
        x = random_set_member(c, rng)
        y = random_set_member(c, rng)
        s = tuple(a + b for a, b in zip(x, y))
        if set_contains(c, s):
            passes += 1
        elif len(bad) < 10:
            bad.append(s)
    return ClosureReport(
        trials=trials,
        passes=passes,
        failures=trials - passes,
        counterexamples=tuple(bad),
    )


# --- short vector enumeration -------------------------------------------

DEFAULT_MAX_DIM = 24
DEFAULT_MAX_CAP = 16


@dataclass(frozen=True)
class ShortVectorReport:
    """Exact census of lattice vectors with squared norm in [1, cap]."""

    min_norm: int | None
    kissing: int
    per_norm: dict[int, int]
    cap: int


def enumerate_short(
    b: LatticeBasis,
    cap: int,
    workers: int = 1,
    allow_large: bool = False,
) -> ShortVectorReport:
    """Count all lattice vectors of squared norm 1..cap, exactly.

    Candidates are generated residue-first: split the norm into odd and
    even squares, pick the odd-coordinate support from the residue
    code's words of matching weight, place the even squares on the
    complement, enumerate signs, and only then run the exact membership
    test.  Counts are independent of enumeration order and of how the
    work is partitioned across `workers` processes.
    """
    if not allow_large and (b.n > DEFAULT_MAX_DIM or cap > DEFAULT_MAX_CAP):
        raise ValueError(
            f"n={b.n}, cap={cap} beyond the default guards "
            f"(n <= {DEFAULT_MAX_DIM}, cap <= {DEFAULT_MAX_CAP}); pass allow_large=True"
        )
    tasks = _candidate_tasks(b, cap)
    if workers <= 1 or not tasks:
        counts = _count_tasks((b.rows, b.n, tasks))
    else:
        chunks = [tasks[w::workers] for w in range(workers)]
        counts: dict[int, int] = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_tasks, [(b.rows, b.n, ch) for ch in chunks]):
                for norm, cnt in part.items():
                    counts[norm] = counts.get(norm, 0) + cnt
    per_norm = {v: counts.get(v, 0) for v in range(1, cap + 1)}
    hits = [v for v, cnt in per_norm.items() if cnt]
    min_norm = hits[0] if hits else None
    return ShortVectorReport(
        min_norm=min_norm,
        kissing=per_norm[min_norm] if min_norm is not None else 0,
        per_norm=per_norm,
        cap=cap,
    )


def _candidate_tasks(b: LatticeBasis, cap: int) -> list[tuple[int, tuple, tuple, int]]:
    """Flat task list: (norm, odd placement spec, even spec, residue word)."""
    n = b.n
    residue = b.residue_code()
    words = codewords_by_weight(residue, min(cap, n))
    tasks = []
    for norm in range(1, cap + 1):
        for parts in _square_splits(norm, n, isqrt(cap)):
            odd = tuple((s, c) for s, c in parts if s % 2)
            even = tuple((s, c) for s, c in parts if s % 2 == 0)
            r = sum(c for _, c in odd)
            for w in words.get(r, []):
                tasks.append((norm, odd, even, w))
    return tasks


def _square_splits(v: int, max_parts: int, max_mag: int):
    """Multisets of squares of magnitudes <= max_mag summing to v."""
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(remaining: int, mag: int, parts_left: int, acc: list[tuple[int, int]]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if mag == 0 or parts_left == 0:
            return
        sq = mag * mag
        top = min(remaining // sq, parts_left)
        for c in range(top, -1, -1):
            if c:
                acc.append((mag, c))
            rec(remaining - c * sq, mag - 1, parts_left - c, acc)
            if c:
                acc.pop()

    rec(v, min(max_mag, isqrt(v)), max_parts, [])
    return out


def _count_tasks(args) -> dict[int, int]:
    """Worker: expand placements and signs, filter by exact membership."""
    rows, n, tasks = args
    counts: dict[int, int] = {}
    for norm, odd, even, word in tasks:
        supp = [i for i in range(n) if (word >> i) & 1]
        rest = [i for i in range(n) if not (word >> i) & 1]
        for mags in _placements(supp, odd, rest, even, n):
            c = _count_signed(rows, n, mags)
            if c:
                counts[norm] = counts.get(norm, 0) + c
    return counts


def _placements(supp, odd, rest, even, n):
    """All magnitude vectors: odd magnitudes on supp, even ones on rest.

    The caller matches the residue word's weight to the total odd
    count, so every support position receives exactly one odd value.
    """

    def assign(positions, specs):
        if not specs:
            yield ()
            return
        (mag, cnt), tail = specs[0], specs[1:]
        for chosen in combinations(positions, cnt):
            left = [p for p in positions if p not in chosen]
            for more in assign(left, tail):
                yield tuple((p, mag) for p in chosen) + more

    for o in assign(supp, odd):
        for e in assign(rest, even):
            mags = [0] * n
            for p, mag in o + e:
                mags[p] = mag
            yield mags


def _count_signed(rows, n, mags) -> int:
    """Number of sign choices of the magnitude vector inside the lattice."""
    nz = [i for i in range(n) if mags[i]]
    count = 0
    for signs in product((1, -1), repeat=len(nz)):
        x = list(mags)
        for s, i in zip(signs, nz):
            x[i] = s * mags[i]
        if _rows_contain(rows, n, x):
            count += 1
    return count


def _rows_contain(rows, n, x) -> bool:
    y = list(x)
    for i in range(n):
        q, r = divmod(y[i], rows[i][i])
        if r:
            return False
        if q:
            row = rows[i]
            for j in range(i, n):
                y[j] -= q * row[j]
    return True


# --- composite verification ---------------------------------------------

@dataclass(frozen=True)
class LatticeVerdict:
    """The three measurable claims about the lattice of a code."""

    set_closed_sampled: bool
    norm_equals_d: bool
    kissing_ge_Ad: bool
    d: int
    A_d: int
    min_norm: int | None
    kissing: int
    closure: ClosureReport


def verify_code_lattice(
    c: BinaryCode,
    trials: int = 1000,
    seed: int = 0,
    cap: int | None = None,
    workers: int = 1,
) -> LatticeVerdict:
    """Probe closure of the level set and measure min norm and kissing
    of the span lattice against the code's d and A_d.

    The code must be self-orthogonal (that is the regime where the
    guarantees are claimed); the measurements themselves are reported
    as found, never assumed.
    """
    if not is_self_orthogonal(c):
        raise ValueError("verification requires a self-orthogonal code")
    if c.k == 0:
        raise ValueError("zero code has no minimum distance to verify")
    wd = weight_distribution(c)
    basis = build_span_basis(c)
    report = enumerate_short(basis, cap if cap is not None else max(wd.d, 8), workers=workers)
    closure = closure_probe(c, trials=trials, seed=seed)
    return LatticeVerdict(
        set_closed_sampled=closure.closed,
        norm_equals_d=report.min_norm == wd.d,
        kissing_ge_Ad=report.kissing >= wd.A_d,
        d=wd.d,
        A_d=wd.A_d,
        min_norm=report.min_norm,
        kissing=report.kissing,
        closure=closure,
    )


# --- text format ----------------------------------------------------------

def format_basis_file(b: LatticeBasis) -> str:
    lines = [f"lattice n={b.n}"]
    lines += [" ".join(str(v) for v in row) for row in b.rows]
    return "\n".join(lines) + "\n"


def parse_basis_file(text: str) -> LatticeBasis:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("lattice"):
        raise ValueError("expected header 'lattice n=<n>'")
    kv = dict(p.split("=", 1) for p in lines[0].split()[1:] if "=" in p)
    try:
        n = int(kv["n"])
    except (KeyError, ValueError):
        raise ValueError(f"malformed lattice header: {lines[0]!r}") from None
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} basis rows, found {len(lines) - 1}")
    rows = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1:])
    return LatticeBasis(n=n, rows=rows, source="file")

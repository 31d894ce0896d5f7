"""Binary linear codes as bit-matrices.

Rows are stored as machine-word integers with bit i holding coordinate
i, so a length-n word fits a single int (n is capped at 32).  Weight
distributions come from full codeword enumeration with a Gray-code walk
over the message space: one row XOR per codeword, which keeps k = 28
within seconds.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_LENGTH = 32
MAX_DIMENSION = 28


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class BinaryCode:
    """[n, k] binary linear code given by a full-row-rank generator."""

    n: int
    generator: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"length n={self.n} out of range 1..{MAX_LENGTH}")
        if len(self.generator) > MAX_DIMENSION:
            raise ValueError(f"dimension k={len(self.generator)} exceeds {MAX_DIMENSION}")
        mask = (1 << self.n) - 1
        for i, row in enumerate(self.generator):
            if row & ~mask:
                raise ValueError(f"row {i} has bits beyond length {self.n}")
        bad = _dependent_row(self.generator)
        if bad is not None:
            raise ValueError(f"generator rows are not independent: row {bad} depends on earlier rows")

    @property
    def k(self) -> int:
        return len(self.generator)

    def encode(self, message: int) -> int:
        """Codeword for a k-bit message (bit t selects generator row t)."""
        w = 0
        t = 0
        while message:
            if message & 1:
                w ^= self.generator[t]
            message >>= 1
            t += 1
        return w

    def codewords(self):
        """All 2^k codewords, Gray-code order (starts at 0)."""
        w = 0
        yield w
        for i in range(1, 1 << self.k):
            w ^= self.generator[(i & -i).bit_length() - 1]
            yield w

    def parity_rows(self) -> tuple[int, ...]:
        """Rows of a parity-check matrix H (kernel basis of the generator)."""
        return _kernel_rows(self.generator, self.n)

    def contains(self, word: int) -> bool:
        """Syndrome test against the cached parity-check rows."""
        try:
            h = self._parity_cache
        except AttributeError:
            h = self.parity_rows()
            object.__setattr__(self, "_parity_cache", h)
        return all(_popcount(word & row) % 2 == 0 for row in h)

    def row_strings(self) -> list[str]:
        return ["".join(str((row >> j) & 1) for j in range(self.n)) for row in self.generator]


def _dependent_row(rows: tuple[int, ...]) -> int | None:
    """Index of the first row dependent on its predecessors, or None."""
    pivots: list[int] = []
    for i, row in enumerate(rows):
        r = row
        for p in pivots:
            if r & (p & -p):
                r ^= p
        if r == 0:
            return i
        pivots.append(r)
        pivots.sort(key=lambda v: v & -v)
    return None


def _kernel_rows(rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Basis of {x : dot(x, row) = 0 mod 2 for every row}, as bit-ints."""
    # Row-reduce the generator, tracking pivot columns.
    reduced: list[int] = []
    pivot_cols: list[int] = []
    for row in rows:
        r = row
        for pr, pc in zip(reduced, pivot_cols):
            if (r >> pc) & 1:
                r ^= pr
        if r:
            pc = (r & -r).bit_length() - 1
            for idx, (qr, qc) in enumerate(zip(reduced, pivot_cols)):
                if (qr >> pc) & 1:
                    reduced[idx] ^= r
            reduced.append(r)
            pivot_cols.append(pc)
    free_cols = [c for c in range(n) if c not in pivot_cols]
    kernel = []
    for fc in free_cols:
        v = 1 << fc
        for pr, pc in zip(reduced, pivot_cols):
            if (pr >> fc) & 1:
                v |= 1 << pc
        kernel.append(v)
    return tuple(kernel)


@dataclass(frozen=True)
class WeightDistribution:
    """Exact weight counts; d is None only for the zero code (k = 0)."""

    counts: dict[int, int]
    d: int | None
    A_d: int

    def total(self) -> int:
        return sum(self.counts.values())


def parse_code(text: str) -> BinaryCode:
    """Parse the code file format.

    Header line `binary-code n=<n> k=<k>`, then k lines of n characters
    in {0,1}; leftmost character is coordinate 0.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError("empty code file: expected 'binary-code n=<n> k=<k>' header")
    head = lines[0].split()
    if head[0] != "binary-code":
        raise ValueError(f"malformed header {lines[0]!r}: expected 'binary-code n=<n> k=<k>'")
    kv = dict(p.split("=", 1) for p in head[1:] if "=" in p)
    try:
        n, k = int(kv["n"]), int(kv["k"])
    except (KeyError, ValueError):
        raise ValueError(f"malformed header {lines[0]!r}: missing or non-integer n=/k=") from None
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"expected {k} generator rows, found {len(body)}")
    rows = []
    for i, ln in enumerate(body):
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise ValueError(f"row {i} is not {n} characters of 0/1: {ln!r}")
        rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
    return BinaryCode(n, tuple(rows))


def format_code(c: BinaryCode) -> str:
    return "\n".join([f"binary-code n={c.n} k={c.k}", *c.row_strings()]) + "\n"


def is_self_orthogonal(c: BinaryCode) -> bool:
    """True iff G * G^T = 0 over GF(2).

    By bilinearity this is equivalent to every pair of codewords having
    even intersection.  The diagonal is included: each row must have
    even weight.
    """
    g = c.generator
    for i in range(c.k):
        for j in range(i, c.k):
            if _popcount(g[i] & g[j]) % 2:
                return False
    # C subset of its dual forces k <= n - k.
    assert 2 * c.k <= c.n, "self-orthogonal code with k > n/2 should be impossible"
    return True


def weight_distribution(c: BinaryCode) -> WeightDistribution:
    """Exact counts by full enumeration of all 2^k codewords."""
    if c.k > MAX_DIMENSION:
        raise ValueError(f"k={c.k} too large to enumerate (cap {MAX_DIMENSION})")
    counts: dict[int, int] = {}
    for w in c.codewords():
        wt = _popcount(w)
        counts[wt] = counts.get(wt, 0) + 1
    nonzero = sorted(wt for wt in counts if wt > 0)
    d = nonzero[0] if nonzero else None
    return WeightDistribution(counts=counts, d=d, A_d=counts[d] if d is not None else 0)


def codewords_by_weight(c: BinaryCode, max_weight: int) -> dict[int, list[int]]:
    """Codewords grouped by weight, for weights <= max_weight."""
    out: dict[int, list[int]] = {}
    for w in c.codewords():
        wt = _popcount(w)
        if wt <= max_weight:
            out.setdefault(wt, []).append(w)
    for ws in out.values():
        ws.sort()
    return out


def row_space(n: int, words) -> BinaryCode:
    """The code spanned by arbitrary words (reduced to an independent set)."""
    basis: list[int] = []
    for w in words:
        r = w
        for p in basis:
            if r & (p & -p):
                r ^= p
        if r:
            basis.append(r)
            basis.sort(key=lambda v: v & -v)
    return BinaryCode(n, tuple(basis))

"""Exact arithmetic in GF(2^m) with trace and self-dual bases.

Elements are m-bit integers whose binary digits are polynomial
coefficients over GF(2); arithmetic is done modulo an irreducible
polynomial of degree m.  All multiplication tables are precomputed at
construction time (m <= 8, so at most 256 x 256 entries), which makes
the enumeration workloads downstream constant-time per operation.

Default irreducible polynomials, one per degree (others may be passed
explicitly):

    m=1 : x + 1              -> 0b11        = 0x3
    m=2 : x^2 + x + 1        -> 0b111       = 0x7
    m=3 : x^3 + x + 1        -> 0b1011      = 0xb
    m=4 : x^4 + x + 1        -> 0b10011     = 0x13
    m=5 : x^5 + x^2 + 1      -> 0b100101    = 0x25
    m=6 : x^6+x^4+x^3+x+1    -> 0b1011011   = 0x5b
    m=7 : x^7 + x^3 + 1      -> 0b10001001  = 0x89
    m=8 : x^8+x^4+x^3+x^2+1  -> 0b100011101 = 0x11d

A self-dual basis {a_1..a_m} satisfies Tr(a_i * a_j) = 1 iff i == j.
Expansion of a field element in such a basis turns the trace bilinear
form into the plain binary dot product, which is what makes code
concatenation through it preserve self-orthogonality.
"""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass

DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
    7: 0b10001001,
    8: 0b100011101,
}

MAX_DEGREE = 8


class SelfDualSearchError(RuntimeError):
    """Raised when the seeded basis search exhausts its restart budget.

    Self-dual bases exist for every GF(2^m); hitting this is an
    internal failure, not a property of the input.
    """


def _polymul_mod(a: int, b: int, modulus: int, m: int) -> int:
    """Carry-less product of a and b reduced mod `modulus` (degree m)."""
    p = 0
    while b:
        if b & 1:
            p ^= a
        a <<= 1
        if a >> m:
            a ^= modulus
        b >>= 1
    return p


def _is_irreducible(modulus: int, m: int) -> bool:
    """Exhaustive factor test: no divisor of degree 1..m//2."""
    if modulus >> m != 1:
        return False
    for d in range(1, m // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if _polyrem(modulus, f) == 0:
                return False
    return True


def _polyrem(a: int, b: int) -> int:
    """Remainder of polynomial division of a by b over GF(2)."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


class FieldTable:
    """GF(2^m) with all arithmetic precomputed, 1 <= m <= 8.

    Construction validates that the modulus is irreducible (exhaustive
    factor test) and that the nonzero elements form a cyclic group of
    order 2^m - 1 (verified by finding a generator).  Instances are
    immutable after construction and safe to share across workers.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree m={m} out of range 1..{MAX_DEGREE}")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if not _is_irreducible(modulus, m):
            raise ValueError(f"modulus {modulus:#x} is not an irreducible polynomial of degree {m}")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m

        q = self.order
        self._mul = [[_polymul_mod(a, b, modulus, m) for b in range(q)] for a in range(q)]

        # trace: Tr(a) = a + a^2 + ... + a^(2^(m-1)), always 0 or 1
        self._trace = []
        for a in range(q):
            t, x = 0, a
            for _ in range(m):
                t ^= x
                x = self._mul[x][x]
            self._trace.append(t)
        if any(t not in (0, 1) for t in self._trace):
            raise AssertionError("trace left the prime field; modulus validation is broken")

        self.generator = self._find_generator()

        # log/exp tables off the verified generator, for inverses
        self._exp = [0] * (2 * q)
        self._log = [0] * q
        v = 1
        for i in range(q - 1):
            self._exp[i] = v
            self._log[v] = i
            v = self._mul[v][self.generator]
        for i in range(q - 1, 2 * q):
            self._exp[i] = self._exp[i - (q - 1)]

    def _find_generator(self) -> int:
        """Smallest element of multiplicative order 2^m - 1."""
        target = self.order - 1
        for g in range(1, self.order):
            x, k = g, 1
            while x != 1:
                x = self._mul[x][g]
                k += 1
                if k > target:
                    break
            if k == target:
                return g
        raise ValueError(
            f"no generator of order {target}; multiplicative group is broken "
            f"(modulus {self.modulus:#x})"
        )

    def mul(self, a: int, b: int) -> int:
        """Field product; commutative, associative, distributes over XOR."""
        return self._mul[a][b]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def trace(self, a: int) -> int:
        """Tr(a) = a + a^2 + ... + a^(2^(m-1)) in {0, 1}."""
        return self._trace[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^m)")
        return self._exp[(self.order - 1) - self._log[a]]

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            e >>= 1
        return r

    def sqrt(self, a: int) -> int:
        """Unique square root in characteristic 2: a^(2^(m-1))."""
        return self.pow(a, 1 << (self.m - 1))

    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldTable) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldTable(m={self.m}, modulus={self.modulus:#x})"


@dataclass(frozen=True)
class SelfDualBasis:
    """Basis a_1..a_m of GF(2^m) over GF(2) with trace-Gram matrix = identity."""

    field: FieldTable
    basis: tuple[int, ...]
    seed: int | None = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        f = self.field
        if len(self.basis) != f.m:
            raise ValueError(f"basis has {len(self.basis)} elements, field degree is {f.m}")
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                want = 1 if i == j else 0
                if f.trace(f.mul(a, b)) != want:
                    raise ValueError(
                        f"trace-Gram condition fails at ({i},{j}): "
                        f"Tr({a:#x}*{b:#x}) != {want}"
                    )
        # Gram = identity already forces linear independence: a dependency
        # sum a_i = 0 would contradict Tr(a_i * a_i) = 1 against the rest.

    @property
    def m(self) -> int:
        return self.field.m

    def expand(self, a: int) -> tuple[int, ...]:
        """Coordinates (c_1..c_m) of a, so that a = sum c_i * a_i.

        Self-duality makes this a trace projection: c_i = Tr(a * a_i).
        The map is GF(2)-linear, bijective, and carries the trace form
        to the binary dot product:
        dot(expand(a), expand(b)) mod 2 == Tr(a*b).
        """
        f = self.field
        return tuple(f.trace(f.mul(a, ai)) for ai in self.basis)

    def combine(self, bits) -> int:
        """Inverse of expand: sum of basis elements selected by bits."""
        x = 0
        for c, ai in zip(bits, self.basis):
            if c:
                x ^= ai
        return x


def find_self_dual_basis(
    f: FieldTable, seed: int = 0, budget: int = 10_000
) -> SelfDualBasis:
    """Find a self-dual basis of GF(2^m) over GF(2).

    m <= 3 is solved by exhaustive scan over ordered tuples (first hit in
    lexicographic order, so the result is a fixed constant per field).
    Larger m uses a seeded greedy search with random restarts: extend a
    partial orthonormal set by an element drawn uniformly from the valid
    candidates; restart when the candidate set is empty.  Each attempt
    is cheap (candidates are filtered from at most 256 elements) and the
    success rate per restart is high, so the budget is never reached in
    practice for m <= 8.
    """
    m = f.m
    if m <= 3:
        for basis in _ordered_tuples(f, m):
            if _gram_is_identity(f, basis):
                return SelfDualBasis(f, basis, seed=None)
        raise SelfDualSearchError(f"exhaustive scan found no self-dual basis for m={m}")

    rng = random.Random(seed)
    for _ in range(budget):
        basis: list[int] = []
        while len(basis) < m:
            candidates = [
                x
                for x in range(1, f.order)
                if f.trace(x) == 1 and all(f.trace(f.mul(x, b)) == 0 for b in basis)
            ]
            if not candidates:
                break
            basis.append(candidates[rng.randrange(len(candidates))])
        if len(basis) == m and _gram_is_identity(f, tuple(basis)):
            return SelfDualBasis(f, tuple(basis), seed=seed)
    raise SelfDualSearchError(
        f"no self-dual basis found for m={m} within {budget} restarts (seed {seed}); "
        "this is an internal failure: such bases exist for every binary field"
    )


def _ordered_tuples(f: FieldTable, m: int):
    """All ordered m-tuples of nonzero elements, lexicographic."""
    def rec(prefix):
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for x in range(1, f.order):
            yield from rec(prefix + [x])

    yield from rec([])


def _gram_is_identity(f: FieldTable, basis: tuple[int, ...]) -> bool:
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if f.trace(f.mul(a, b)) != (1 if i == j else 0):
                return False
    return True


# --- text formats -------------------------------------------------------
#
# field line:  field m=<m> modulus=<hex>
# basis file:  optional field line, then one element per line in hex;
#              '#' starts a comment.

def format_field_spec(f: FieldTable) -> str:
    return f"field m={f.m} modulus={f.modulus:#x}"


def parse_field_spec(line: str) -> FieldTable:
    parts = line.split()
    if not parts or parts[0] != "field":
        raise ValueError(f"expected 'field m=<m> modulus=<hex>', got {line!r}")
    kv = dict(p.split("=", 1) for p in parts[1:] if "=" in p)
    if "m" not in kv or "modulus" not in kv:
        raise ValueError(f"field line missing m= or modulus=: {line!r}")
    return FieldTable(int(kv["m"]), int(kv["modulus"], 16))


def format_basis(b: SelfDualBasis) -> str:
    lines = [format_field_spec(b.field)]
    if b.seed is not None:
        lines.append(f"# seed={b.seed}")
    lines += [f"{a:#x}" for a in b.basis]
    return "\n".join(lines) + "\n"


def parse_basis(text: str, f: FieldTable | None = None) -> SelfDualBasis:
    elements = []
    seed = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if "seed=" in line:
                seed = int(line.split("seed=", 1)[1])
            continue
        if line.startswith("field"):
            f = parse_field_spec(line)
            continue
        elements.append(int(line, 16))
    if f is None:
        raise ValueError("basis text has no field line and no field was supplied")
    return SelfDualBasis(f, tuple(elements), seed=seed)

"""Concatenation of a GF(2^m) outer code with a binary inner code.

Each outer symbol is expanded to m bits through a self-dual basis and
then encoded with the inner generator; outer coordinate j lands in bit
block [j*n0, (j+1)*n0).  With a self-dual basis the expansion is an
isometry between the trace form and the binary dot product, so a
Euclidean self-orthogonal outer code concatenated with an inner code
whose generator rows are orthonormal (G0 * G0^T = I) -- or with an
inner code that is itself self-orthogonal -- yields a self-orthogonal
binary code.  Both routes are checked directly by the callers/tests,
never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binary_codes import BinaryCode
from .finite_field import SelfDualBasis
from .outer_codes import GrsCode


@dataclass(frozen=True)
class ConcatSpec:
    """Outer GRS over GF(2^m), self-dual basis for m, inner [n0, m] code."""

    outer: GrsCode
    basis: SelfDualBasis
    inner: BinaryCode

    def __post_init__(self):
        m = self.outer.field.m
        if self.basis.field != self.outer.field:
            raise ValueError(
                f"basis field {self.basis.field!r} does not match outer field {self.outer.field!r}"
            )
        if self.inner.k != m:
            raise ValueError(f"inner dimension {self.inner.k} must equal field degree {m}")


def identity_inner(m: int) -> BinaryCode:
    """The trivial [m, m, 1] inner code (plain basis expansion)."""
    return BinaryCode(m, tuple(1 << i for i in range(m)))


def binary_image(outer: GrsCode, basis: SelfDualBasis) -> BinaryCode:
    """GF(2)-linear binary image of the outer code, length m*N, dim m*K."""
    return concatenate(ConcatSpec(outer, basis, identity_inner(outer.field.m)))


def concatenate(spec: ConcatSpec) -> BinaryCode:
    """Build the [n0*N, m*K] concatenated binary code.

    The binary generator expands each outer generator row scaled by
    each basis element: the outer code as a GF(2)-space is spanned by
    {a_i * row_t}, and expansion plus inner encoding is GF(2)-linear.
    """
    outer, basis, inner = spec.outer, spec.basis, spec.inner
    f = outer.field
    n0 = inner.n
    n = n0 * outer.N
    if n > 32:
        raise ValueError(f"concatenated length {n} exceeds the 32-bit row cap")
    rows = []
    for orow in outer.generator_rows():
        for a in basis.basis:
            scaled = [f.mul(a, x) for x in orow]
            rows.append(_encode_symbols(scaled, basis, inner))
    return BinaryCode(n, tuple(rows))


def _encode_symbols(symbols, basis: SelfDualBasis, inner: BinaryCode) -> int:
    """Expand each symbol to m bits, inner-encode, pack into bit blocks."""
    n0 = inner.n
    word = 0
    for j, sym in enumerate(symbols):
        bits = basis.expand(sym)
        msg = sum(1 << i for i, b in enumerate(bits) if b)
        word |= inner.encode(msg) << (j * n0)
    return word

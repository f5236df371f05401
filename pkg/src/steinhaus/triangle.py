"""Steinhaus triangles: a sequence together with all its iterated differences.

``triangle_weight`` streams rows with in-place shift-XOR and popcount and never
materializes the triangle; it is the hot loop the enumeration engine relies on.
``build`` exists for rendering and tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSeq


@dataclass(frozen=True)
class Triangle:
    """Rows x, dx, d2x, ... of lengths n, n-1, ..., 1."""

    rows: tuple[BitSeq, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def weight(self) -> int:
        return sum(row.weight for row in self.rows)


def build(x: BitSeq) -> Triangle:
    """Materialize all n rows of the triangle generated by x."""
    if x.n == 0:
        raise ValueError("cannot build a triangle from the empty sequence")
    rows = [x]
    while rows[-1].n > 1:
        rows.append(rows[-1].derivative())
    return Triangle(tuple(rows))


def triangle_weight(x: BitSeq) -> int:
    """Total number of ones across all rows of the triangle generated by x."""
    if x.n == 0:
        raise ValueError("empty sequence generates no triangle")
    bits = x.bits
    m = x.n
    total = 0
    while m:
        total += bits.bit_count()
        m -= 1
        bits = (bits ^ bits >> 1) & (1 << m) - 1
    return total


def subtriangle_generator(x: BitSeq, j: int, start: int, k: int) -> BitSeq:
    """The k consecutive entries of row j beginning at ``start``.

    That word generates the size-k subtriangle sitting inside the triangle
    of x.
    """
    if not 0 <= j <= x.n - 1:
        raise IndexError(f"row {j} out of range for length {x.n}")
    if k < 1:
        raise IndexError("subtriangle size must be at least 1")
    if start < 0 or start + k > x.n - j:
        raise IndexError(f"entries [{start}, {start + k}) out of range for row {j}")
    row = x.derivative_k(j)
    return BitSeq(k, row.bits >> start & (1 << k) - 1)


def s3(x: BitSeq) -> int:
    """Combined weight of the first three rows."""
    if x.n < 3:
        raise ValueError("first-three-rows weight needs length at least 3")
    d1 = x.derivative()
    d2 = d1.derivative()
    return x.weight + d1.weight + d2.weight


def render(x: BitSeq, zero: str = ".") -> str:
    """ASCII pyramid, one row per line, centered; '1' for ones, ``zero`` for zeros."""
    lines = []
    for i, row in enumerate(build(x).rows):
        cells = " ".join("1" if row.bit(j) else zero for j in range(row.n))
        lines.append(" " * i + cells)
    return "\n".join(lines)

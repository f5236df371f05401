"""The six-element symmetry group acting on triangle generators.

``rot_r`` and ``rot_l`` are the 120- and 240-degree rotations of the triangle
(read off the right side top-down, resp. the left side bottom-up), ``invert_i``
the mirror reflection (sequence reversal). Triangle weight is invariant under
all six compositions, which the enumeration engine exploits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSeq


def rot_r(x: BitSeq) -> BitSeq:
    """Entry j is the last entry of row j: stream rows, harvest their top bits."""
    if x.n == 0:
        raise ValueError("empty sequence has no rotation")
    bits = x.bits
    out = 0
    m = x.n
    for j in range(x.n):
        out |= (bits >> m - 1 & 1) << j
        m -= 1
        bits = (bits ^ bits >> 1) & (1 << m) - 1
    return BitSeq(x.n, out)


def rot_l(x: BitSeq) -> BitSeq:
    """Entry j is the first entry of row n-1-j; inverse of ``rot_r``."""
    if x.n == 0:
        raise ValueError("empty sequence has no rotation")
    bits = x.bits
    out = 0
    m = x.n
    for k in range(x.n):
        out |= (bits & 1) << x.n - 1 - k
        m -= 1
        bits = (bits ^ bits >> 1) & (1 << m) - 1
    return BitSeq(x.n, out)


def invert_i(x: BitSeq) -> BitSeq:
    """Reverse the sequence (mirror the triangle)."""
    out = 0
    for j in range(x.n):
        out |= (x.bits >> j & 1) << x.n - 1 - j
    return BitSeq(x.n, out)


@dataclass(frozen=True)
class Orbit:
    """Equivalence class of a generator under the six symmetries.

    ``members`` is sorted in text order, so ``members[0]`` is the canonical
    representative.
    """

    members: tuple[BitSeq, ...]

    @property
    def canonical(self) -> BitSeq:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)


def orbit(x: BitSeq) -> Orbit:
    """The set {x, r(x), l(x), i(x), r(i(x)), l(i(x))}, deduplicated."""
    if x.n == 0:
        raise ValueError("empty sequence has no orbit")
    ix = invert_i(x)
    members = {x, rot_r(x), rot_l(x), ix, rot_r(ix), rot_l(ix)}
    return Orbit(tuple(sorted(members, key=str)))


def canonical(x: BitSeq) -> BitSeq:
    """Lexicographically least orbit member (comparing the '0'/'1' text)."""
    return orbit(x).canonical

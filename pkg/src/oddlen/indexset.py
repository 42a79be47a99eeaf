"""Subsets of generator labels [0, n-1]: components, m, compression, transforms.

An index set lives in an ambient [0, n-1] and is stored as a bitmask. Its
maximal runs of consecutive members are the connected components; the run
containing 0 (possibly empty) plays a distinguished role and is tracked
separately from the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .zpoly import IntPoly, q_multinomial


@dataclass(frozen=True, order=True)
class IndexSet:
    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient size must be positive")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError("members out of range")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def of(n: int, members: Iterator[int] | list[int] | tuple[int, ...] | set[int]) -> "IndexSet":
        mask = 0
        for i in members:
            if not 0 <= i < n:
                raise ValueError(f"index {i} outside [0, {n - 1}]")
            mask |= 1 << i
        return IndexSet(n, mask)

    @staticmethod
    def full(n: int) -> "IndexSet":
        return IndexSet(n, (1 << n) - 1)

    @staticmethod
    def from_text(n: int, text: str) -> "IndexSet":
        """Parse '0,1,3' or interval sugar '0-3,6-9'; '' is the empty set."""
        text = text.strip()
        if not text:
            return IndexSet(n, 0)
        members: list[int] = []
        for piece in text.split(","):
            piece = piece.strip()
            if not piece:
                raise ValueError("empty item in index set text")
            if "-" in piece:
                lo_s, hi_s = piece.split("-", 1)
                lo, hi = int(lo_s), int(hi_s)
                if lo > hi:
                    raise ValueError(f"bad interval {piece!r}")
                members.extend(range(lo, hi + 1))
            else:
                members.append(int(piece))
        return IndexSet.of(n, members)

    # -- basic set operations --------------------------------------------------

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.mask >> i & 1)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def add(self, i: int) -> "IndexSet":
        if not 0 <= i < self.n:
            raise ValueError("index out of range")
        return IndexSet(self.n, self.mask | 1 << i)

    def remove(self, i: int) -> "IndexSet":
        return IndexSet(self.n, self.mask & ~(1 << i))

    def union(self, other: "IndexSet") -> "IndexSet":
        if other.n != self.n:
            raise ValueError("ambient size mismatch")
        return IndexSet(self.n, self.mask | other.mask)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.members())


@dataclass(frozen=True)
class ComponentDecomp:
    """Maximal-run decomposition; intervals are inclusive (lo, hi) pairs.

    zero_component is the run starting at 0, or None when 0 is absent.
    """

    zero_component: tuple[int, int] | None
    others: tuple[tuple[int, int], ...]

    @property
    def zero_size(self) -> int:
        if self.zero_component is None:
            return 0
        lo, hi = self.zero_component
        return hi - lo + 1

    @property
    def other_sizes(self) -> tuple[int, ...]:
        return tuple(hi - lo + 1 for lo, hi in self.others)

    @property
    def all_sizes(self) -> tuple[int, ...]:
        """Sizes of every component, the zero run first (0 when empty)."""
        return (self.zero_size,) + self.other_sizes


def components(I: IndexSet) -> ComponentDecomp:
    runs: list[tuple[int, int]] = []
    start = None
    for i in range(I.n + 1):
        inside = i < I.n and i in I
        if inside and start is None:
            start = i
        elif not inside and start is not None:
            runs.append((start, i - 1))
            start = None
    if runs and runs[0][0] == 0:
        return ComponentDecomp(runs[0], tuple(runs[1:]))
    return ComponentDecomp(None, tuple(runs))


def m_of(I: IndexSet) -> int:
    """m = sum over all components (the zero one included) of floor((size+1)/2)."""
    return sum((z + 1) // 2 for z in components(I).all_sizes)


def C_poly(I: IndexSet) -> IntPoly:
    """The x^2-multinomial over the component sizes (zero component included)."""
    parts = [(z + 1) // 2 for z in components(I).all_sizes]
    return q_multinomial(sum(parts), parts, base_exponent=2)


def compress(I: IndexSet) -> IndexSet:
    """Canonical compressed set with the same zero-size and component m-terms.

    With b_0 = |I_0| and b_k = |I_0| + sum_{i<=k} 2*floor((|I_i|+1)/2), the
    result is [0, b_0-1] u [b_0+1, b_1-1] u ... u [b_{s-1}+1, b_s-1].
    """
    decomp = components(I)
    mask = (1 << decomp.zero_size) - 1
    b = decomp.zero_size
    for z in decomp.other_sizes:
        nxt = b + 2 * ((z + 1) // 2)
        for i in range(b + 1, nxt):
            mask |= 1 << i
        b = nxt
    out = IndexSet(I.n, mask)
    assert m_of(out) == m_of(I)
    return out


def is_compressed(I: IndexSet) -> bool:
    """True iff I is a fixed point of compress."""
    return compress(I) == I


def tilde(I: IndexSet) -> IndexSet:
    """I itself when 0 is absent; otherwise (I minus {0}) union {1}."""
    if 0 not in I:
        return I
    if I.n < 2:
        raise ValueError("no label 1 available in ambient [0, 0]")
    return I.remove(0).add(1)


def noncyclotomic_condition(I: IndexSet) -> bool:
    """True iff n is even and {0} plus every odd label below n lies in I.

    Exactly these proper I make the type D quotient polynomial fail to be a
    product of cyclotomic polynomials.
    """
    if I.is_full:
        raise ValueError("condition defined for proper subsets only")
    n = I.n
    if n % 2:
        return False
    if 0 not in I:
        return False
    return all(i in I for i in range(1, n, 2))

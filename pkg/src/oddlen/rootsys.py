"""Root systems for the three classical families, with the length statistics
computed straight from the definitions.

This module is the ground-truth oracle: heights come from an exact linear
solve against the simple-root basis, and lengths from counting positive
roots sent negative, with no combinatorial shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .sperm import SignedPerm


def _e(i: int, n: int) -> tuple[int, ...]:
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def _add(a: tuple[int, ...], b: tuple[int, ...], sb: int) -> tuple[int, ...]:
    return tuple(x + sb * y for x, y in zip(a, b))


def _solve_height(simples: list[tuple[int, ...]], root: tuple[int, ...]) -> int:
    """Expand root over the simple roots; coefficients must be nonnegative ints."""
    n, k = len(root), len(simples)
    rows = [[Fraction(simples[j][i]) for j in range(k)] + [Fraction(root[i])] for i in range(n)]
    pivots: list[int] = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, n) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = rows[r][c]
        rows[r] = [v / scale for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    coeffs = [Fraction(0)] * k
    for row_idx, c in enumerate(pivots):
        coeffs[c] = rows[row_idx][k]
    for i in range(r, n):
        if rows[i][k]:
            raise ValueError("root outside the span of the simple roots")
    total = 0
    for v in coeffs:
        if v.denominator != 1 or v < 0:
            raise ValueError("non-integral or negative simple-root coefficient")
        total += int(v)
    return total


@dataclass(frozen=True, eq=False)
class RootSystem:
    family: str
    n: int
    positive_roots: tuple[tuple[int, ...], ...]
    heights: tuple[int, ...]
    simple_roots: tuple[tuple[int, tuple[int, ...]], ...]  # (label, coords)
    _pos_set: frozenset[tuple[int, ...]] = field(repr=False)
    _odd_idx: tuple[int, ...] = field(repr=False)


def build_root_system(family: str, n: int) -> RootSystem:
    if n < 1:
        raise ValueError("n must be positive")
    roots: list[tuple[int, ...]] = []
    simples: list[tuple[int, tuple[int, ...]]] = []
    if family == "A":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(_add(_e(j, n), _e(i, n), -1))
        simples = [(i, _add(_e(i + 1, n), _e(i, n), -1)) for i in range(1, n)]
    elif family == "B":
        roots = [_e(i, n) for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(_add(_e(j, n), _e(i, n), -1))
                roots.append(_add(_e(i, n), _e(j, n), 1))
        simples = [(0, _e(1, n))] + [
            (i, _add(_e(i + 1, n), _e(i, n), -1)) for i in range(1, n)
        ]
    elif family == "D":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(_add(_e(j, n), _e(i, n), -1))
                roots.append(_add(_e(i, n), _e(j, n), 1))
        if n >= 2:
            simples = [(0, _add(_e(1, n), _e(2, n), 1))] + [
                (i, _add(_e(i + 1, n), _e(i, n), -1)) for i in range(1, n)
            ]
    else:
        raise ValueError(f"unknown family {family!r}")
    basis = [coords for _, coords in simples]
    heights = tuple(_solve_height(basis, r) for r in roots)
    return RootSystem(
        family=family,
        n=n,
        positive_roots=tuple(roots),
        heights=heights,
        simple_roots=tuple(simples),
        _pos_set=frozenset(roots),
        _odd_idx=tuple(k for k, h in enumerate(heights) if h % 2 == 1),
    )


def _check_compat(rs: RootSystem, sigma: SignedPerm) -> None:
    if sigma.n != rs.n:
        raise ValueError("degree mismatch")
    if not sigma.in_family(rs.family):
        raise ValueError("element outside the family's group")


def _image(sigma: SignedPerm, root: tuple[int, ...], n: int) -> tuple[int, ...]:
    # w(e_i) = sgn(sigma(i)) e_{|sigma(i)|}, extended linearly.
    out = [0] * n
    for i, c in enumerate(root):
        if c:
            v = sigma.images[i]
            if v > 0:
                out[v - 1] += c
            else:
                out[-v - 1] -= c
    return tuple(out)


def length_via_roots(rs: RootSystem, sigma: SignedPerm) -> int:
    """Count of positive roots sent to negative roots."""
    _check_compat(rs, sigma)
    pos, n = rs._pos_set, rs.n
    count = 0
    for root in rs.positive_roots:
        img = _image(sigma, root, n)
        if tuple(-c for c in img) in pos:
            count += 1
    return count


def odd_length_via_roots(rs: RootSystem, sigma: SignedPerm) -> int:
    """Count of odd-height positive roots sent to negative roots."""
    _check_compat(rs, sigma)
    pos, n = rs._pos_set, rs.n
    count = 0
    roots = rs.positive_roots
    for k in rs._odd_idx:
        img = _image(sigma, roots[k], n)
        if tuple(-c for c in img) in pos:
            count += 1
    return count


def odd_root_count(family: str, n: int) -> int:
    """Number of odd-height positive roots (an upper bound for odd length)."""
    return len(build_root_system(family, n)._odd_idx)

"""Exact polynomials over the integers, q-analogues, and cyclotomic tests.

Coefficients are Python ints (arbitrary precision, so overflow is impossible
by construction), stored densely in ascending degree with no trailing zeros.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class IntPoly:
    """Immutable dense integer polynomial.

    >>> p = IntPoly([1, 1]) * IntPoly([1, -1])
    >>> p.coeffs
    (1, 0, -1)
    >>> str(p)
    '1 - x^2'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: tuple[int, ...] = _trim(tuple(int(c) for c in coeffs))

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly((c,))

    @staticmethod
    def monomial(c: int, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return IntPoly((0,) * k + (c,))

    # -- inspection --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient self / other in Z[x]; raises if the division is inexact."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return IntPoly()
        dp, dq = self.degree, other.degree
        if dp < dq:
            raise ValueError("inexact polynomial division")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        out = [0] * (dp - dq + 1)
        for k in range(dp - dq, -1, -1):
            c = rem[k + dq]
            if c % lead:
                raise ValueError("inexact polynomial division")
            f = c // lead
            out[k] = f
            if f:
                for i, qc in enumerate(other.coeffs):
                    rem[k + i] -= f * qc
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPoly(out)

    def subs_x_power(self, b: int) -> "IntPoly":
        """Substitute x -> x^b."""
        if b < 1:
            raise ValueError("power must be >= 1")
        if self.is_zero:
            return self
        out = [0] * (self.degree * b + 1)
        for k, c in enumerate(self.coeffs):
            out[k * b] = c
        return IntPoly(out)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        """Ascending text form, e.g. '1 - x^2 + 2x^5'."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                body = xs if mag == 1 else f"{mag}{xs}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def q_int(k: int) -> IntPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    if k < 0:
        raise ValueError("negative q-integer")
    return IntPoly((1,) * k)


def q_factorial(k: int) -> IntPoly:
    out = ONE
    for j in range(2, k + 1):
        out = out * q_int(j)
    return out


def q_multinomial(total: int, parts: Sequence[int], base_exponent: int = 1) -> IntPoly:
    """[total; parts]_q at q = x^base_exponent, by exact division of q-factorials.

    >>> q_multinomial(2, [1, 1], 2).coeffs
    (1, 0, 1)
    >>> q_multinomial(3, [1, 2], 1).coeffs
    (1, 1, 1)
    """
    if total < 0 or any(p < 0 for p in parts):
        raise ValueError("negative multinomial argument")
    if sum(parts) != total:
        raise ValueError("parts do not sum to total")
    out = q_factorial(total)
    for p in parts:
        out = out.exact_div(q_factorial(p))
    assert all(c >= 0 for c in out.coeffs)
    return out.subs_x_power(base_exponent) if base_exponent != 1 else out


def alt_product(lo: int, hi: int, square: bool = False) -> IntPoly:
    """prod_{j=lo}^{hi} (1 + (-1)^(j-1) x^floor(j/2)); empty product = 1.

    >>> alt_product(2, 3).coeffs
    (1, 0, -1)
    >>> alt_product(6, 4).coeffs
    (1,)
    """
    out = ONE
    for j in range(lo, hi + 1):
        out = out * (ONE + IntPoly.monomial(1 if j % 2 else -1, j // 2))
    return out * out if square else out


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """k-th cyclotomic polynomial via x^k - 1 = prod_{d|k} Phi_d.

    >>> str(cyclotomic(6))
    '1 - x + x^2'
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    out = IntPoly.monomial(1, k) - ONE
    for d in range(1, k):
        if k % d == 0:
            out = out.exact_div(cyclotomic(d))
    return out


def euler_phi(k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    out, rest, p = 1, k, 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out *= (p - 1) * p ** (e - 1)
        p += 1
    if rest > 1:
        out *= rest - 1
    return out


def cyclotomic_factors(p: IntPoly) -> list[int] | None:
    """Multiset of k with p = +-prod Phi_k, or None when p is no such product.

    The sign unit makes this equivalent to every root of p being a root of
    unity.  Trial division ascends k up to max(6, 2 deg(p)^2); any Phi_k
    dividing the residual satisfies phi(k) <= its degree, which justifies
    skipping larger k.
    """
    if p.is_zero:
        return None
    if p.coeffs[-1] < 0:
        p = -p
    if p.degree == 0:
        return [] if p.coeffs == (1,) else None
    if p.coeffs[-1] != 1 or abs(p.coeffs[0]) != 1:
        return None
    factors: list[int] = []
    residual = p
    for k in range(1, max(6, 2 * p.degree * p.degree) + 1):
        if residual == ONE:
            break
        if k > 6 and euler_phi(k) > residual.degree:
            continue
        phi_k = cyclotomic(k)
        while True:
            try:
                residual = residual.exact_div(phi_k)
            except ValueError:
                break
            factors.append(k)
    return factors if residual == ONE else None


def is_cyclotomic_product(p: IntPoly) -> bool:
    """True iff p is, up to sign, a (possibly empty) product of cyclotomics.

    >>> is_cyclotomic_product(IntPoly([1, 0, 2, 0, 1]))
    True
    >>> is_cyclotomic_product(IntPoly([1, 0, 3]))
    False
    """
    return cyclotomic_factors(p) is not None


def trinomial_cyclotomic(n: int, m: int) -> bool:
    """Closed criterion: x^n + 2x^m + 1 is a product of cyclotomics iff n = 2m."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return n == 2 * m

"""Sign-twisted generating functions over parabolic quotients.

Both computation routes live here: the closed product formulas and a
brute-force sweep over the full group.  The sweep buckets every element
by descent set once, so all 2^n quotients of one group cost a single
enumeration plus a subset-sum (zeta) transform over the buckets.

The inner loop is vectorised with numpy.  For a block of absolute-value
rows P (one row per underlying permutation) and the family's sign masks,
every pair statistic is an integer matrix product:

    inv = G @ (pp - mm)^T + rowsum(pm + mm)
    nsp = G @ (mp - pm)^T + rowsum(pm + mm)

where G[r, (i, j)] = [P[r, i] > P[r, j]] over position pairs i < j and
pp/pm/mp/mm indicate the sign pattern of the pair under each mask.  The
products run in float32, which is exact here: every intermediate is an
integer well below 2**24.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, permutations
from math import factorial

import numpy as np

from .indexset import IndexSet, components, m_of, C_poly, tilde
from .rootsys import odd_root_count
from .sperm import FAMILIES, SignedPerm, descent_set, ell_and_odd, in_quotient, label_mask
from .zpoly import ONE, ZERO, IntPoly, alt_product, q_multinomial

BUDGET = {"A": 10, "B": 8, "D": 8}


class BudgetError(Exception):
    """Raised when a brute-force sweep would exceed the size budget."""


def _check_budget(family: str, n: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > BUDGET[family]:
        raise BudgetError(
            f"{family}_{n} exceeds the enumeration budget ({family} allows n <= {BUDGET[family]})"
        )


def resolve_workers(workers: int | None) -> int:
    """Worker count with the ODDLEN_WORKERS variable taking precedence."""
    env = os.environ.get("ODDLEN_WORKERS")
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ValueError("ODDLEN_WORKERS must be an integer") from exc
        if value < 1:
            raise ValueError("ODDLEN_WORKERS must be positive")
        return value
    if workers is None:
        return 1
    if workers < 1:
        raise ValueError("workers must be positive")
    return workers


def _sign_masks(family: str, n: int) -> np.ndarray:
    if family == "A":
        return np.zeros(1, dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    if family == "B":
        return masks
    bits = ((masks[:, None] >> np.arange(n)) & 1).sum(axis=1)
    return masks[bits % 2 == 0]


@dataclass
class _SweepPlan:
    """Precomputed mask tables for one family and rank."""

    family: str
    n: int
    masks: np.ndarray
    lmax: int
    pair_index: dict[tuple[int, int], int]
    w_len: np.ndarray        # (npairs, nmasks) pair weights for length
    c_len: np.ndarray        # (nmasks,) constant part of length
    w_odd: np.ndarray        # (nodd, nmasks) weights for odd length
    c_odd: np.ndarray        # (nmasks,) constant part of odd length
    odd_cols: np.ndarray     # indices of odd-distance pairs
    desc_a: np.ndarray       # (n-1, nmasks) g-coefficients per adjacent pair
    desc_b: np.ndarray       # (n-1, nmasks) constants per adjacent pair
    d0_a: np.ndarray | None  # g-coefficient for the extra descent bit
    d0_b: np.ndarray | None


def _build_plan(family: str, n: int) -> _SweepPlan:
    masks = _sign_masks(family, n)
    nmasks = masks.shape[0]
    neg = ((masks[:, None] >> np.arange(n)) & 1).astype(np.float32)  # (nmasks, n)
    pos = 1.0 - neg

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pair_index = {p: k for k, p in enumerate(pairs)}
    npairs = len(pairs)

    pp = np.empty((npairs, nmasks), dtype=np.float32)
    pm = np.empty_like(pp)
    mp = np.empty_like(pp)
    mm = np.empty_like(pp)
    for k, (i, j) in enumerate(pairs):
        pp[k] = pos[:, i] * pos[:, j]
        pm[k] = pos[:, i] * neg[:, j]
        mp[k] = neg[:, i] * pos[:, j]
        mm[k] = neg[:, i] * neg[:, j]

    if family == "A":
        w_inv = pp - mm
        c_pair = np.zeros((npairs, nmasks), dtype=np.float32)
        w_len = w_inv
        c_len = c_pair.sum(axis=0)
        w_odd_full = w_inv
        c_odd_pair = c_pair
    else:
        c_pair = pm + mm
        w_len = (pp - mm) + (mp - pm)
        c_len = 2.0 * c_pair.sum(axis=0)
        w_odd_full = (pp - mm) + (mp - pm)
        c_odd_pair = 2.0 * c_pair

    odd_cols = np.array([k for k, (i, j) in enumerate(pairs) if (j - i) % 2 == 1], dtype=np.int64)
    w_odd = w_odd_full[odd_cols]
    c_odd = c_odd_pair[odd_cols].sum(axis=0) if odd_cols.size else np.zeros(nmasks, dtype=np.float32)

    if family == "B":
        c_len = c_len + neg.sum(axis=1)
        c_odd = c_odd + neg[:, 0::2].sum(axis=1)

    desc_a = np.zeros((max(n - 1, 0), nmasks), dtype=np.float32)
    desc_b = np.zeros_like(desc_a)
    for k in range(n - 1):
        col = pair_index[(k, k + 1)]
        desc_a[k] = pp[col] - mm[col]
        desc_b[k] = pm[col] + mm[col]

    d0_a = d0_b = None
    if family == "B":
        d0_a = np.zeros(nmasks, dtype=np.float32)
        d0_b = neg[:, 0].copy()
    elif family == "D" and n >= 2:
        col = pair_index[(0, 1)]
        d0_a = mp[col] - pm[col]
        d0_b = pm[col] + mm[col]

    return _SweepPlan(
        family=family,
        n=n,
        masks=masks,
        lmax=odd_root_count(family, n),
        pair_index=pair_index,
        w_len=w_len,
        c_len=c_len,
        w_odd=w_odd,
        c_odd=c_odd,
        odd_cols=odd_cols,
        desc_a=desc_a,
        desc_b=desc_b,
        d0_a=d0_a,
        d0_b=d0_b,
    )


def _sweep_range(family: str, n: int, start: int, stop: int) -> np.ndarray:
    """Histogram (descent mask, length parity, odd length) over a slice
    of the underlying permutations, crossed with all sign masks."""
    plan = _build_plan(family, n)
    nmasks = plan.masks.shape[0]
    width = plan.lmax + 1
    counts = np.zeros((1 << n) * 2 * width, dtype=np.int64)

    pairs = sorted(plan.pair_index, key=plan.pair_index.get)
    left = np.array([i for i, _ in pairs], dtype=np.int64)
    right = np.array([j for _, j in pairs], dtype=np.int64)

    chunk = max(1, min(40320, (1 << 21) // max(nmasks, 1)))
    source = islice(permutations(range(1, n + 1)), start, stop)
    while True:
        block = list(islice(source, chunk))
        if not block:
            break
        P = np.array(block, dtype=np.int64)
        G = (P[:, left] > P[:, right]).astype(np.float32)

        length = G @ plan.w_len + plan.c_len
        odd = (G[:, plan.odd_cols] @ plan.w_odd + plan.c_odd).astype(np.int64)
        parity = length.astype(np.int64) & 1

        dmask = np.zeros((P.shape[0], nmasks), dtype=np.int64)
        for k in range(n - 1):
            col = plan.pair_index[(k, k + 1)]
            bit = G[:, col : col + 1] * plan.desc_a[k] + plan.desc_b[k]
            dmask |= bit.astype(np.int64) << (k + 1)
        if plan.d0_a is not None:
            col = plan.pair_index[(0, 1)] if n >= 2 else 0
            g0 = G[:, col : col + 1] if n >= 2 else np.zeros((P.shape[0], 1), dtype=np.float32)
            bit = g0 * plan.d0_a + plan.d0_b
            dmask |= bit.astype(np.int64)

        keys = ((dmask << 1) | parity) * width + odd
        counts += np.bincount(keys.ravel(), minlength=counts.size)
    return counts


@dataclass
class DescentTable:
    """All 2^n sign-twisted quotient polynomials of one group, stored as
    per-descent-set buckets with a lazy subset-sum transform."""

    family: str
    n: int
    buckets: dict[int, IntPoly]
    _zeta: list[IntPoly] | None = field(default=None, repr=False)

    def _zeta_table(self) -> list[IntPoly]:
        if self._zeta is None:
            table = [ZERO] * (1 << self.n)
            for mask, poly in self.buckets.items():
                table[mask] = poly
            for bit in range(self.n):
                step = 1 << bit
                for t in range(1 << self.n):
                    if t & step:
                        table[t] = table[t] + table[t ^ step]
            self._zeta = table
        return self._zeta

    def quotient_poly(self, index_set: IndexSet) -> IntPoly:
        """Sum of (-1)^length x^(odd length) over the minimal coset
        representatives whose descents avoid index_set."""
        if index_set.n != self.n:
            raise ValueError("index set rank does not match the table")
        labels = label_mask(self.family, self.n)
        if index_set.mask & ~labels:
            raise ValueError("index set contains labels outside the generator range")
        return self._zeta_table()[labels & ~index_set.mask]

    def group_poly(self) -> IntPoly:
        return self.quotient_poly(IndexSet(self.n, 0))


def brute_table(family: str, n: int, workers: int | None = None) -> DescentTable:
    """Enumerate the whole group once, bucketing by descent set."""
    _check_budget(family, n)
    nperms = factorial(n)
    nworkers = min(resolve_workers(workers), nperms)
    if nworkers <= 1 or nperms < 50000:
        counts = _sweep_range(family, n, 0, nperms)
    else:
        bounds = [nperms * k // nworkers for k in range(nworkers + 1)]
        jobs = [(family, n, bounds[k], bounds[k + 1]) for k in range(nworkers)]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            parts = list(pool.map(_sweep_worker, jobs))
        counts = np.sum(parts, axis=0)

    width = odd_root_count(family, n) + 1
    table = counts.reshape(1 << n, 2, width)
    buckets: dict[int, IntPoly] = {}
    for mask in range(1 << n):
        even = table[mask, 0]
        oddp = table[mask, 1]
        if not even.any() and not oddp.any():
            continue
        buckets[mask] = IntPoly(int(e) - int(o) for e, o in zip(even, oddp))
    return DescentTable(family, n, buckets)


def _sweep_worker(job: tuple[str, int, int, int]) -> np.ndarray:
    return _sweep_range(*job)


def brute_quotient(family: str, n: int, index_set: IndexSet, workers: int | None = None) -> IntPoly:
    return brute_table(family, n, workers).quotient_poly(index_set)


def brute_filtered(
    family: str, n: int, index_set: IndexSet, constraint: tuple[int, int]
) -> IntPoly:
    """Quotient sum restricted to elements with a pinned entry.

    constraint = (b, v) keeps only elements mapping b to v, where b is a
    position in [1, n] and v is n or -n.
    """
    _check_budget(family, n)
    b, v = constraint
    if not 1 <= b <= n:
        raise ValueError("constraint position out of range")
    if abs(v) != n:
        raise ValueError("constraint value must be n or -n")
    if index_set.n != n:
        raise ValueError("index set rank mismatch")
    if index_set.mask & ~label_mask(family, n):
        raise ValueError("index set contains labels outside the generator range")
    if family == "A" and v < 0:
        return ZERO

    rest = [p for p in range(n) if p != b - 1]
    terms: dict[int, int] = {}
    base_neg = 1 if v < 0 else 0
    for perm in permutations(range(1, n)):
        for smask in range(1 << (n - 1)) if family != "A" else (0,):
            if family == "D" and (bin(smask).count("1") + base_neg) % 2:
                continue
            images = [0] * n
            images[b - 1] = v
            for slot, (pos, val) in enumerate(zip(rest, perm)):
                images[pos] = -val if smask >> slot & 1 else val
            sigma = SignedPerm(tuple(images))
            if not in_quotient(sigma, index_set, family):
                continue
            l, odd = ell_and_odd(sigma, family)
            terms[odd] = terms.get(odd, 0) + (-1 if l & 1 else 1)
    if not terms:
        return ZERO
    out = [0] * (max(terms) + 1)
    for k, c in terms.items():
        out[k] = c
    return IntPoly(out)


def closed_A(n: int, index_set: IndexSet) -> IntPoly:
    """Product formula for the unsigned quotient polynomials."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if index_set.n != n:
        raise ValueError("index set rank mismatch")
    if index_set.mask & ~label_mask("A", n):
        raise ValueError("type A index sets use labels 1..n-1")
    m = m_of(index_set)
    return C_poly(index_set) * alt_product(2 * m + 2, n)


def closed_B(n: int, index_set: IndexSet) -> IntPoly:
    """Product formula for the signed quotient polynomials."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if index_set.n != n:
        raise ValueError("index set rank mismatch")
    if index_set.mask & ~label_mask("B", n):
        raise ValueError("type B index sets use labels 0..n-1")
    decomp = components(index_set)
    zero = decomp.zero_size
    parts = decomp.other_sizes
    m = sum((z + 1) // 2 for z in parts)
    top = q_multinomial(m, [(z + 1) // 2 for z in parts], base_exponent=2) if m else ONE
    num = ONE
    for j in range(zero + 1, n + 1):
        num = num * (ONE - IntPoly.monomial(1, j))
    den = ONE
    for i in range(1, m + 1):
        den = den * (ONE - IntPoly.monomial(1, 2 * i))
    return (top * num).exact_div(den)


def closed_D(n: int, index_set: IndexSet) -> IntPoly:
    """Product formula for the even-signed quotient polynomials."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if index_set.n != n:
        raise ValueError("index set rank mismatch")
    full = label_mask("D", n)
    if index_set.mask & ~full and not (n == 1 and index_set.mask == 1):
        raise ValueError("type D index sets use labels 0..n-1")
    if index_set.mask == full or (n == 1 and index_set.mask == 1):
        return ONE
    if index_set.is_empty:
        return alt_product(2, n, square=True)

    m_orig = m_of(index_set)
    zero = components(index_set).zero_size
    twisted = tilde(index_set)
    m_t = m_of(twisted)

    if zero >= 2 and zero % 2 == 0:
        if n == 2 * m_orig:
            head = (
                ONE
                + IntPoly.monomial(1, zero)
                + IntPoly.monomial(2, m_orig)
            )
        elif n > 2 * m_orig:
            head = ONE + IntPoly.monomial(1, zero)
        else:
            raise AssertionError("n < 2 m cannot happen for a proper index set")
    else:
        head = ONE

    body = (
        C_poly(twisted)
        * alt_product(2 * ((zero + 2) // 2), n)
        * alt_product(2 * m_t + 2, n)
    )
    out = head * body
    if zero >= 2 and zero % 2 == 0 and n == 2 * m_orig:
        out = out.exact_div(ONE + IntPoly.monomial(1, m_orig))
    return out


def closed_poly(family: str, n: int, index_set: IndexSet) -> IntPoly:
    if family == "A":
        return closed_A(n, index_set)
    if family == "B":
        return closed_B(n, index_set)
    if family == "D":
        return closed_D(n, index_set)
    raise ValueError(f"unknown family {family!r}")


def M_of(n: int, index_set: IndexSet) -> IntPoly:
    """Multiplier relating a proper even-signed quotient polynomial to
    the square-rooted tail product shared by all of them."""
    if n < 3:
        raise ValueError("the multiplier needs rank at least 3")
    if index_set.is_full:
        raise ValueError("the multiplier is defined for proper index sets")
    m = m_of(index_set)
    return closed_D(n, index_set).exact_div(alt_product(2 * m + 2, n, square=True))


def conjecture_rhs(n: int, i: int, with_one: bool) -> IntPoly:
    """Predicted product form for the two sporadic index-set shapes.

    with_one selects {0, 1, i} over {0, i}; stated for n >= 5 and
    i in [3, n-1].
    """
    if n < 5:
        raise ValueError("the sporadic shapes are stated for n >= 5")
    if not 3 <= i <= n - 1:
        raise ValueError("the sporadic shapes need 3 <= i <= n-1")
    if with_one:
        return (ONE - IntPoly.monomial(1, 4)) * alt_product(5, n, square=True)
    return alt_product(4, n, square=True)


def conjecture_set(n: int, i: int, with_one: bool) -> IndexSet:
    members = [0, i] if not with_one else [0, 1, i]
    return IndexSet.of(n, members)

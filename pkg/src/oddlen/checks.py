"""Named identity checks behind the verify subcommand and the test suite.

Each check sweeps one family of statements over every qualifying rank and
index set, yielding a row per verified instance.  Brute-force sweeps respect
the per-family rank bounds in the context (the verify tiers); closed-form
checks are cheap and always run at their intrinsic ranges.
"""

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .indexset import (
    C_poly,
    IndexSet,
    components,
    compress,
    is_compressed,
    m_of,
    noncyclotomic_condition,
)
from .zpoly import (
    ONE,
    IntPoly,
    alt_product,
    is_cyclotomic_product,
    q_multinomial,
    trinomial_cyclotomic,
)
from .sperm import (
    SignedPerm,
    compose,
    direct_product,
    elements,
    ell_and_odd,
    label_mask,
    odd_length,
    parabolic_factorize,
)
from .rootsys import build_root_system, length_via_roots, odd_length_via_roots
from .genfun import (
    DescentTable,
    brute_filtered,
    brute_table,
    closed_A,
    closed_B,
    closed_D,
    conjecture_rhs,
    conjecture_set,
    M_of,
)
from .chess import (
    chess_class,
    chessboard_elements,
    check_L_additivity,
    check_set_factorization as set_product_holds,
    support_sum,
)

TIERS = {
    "fast": {"A": 6, "B": 5, "D": 6},
    "full": {"A": 8, "B": 6, "D": 7},
    "extended": {"A": 9, "B": 7, "D": 8},
}

FILTER_CAP = 5  # rank bound for pinned-entry enumeration sweeps


@dataclass
class CheckRow:
    check: str
    family: str
    n: int
    set_text: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass
class CheckContext:
    """Shared rank bounds and a cache of brute-force descent tables."""

    nmax: dict[str, int]
    families: tuple[str, ...] = ("A", "B", "D")
    workers: int | None = None
    _tables: dict[tuple[str, int], DescentTable] = field(default_factory=dict)

    @staticmethod
    def for_tier(tier: str, **kw) -> "CheckContext":
        return CheckContext(nmax=dict(TIERS[tier]), **kw)

    def cap(self, family: str, hard: int) -> int:
        return min(self.nmax.get(family, 0), hard)

    def table(self, family: str, n: int) -> DescentTable:
        key = (family, n)
        if key not in self._tables:
            self._tables[key] = brute_table(family, n, self.workers)
        return self._tables[key]

    def quotient(self, family: str, n: int, I: IndexSet) -> IntPoly:
        return self.table(family, n).quotient_poly(I)


def _row(check: str, family: str, n: int, where, ok: bool, detail: str = "") -> CheckRow:
    if isinstance(where, IndexSet):
        where = ",".join(str(i) for i in where.members())
    return CheckRow(check, family, n, where, "pass" if ok else "fail", detail)


def _subsets(family: str, n: int) -> Iterator[IndexSet]:
    """All generator-label subsets in binary-counter order."""
    lm = label_mask(family, n)
    for mask in range(1 << n):
        if mask & ~lm == 0:
            yield IndexSet(n, mask)


def _mismatch(got: IntPoly, want: IntPoly) -> str:
    return f"got {got}, want {want}"


# ---------------------------------------------------------------- oracles


def check_root_oracle(ctx: CheckContext) -> Iterator[CheckRow]:
    """Statistic-based length and odd length agree with root-system counts."""
    hard = {"A": 7, "B": 5, "D": 6}
    for family in ctx.families:
        for n in range(1, ctx.cap(family, hard[family]) + 1):
            rs = build_root_system(family, n)
            total = bad = 0
            for sigma in elements(family, n):
                total += 1
                want = (length_via_roots(rs, sigma), odd_length_via_roots(rs, sigma))
                if ell_and_odd(sigma, family) != want:
                    bad += 1
            yield _row("root-oracle", family, n, "", bad == 0, f"{total} elements")


def check_point_values(ctx: CheckContext) -> Iterator[CheckRow]:
    """Hand-checked values: statistics, products, factorizations, one table."""
    sigma = SignedPerm.from_text("3 -2 5 1 -4")
    pair = ell_and_odd(sigma, "D")
    rs = build_root_system("D", 5)
    root_pair = (length_via_roots(rs, sigma), odd_length_via_roots(rs, sigma))
    yield _row(
        "point-values", "D", 5, "",
        pair == (11, 7) and root_pair == (11, 7),
        f"3 -2 5 1 -4 has (length, odd length) = {pair}",
    )

    tau = SignedPerm.from_text("-1 -3 2 4")
    labels = IndexSet.of(4, [1, 2, 3])
    u, v = parabolic_factorize(tau, labels, "D")
    parts = (odd_length(u, "D"), odd_length(v, "D"))
    yield _row(
        "point-values", "D", 4, "",
        odd_length(tau, "D") == 3 and parts == (1, 1) and not check_L_additivity(tau),
        f"-1 -3 2 4 splits odd length 3 as {parts[0]}+{parts[1]}",
    )
    yield _row(
        "point-values", "D", 4, "",
        chess_class(tau) is None,
        "-1 -3 2 4 is not a chessboard element",
    )

    prod = direct_product(SignedPerm.identity(2), SignedPerm.from_text("3 4 -2 -1"))
    yield _row(
        "point-values", "D", 6, "",
        prod == SignedPerm.from_text("1 2 5 6 -4 -3"),
        "direct product 12 x 34(-2)(-1) = 1256(-4)(-3)",
    )

    J = IndexSet.of(5, [0, 1, 2])
    for text, utext in (
        ("-5 -2 1 -4 -3", "1 2 5 -4 -3"),
        ("-5 -2 -1 4 -3", "-1 2 5 4 -3"),
    ):
        g = SignedPerm.from_text(text)
        u, v = parabolic_factorize(g, J, "D")
        ok = (
            u == SignedPerm.from_text(utext)
            and v == SignedPerm.from_text("-3 -2 1 4 5")
            and compose(u, v) == g
        )
        yield _row("point-values", "D", 5, "0,1,2", ok, f"{text} = {u} . {v}")

    I = IndexSet.of(4, [0, 1, 3])
    want = IntPoly((1, 0, 2, 0, -3))
    got = ctx.quotient("D", 4, I)
    yield _row(
        "point-values", "D", 4, "0,1,3",
        got == want == closed_D(4, I) and not is_cyclotomic_product(want),
        f"quotient sum {got}, not a cyclotomic product",
    )


# ------------------------------------------------- closed formula sweeps


def _closed_match(check: str, family: str, fn) -> Callable[[CheckContext], Iterator[CheckRow]]:
    def run(ctx: CheckContext) -> Iterator[CheckRow]:
        if family not in ctx.families:
            return
        for n in range(1, ctx.nmax.get(family, 0) + 1):
            table = ctx.table(family, n)
            for I in _subsets(family, n):
                got, want = fn(n, I), table.quotient_poly(I)
                yield _row(check, family, n, I, got == want,
                           "" if got == want else _mismatch(got, want))
    return run


check_a_closed = _closed_match("a-closed-match", "A", closed_A)
check_b_closed = _closed_match("b-closed-match", "B", closed_B)
check_d_closed = _closed_match("d-closed-match", "D", closed_D)


# ------------------------------------------------------- support sweeps


def check_support_chessboard(ctx: CheckContext) -> Iterator[CheckRow]:
    """Quotient sums are unchanged by restriction to chessboard elements."""
    for family in ("D", "A"):
        if family not in ctx.families:
            continue
        for n in range(1, ctx.cap(family, 6) + 1):
            table = ctx.table(family, n)
            for I in _subsets(family, n):
                got = support_sum(n, I, "chessboard", family=family)
                want = table.quotient_poly(I)
                yield _row("support-chessboard", family, n, I, got == want,
                           "" if got == want else _mismatch(got, want))


def check_support_window(ctx: CheckContext) -> Iterator[CheckRow]:
    """Restriction to elements without odd sandwiches in the value window
    past the head block preserves the quotient sum."""
    if "D" not in ctx.families:
        return
    for n in range(4, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I in _subsets("D", n):
            a0 = components(I).zero_size
            if not 2 <= a0 <= n - 2:
                continue
            got = support_sum(n, I, "H", param=a0 + 1)
            want = table.quotient_poly(I)
            yield _row("support-window", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def check_support_positional(ctx: CheckContext) -> Iterator[CheckRow]:
    """Restriction to chessboard elements without positional odd sandwiches
    preserves the quotient sum on single-gap sets."""
    if "D" not in ctx.families:
        return
    for n in range(4, ctx.cap("D", 7) + 1):
        table = ctx.table("D", n)
        for a0 in range(2, n - 1):
            I = IndexSet.full(n).remove(a0)
            for J in (I, I.remove(0)):
                got = support_sum(n, J, "T", param=a0)
                want = table.quotient_poly(J)
                yield _row("support-positional", "D", n, J, got == want,
                           "" if got == want else _mismatch(got, want))


def check_additivity(ctx: CheckContext) -> Iterator[CheckRow]:
    """Odd length splits over the sorting factorization on chessboard
    elements (the off-chessboard counterexample sits in point-values)."""
    if "D" not in ctx.families:
        return
    for n in range(2, ctx.cap("D", 7) + 1):
        total = bad = 0
        for sigma in chessboard_elements(n):
            total += 1
            if not check_L_additivity(sigma):
                bad += 1
        yield _row("additivity-chessboard", "D", n, "", bad == 0,
                   f"{total} chessboard elements")


# ---------------------------------------------------- structural sweeps


def check_zero_one_swap(ctx: CheckContext) -> Iterator[CheckRow]:
    """Adding label 0 or label 1 to a set disjoint from {0, 1} gives the
    same quotient sum."""
    if "D" not in ctx.families:
        return
    for n in range(2, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I in _subsets("D", n):
            if 0 in I or 1 in I:
                continue
            got = table.quotient_poly(I.add(0))
            want = table.quotient_poly(I.add(1))
            yield _row("zero-one-swap", "D", n, I.add(0), got == want,
                       "" if got == want else _mismatch(got, want))


def _even_prefix_sets(n: int) -> Iterator[tuple[IndexSet, int]]:
    """Sets whose head block has even size a0 in [2, n-1] with a0+1 absent."""
    for I in _subsets("D", n):
        a0 = components(I).zero_size
        if a0 < 2 or a0 % 2 or a0 > n - 1:
            continue
        if a0 + 1 <= n - 1 and a0 + 1 in I:
            continue
        yield I, a0


def check_even_prefix_split(ctx: CheckContext) -> Iterator[CheckRow]:
    """Closing an even head block scales the quotient sum by 1 + x^a0."""
    if "D" not in ctx.families:
        return
    for n in range(3, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I, a0 in _even_prefix_sets(n):
            got = table.quotient_poly(I)
            want = (ONE + IntPoly.monomial(1, a0)) * table.quotient_poly(I.add(a0))
            yield _row("even-prefix-split", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def check_compression_invariance(ctx: CheckContext) -> Iterator[CheckRow]:
    """A set with a head block of size >= 2 has the same quotient sum as
    its compression."""
    if "D" not in ctx.families:
        return
    for n in range(2, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I in _subsets("D", n):
            if components(I).zero_size < 2:
                continue
            got = table.quotient_poly(I)
            want = table.quotient_poly(compress(I))
            yield _row("compression-invariance", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def _windows(n: int, I: IndexSet) -> Iterator[tuple[int, int]]:
    """Odd-size components [i, i+2k] of I with i >= 3, i+2k+2 <= n outside I."""
    for lo, hi in components(I).others:
        if lo < 3 or (hi - lo) % 2:
            continue
        if hi + 2 > n or (hi + 2 <= n - 1 and hi + 2 in I):
            continue
        yield lo, hi


def check_window_shift(ctx: CheckContext) -> Iterator[CheckRow]:
    """Sliding an odd-size interior component one step right (and taking the
    union with the original) preserves quotient and pinned-entry sums."""
    if "D" not in ctx.families:
        return
    for n in range(5, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I in _subsets("D", n):
            for i, hi in _windows(n, I):
                shifted = I.remove(i).add(hi + 1)
                trio = (I, I.union(shifted), shifted)
                polys = [table.quotient_poly(J) for J in trio]
                ok = polys[0] == polys[1] == polys[2]
                if ok and n <= FILTER_CAP:
                    for b in range(1, n + 1):
                        if i <= b <= hi + 2:
                            continue
                        for v in (n, -n):
                            sums = [brute_filtered("D", n, J, (b, v)) for J in trio]
                            ok = ok and sums[0] == sums[1] == sums[2]
                yield _row("window-shift", "D", n, I, ok, f"component [{i},{hi}]")


def check_pinned_entry_sums(ctx: CheckContext) -> Iterator[CheckRow]:
    """Pinned-entry restricted sums: even-head scaling, compression
    invariance, the odd-head descent to rank n-1, and vanishing sums."""
    if "D" not in ctx.families:
        return
    top = ctx.cap("D", FILTER_CAP)

    for n in range(3, top + 1):
        for I, a0 in _even_prefix_sets(n):
            scale = ONE + IntPoly.monomial(1, a0)
            for b in range(a0 + 2, n + 1):
                for v in (n, -n):
                    got = brute_filtered("D", n, I, (b, v))
                    want = scale * brute_filtered("D", n, I.add(a0), (b, v))
                    yield _row("pinned-entry-sums", "D", n, I, got == want,
                               f"even head, entry {v} at {b}")

    for n in range(2, top + 1):
        for I in _subsets("D", n):
            a0 = components(I).zero_size
            if a0 < 2:
                continue
            got = brute_filtered("D", n, I, (a0, n))
            want = brute_filtered("D", n, compress(I), (a0, n))
            yield _row("pinned-entry-sums", "D", n, I, got == want,
                       f"compression, entry {n} at {a0}")

    for n in range(4, top + 1):
        table = ctx.table("D", n - 1)
        for I in _subsets("D", n):
            a0 = components(I).zero_size
            if a0 % 2 == 0 or not 3 <= a0 <= n - 1:
                continue
            if not is_compressed(I) or I.members()[-1] > n - 2:
                continue
            got = brute_filtered("D", n, I, (a0, n))
            scale = IntPoly.monomial(2 if n % 2 else -2, n // 2)
            want = scale * table.quotient_poly(IndexSet.of(n - 1, I.members()))
            yield _row("pinned-entry-sums", "D", n, I, got == want,
                       f"odd head, entry {n} at {a0}")

    for n in range(3, top + 1):
        for I in _subsets("D", n):
            for a in range(2, n):
                if a + 1 <= n - 1 and a + 1 in I:
                    continue
                if a == 3 and (0 in I or 1 in I):
                    continue
                if a >= 4 and a - 2 in I:
                    continue
                ok = all(brute_filtered("D", n, I, (a, v)).is_zero for v in (n, -n))
                yield _row("pinned-entry-sums", "D", n, I, ok,
                           f"vanishing sum at position {a}")


def check_odd_prefix_product(ctx: CheckContext) -> Iterator[CheckRow]:
    """A set with an odd head block of size >= 3 reduces to its compression
    at the rank where the compression is cofinal."""
    if "D" not in ctx.families:
        return
    for n in range(3, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I in _subsets("D", n):
            a0 = components(I).zero_size
            if a0 < 3 or a0 % 2 == 0:
                continue
            J = compress(I)
            m = m_of(J)
            got = table.quotient_poly(I)
            want = (
                ctx.quotient("D", 2 * m - 1, IndexSet.of(2 * m - 1, J.members()))
                * alt_product(2 * m, n, square=True)
            )
            yield _row("odd-prefix-product", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def check_even_prefix_product(ctx: CheckContext) -> Iterator[CheckRow]:
    """A set with an even head block whose compression is not cofinal
    factors through a widened set at a smaller rank."""
    if "D" not in ctx.families:
        return
    for n in range(3, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I in _subsets("D", n):
            a0 = components(I).zero_size
            if a0 < 2 or a0 % 2:
                continue
            CJ = compress(I)
            last = CJ.members()[-1] + 1
            if last > n - 1:
                continue
            gaps = [i for i in range(last) if i not in CJ] + [last]
            runs = [range(0, gaps[0] + 1)]
            runs += [range(lo + 2, hi + 1) for lo, hi in zip(gaps, gaps[1:])]
            J = IndexSet.of(last + 1, [i for run in runs for i in run])
            got = table.quotient_poly(I)
            want = (
                (ONE + IntPoly.monomial(1, a0))
                * ctx.quotient("D", last + 1, J)
                * alt_product(last + 2, n, square=True)
            )
            yield _row("even-prefix-product", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def check_tail_multinomial_split(ctx: CheckContext) -> Iterator[CheckRow]:
    """A compressed cofinal set splits off a squared-variable multinomial
    against the single-gap set with the same head."""
    if "D" not in ctx.families:
        return
    for n in range(4, ctx.cap("D", 6) + 1):
        table = ctx.table("D", n)
        for I in _subsets("D", n):
            a0 = components(I).zero_size
            if not 2 <= a0 <= n - 2 or n - 1 not in I or not is_compressed(I):
                continue
            gaps = [i for i in range(n) if i not in I]
            J = IndexSet.full(n).remove(a0)
            bounds = gaps + [n]
            parts = [(hi - lo) // 2 for lo, hi in zip(bounds, bounds[1:])]
            got = table.quotient_poly(I)
            want = q_multinomial((n - a0) // 2, parts, 2) * table.quotient_poly(J)
            yield _row("tail-multinomial-split", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def check_even_case_recurrence(ctx: CheckContext) -> Iterator[CheckRow]:
    """Single-gap sets with even gap and even rank satisfy a two-term
    recurrence in rank n-1."""
    if "D" not in ctx.families:
        return
    for n in range(4, ctx.cap("D", 8) + 1, 2):
        table = ctx.table("D", n)
        small = ctx.table("D", n - 1)
        for a0 in range(2, n - 1, 2):
            I = IndexSet.full(n).remove(a0)
            got = table.quotient_poly(I)
            lowered = small.quotient_poly(IndexSet.full(n - 1).remove(a0 - 1))
            widened = small.quotient_poly(IndexSet.full(n - 1).remove(a0 + 1)
                                          if a0 + 1 <= n - 2 else IndexSet.full(n - 1))
            head = ONE + IntPoly.monomial(1, a0) - IntPoly.monomial(2, a0 + n // 2)
            want = IntPoly.monomial(1, n - a0) * lowered + head * widened
            yield _row("even-case-recurrence", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def check_factorizations(ctx: CheckContext) -> Iterator[CheckRow]:
    """Quotient set products: compressed cofinal sets split off an
    unsigned-quotient tail; odd single-gap sets at odd rank split off an
    embedded chessboard head."""
    if "D" not in ctx.families:
        return
    for n in range(4, ctx.cap("D", 6) + 1):
        for I in _subsets("D", n):
            a0 = components(I).zero_size
            if not 2 <= a0 <= n - 2 or n - 1 not in I or not is_compressed(I):
                continue
            ok = set_product_holds(n, I, "H")
            yield _row("set-factorization", "D", n, I, ok, "window variant")
    for n in range(5, ctx.cap("D", 7) + 1, 2):
        for a0 in range(3, n - 1, 2):
            I = IndexSet.full(n).remove(a0)
            ok = set_product_holds(n, I, "T")
            yield _row("set-factorization", "D", n, I, ok, "positional variant")


def check_quotient_factor_divides(ctx: CheckContext) -> Iterator[CheckRow]:
    """The squared alternating tail divides every closed quotient sum."""
    if "D" not in ctx.families:
        return
    for n in range(3, 8):
        for I in _subsets("D", n):
            f = alt_product(2 * m_of(I) + 2, n, square=True)
            try:
                closed_D(n, I).exact_div(f)
                ok = True
            except ValueError:
                ok = False
            yield _row("quotient-factor-divides", "D", n, I, ok,
                       "" if ok else "tail does not divide")


def check_remark_values(ctx: CheckContext) -> Iterator[CheckRow]:
    """Four small cofactors of the squared alternating tail."""
    if "D" not in ctx.families:
        return

    def one_m(k: int) -> IntPoly:
        return ONE - IntPoly.monomial(1, k)

    cases = [
        (4, [0, 2], one_m(2) ** 3),
        (4, [0, 3], one_m(2) * one_m(4)),
        (6, [0, 2, 3, 5], one_m(3) * one_m(4) * one_m(6)),
        (6, [0, 2, 4, 5], one_m(3) ** 2 * one_m(4) ** 2),
    ]
    for n, members, want in cases:
        I = IndexSet.of(n, members)
        got = M_of(n, I)
        yield _row("remark-values", "D", n, I, got == want, f"cofactor {got}")


def check_conjecture_products(ctx: CheckContext) -> Iterator[CheckRow]:
    """The closed quotient sums of {0,i} and {0,1,i} match the conjectured
    uniform products."""
    if "D" not in ctx.families:
        return
    for n in range(5, 9):
        for i in range(3, n):
            for with_one in (False, True):
                I = conjecture_set(n, i, with_one)
                got = closed_D(n, I)
                want = conjecture_rhs(n, i, with_one)
                yield _row("conjecture-products", "D", n, I, got == want,
                           "" if got == want else _mismatch(got, want))


def check_cyclo_classification(ctx: CheckContext) -> Iterator[CheckRow]:
    """A proper-set quotient sum factors into cyclotomics exactly when the
    rank is odd or some odd label (or 0) is missing."""
    if "D" not in ctx.families:
        return
    for n in range(1, 9):
        for I in _subsets("D", n):
            if I.is_full:
                continue
            got = is_cyclotomic_product(closed_D(n, I))
            want = not noncyclotomic_condition(I)
            yield _row("cyclo-classification", "D", n, I, got == want,
                       "cyclotomic product" if want else "no cyclotomic factorization")


def check_display_form(ctx: CheckContext) -> Iterator[CheckRow]:
    """In the non-factoring case the quotient sum matches the explicit
    trinomial-over-binomial display."""
    if "D" not in ctx.families:
        return
    for n in range(2, 9, 2):
        for I in _subsets("D", n):
            if I.is_full or not noncyclotomic_condition(I):
                continue
            a0 = components(I).zero_size
            trinom = ONE + IntPoly.monomial(1, a0) + IntPoly.monomial(2, n // 2)
            numer = C_poly(I) * trinom * alt_product(a0 + 2, n)
            want = numer.exact_div(ONE + IntPoly.monomial(1, n // 2))
            got = closed_D(n, I)
            yield _row("display-form-match", "D", n, I, got == want,
                       "" if got == want else _mismatch(got, want))


def check_trinomial_criterion(ctx: CheckContext) -> Iterator[CheckRow]:
    """x^n + 2x^m + 1 is a cyclotomic product exactly when n = 2m."""
    for n in range(2, 25):
        for m in range(1, n):
            p = ONE + IntPoly.monomial(2, m) + IntPoly.monomial(1, n)
            got = is_cyclotomic_product(p)
            want = trinomial_cyclotomic(n, m)
            yield _row("trinomial-criterion", "-", n, f"m={m}",
                       got == want and want == (n == 2 * m), "")


CHECKS: dict[str, Callable[[CheckContext], Iterator[CheckRow]]] = {
    "root-oracle": check_root_oracle,
    "point-values": check_point_values,
    "a-closed-match": check_a_closed,
    "b-closed-match": check_b_closed,
    "d-closed-match": check_d_closed,
    "support-chessboard": check_support_chessboard,
    "support-window": check_support_window,
    "support-positional": check_support_positional,
    "additivity-chessboard": check_additivity,
    "zero-one-swap": check_zero_one_swap,
    "even-prefix-split": check_even_prefix_split,
    "compression-invariance": check_compression_invariance,
    "window-shift": check_window_shift,
    "pinned-entry-sums": check_pinned_entry_sums,
    "odd-prefix-product": check_odd_prefix_product,
    "even-prefix-product": check_even_prefix_product,
    "tail-multinomial-split": check_tail_multinomial_split,
    "even-case-recurrence": check_even_case_recurrence,
    "set-factorization": check_factorizations,
    "quotient-factor-divides": check_quotient_factor_divides,
    "remark-values": check_remark_values,
    "conjecture-products": check_conjecture_products,
    "cyclo-classification": check_cyclo_classification,
    "display-form-match": check_display_form,
    "trinomial-criterion": check_trinomial_criterion,
}


def run_checks(ctx: CheckContext, only: list[str] | None = None) -> Iterator[CheckRow]:
    names = list(CHECKS) if only is None else only
    for name in names:
        if name not in CHECKS:
            raise KeyError(name)
        yield from CHECKS[name](ctx)

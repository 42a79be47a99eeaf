"""Integer polynomial arithmetic and cyclotomic machinery."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oddlen.zpoly import (
    ONE,
    X,
    ZERO,
    IntPoly,
    alt_product,
    cyclotomic,
    cyclotomic_factors,
    euler_phi,
    is_cyclotomic_product,
    q_factorial,
    q_int,
    q_multinomial,
    trinomial_cyclotomic,
)

coeff_lists = st.lists(st.integers(-9, 9), max_size=9)
polys = coeff_lists.map(lambda cs: IntPoly(tuple(cs)))
nonzero_polys = polys.filter(lambda p: not p.is_zero)


class TestIntPoly:
    def test_trailing_zeros_trimmed(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPoly((0, 0)).coeffs == ()
        assert IntPoly(()).is_zero

    def test_degree(self):
        assert ZERO.degree == -1
        assert ONE.degree == 0
        assert X.degree == 1
        assert IntPoly((0, 0, 5)).degree == 2

    def test_const_and_monomial(self):
        assert IntPoly.const(7).coeffs == (7,)
        assert IntPoly.const(0) == ZERO
        assert IntPoly.monomial(3, 2).coeffs == (0, 0, 3)
        assert IntPoly.monomial(1, 0) == ONE

    @pytest.mark.parametrize(
        "coeffs, text",
        [
            ((), "0"),
            ((1,), "1"),
            ((0, 1), "x"),
            ((0, -1), "-x"),
            ((1, 0, -1, 0, 0, 2), "1 - x^2 + 2x^5"),
            ((0, 0, 3), "3x^2"),
            ((-2, 1), "-2 + x"),
        ],
    )
    def test_str(self, coeffs, text):
        assert str(IntPoly(coeffs)) == text

    @given(polys, polys, st.integers(-4, 4))
    def test_ring_operations_agree_with_evaluation(self, p, q, t):
        assert (p + q)(t) == p(t) + q(t)
        assert (p - q)(t) == p(t) - q(t)
        assert (p * q)(t) == p(t) * q(t)
        assert (-p)(t) == -p(t)

    def test_pow(self):
        p = ONE + X
        assert p**0 == ONE
        assert p**3 == p * p * p
        assert (p**2).coeffs == (1, 2, 1)

    @given(polys, nonzero_polys)
    def test_exact_div_inverts_multiplication(self, p, q):
        assert (p * q).exact_div(q) == p

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(ValueError):
            (X * X + ONE).exact_div(X + ONE)
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(ZERO)

    def test_subs_x_power(self):
        assert IntPoly((1, 2, 3)).subs_x_power(2).coeffs == (1, 0, 2, 0, 3)
        assert IntPoly((1, -1)).subs_x_power(3).coeffs == (1, 0, 0, -1)


class TestQSeries:
    def test_q_int(self):
        assert q_int(1) == ONE
        assert q_int(4).coeffs == (1, 1, 1, 1)

    def test_q_factorial(self):
        assert q_factorial(3).coeffs == (1, 2, 2, 1)

    def test_q_multinomial(self):
        assert q_multinomial(2, [1, 1]).coeffs == (1, 1)
        assert q_multinomial(2, [1, 1], 2).coeffs == (1, 0, 1)
        assert q_multinomial(4, [2, 2]).coeffs == (1, 1, 2, 1, 1)
        with pytest.raises(ValueError):
            q_multinomial(3, [1, 1])

    @given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
    def test_q_multinomial_has_nonnegative_coefficients(self, parts):
        poly = q_multinomial(sum(parts), parts)
        assert all(c >= 0 for c in poly.coeffs)
        assert poly(1) > 0

    def test_alt_product(self):
        assert alt_product(2, 1) == ONE
        assert alt_product(2, 2).coeffs == (1, -1)
        assert alt_product(2, 4).coeffs == (1, 0, -2, 0, 1)
        assert alt_product(2, 3, square=True) == alt_product(2, 3) ** 2
        assert alt_product(4, 7, square=True) == alt_product(4, 7) ** 2


class TestCyclotomic:
    @pytest.mark.parametrize(
        "k, coeffs",
        [
            (1, (-1, 1)),
            (2, (1, 1)),
            (4, (1, 0, 1)),
            (6, (1, -1, 1)),
            (12, (1, 0, -1, 0, 1)),
        ],
    )
    def test_small_values(self, k, coeffs):
        assert cyclotomic(k).coeffs == coeffs

    @pytest.mark.parametrize("n", range(1, 31))
    def test_divisor_product(self, n):
        prod = ONE
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly.monomial(1, n) - ONE

    def test_euler_phi(self):
        assert [euler_phi(k) for k in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
        assert cyclotomic(36).degree == euler_phi(36)

    def test_cyclotomic_factors(self):
        assert cyclotomic_factors(IntPoly((1, 0, 2, 0, 1))) == [4, 4]
        assert cyclotomic_factors(IntPoly((-1, 1))) == [1]
        assert cyclotomic_factors(IntPoly((1, -1))) == [1]
        assert sorted(cyclotomic_factors(IntPoly((1, 0, 0, 2, 0, 0, 1)))) == [2, 2, 6, 6]
        assert cyclotomic_factors(ONE) == []
        assert cyclotomic_factors(IntPoly.const(-1)) == []
        assert cyclotomic_factors(ZERO) is None
        assert cyclotomic_factors(IntPoly.const(2)) is None
        assert cyclotomic_factors(X) is None
        assert cyclotomic_factors(IntPoly((1, 0, 3))) is None

    @given(st.lists(st.sampled_from(range(1, 13)), min_size=1, max_size=4))
    def test_factorization_roundtrip(self, ks):
        prod = ONE
        for k in ks:
            prod = prod * cyclotomic(k)
        assert cyclotomic_factors(prod) == sorted(ks)

    def test_is_cyclotomic_product(self):
        assert is_cyclotomic_product(IntPoly((1, 0, 2, 0, 1)))
        assert is_cyclotomic_product(IntPoly((1, -1)))
        assert not is_cyclotomic_product(IntPoly((1, 0, 3)))
        assert not is_cyclotomic_product(IntPoly((1, 0, 2, 0, -3)))
        assert not is_cyclotomic_product(ZERO)

    def test_trinomial_criterion_matches_factorization(self):
        for n in range(2, 13):
            for m in range(1, n):
                trinomial = (
                    ONE + IntPoly.monomial(2, m) + IntPoly.monomial(1, n)
                )
                want = n == 2 * m
                assert trinomial_cyclotomic(n, m) is want
                assert is_cyclotomic_product(trinomial) is want

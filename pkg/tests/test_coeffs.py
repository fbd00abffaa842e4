"""Laurent, cyclotomic and multivariate coefficient rings."""

from fractions import Fraction

import pytest
from hypothesis import given

from src.coeffs.cyclotomic import CycScalar, cyc_primitive, cyc_reduce, cyclotomic_coefficients
from src.coeffs.laurent import ONE, Q, Q_DIFF, ZERO, LaurentScalar, laurent_bar, laurent_mul
from src.coeffs.multivariate import MonomialInvolution, MultiLaurent
from src.errors import CoefficientError, IndexOutOfRangeError, ParameterMismatchError

from tests.strategies import cycs, laurents, multi_laurents


class TestLaurent:
    def test_q_diff_squared(self):
        assert Q_DIFF * Q_DIFF == LaurentScalar({2: 1, 0: -2, -2: 1})

    def test_bar_of_q_diff(self):
        assert Q_DIFF.bar() == -Q_DIFF

    def test_zero_terms_are_dropped(self):
        assert Q - Q == ZERO
        assert not (Q - Q).terms

    def test_negative_part(self):
        a = LaurentScalar({-2: 3, 0: 1, 1: -1})
        assert a.negative_part() == LaurentScalar({-2: 3})

    def test_degrees(self):
        a = LaurentScalar({-3: 1, 2: 4})
        assert (a.min_degree, a.max_degree) == (-3, 2)
        assert ZERO.max_degree is None

    def test_inverse_of_unit_monomial(self):
        assert Q ** -1 == LaurentScalar.q(-1)
        with pytest.raises(ValueError):
            (Q + ONE) ** -1

    def test_str(self):
        assert str(LaurentScalar({1: 1, -1: -1})) == "q - q^-1"
        assert str(ZERO) == "0"

    @given(laurents(), laurents(), laurents())
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert laurent_mul(a, b) == a * b

    @given(laurents(), laurents())
    def test_bar_is_ring_involution(self, a, b):
        assert (a * b).bar() == a.bar() * b.bar()
        assert a.bar().bar() == a
        assert laurent_bar(laurent_mul(a, b)) == laurent_mul(laurent_bar(a), laurent_bar(b))


class TestCyclotomic:
    def test_zeta_has_order_r(self):
        z = CycScalar.zeta(3)
        assert z * z * z == CycScalar.one(3)

    def test_denominators_must_divide_powers_of_r(self):
        CycScalar(4, {0: Fraction(1, 8)})
        with pytest.raises(CoefficientError):
            CycScalar(2, {0: Fraction(1, 3)})

    def test_mixed_r_rejected(self):
        with pytest.raises(ParameterMismatchError):
            CycScalar.one(2) + CycScalar.one(3)

    def test_averaged_character_sum_is_idempotent_before_projection(self):
        r = 3
        e = CycScalar(r, {s: Fraction(1, r) for s in range(r)})
        assert e * e == e
        assert cyc_primitive(e) == CycScalar(r)

    @pytest.mark.parametrize("r", [2, 3, 4, 6])
    def test_character_orthogonality_after_projection(self, r):
        for k in range(r):
            total = CycScalar(r)
            for s in range(r):
                total = total + CycScalar.zeta(r, k * s) * Fraction(1, r)
            expected = CycScalar.one(r) if k == 0 else CycScalar(r)
            assert cyc_primitive(total) == expected

    def test_cyclotomic_polynomials(self):
        assert cyclotomic_coefficients(2) == (1, 1)
        assert cyclotomic_coefficients(3) == (1, 1, 1)
        assert cyclotomic_coefficients(4) == (1, 0, 1)

    def test_reduce_is_canonical(self):
        c = CycScalar(3, {4: Q})
        assert cyc_reduce(c) == CycScalar(3, {1: Q})

    @given(cycs(), cycs())
    def test_primitive_projection_is_ring_hom(self, a, b):
        assert cyc_primitive(a * b) == cyc_primitive(cyc_primitive(a) * cyc_primitive(b))
        assert cyc_primitive(a + b) == cyc_primitive(a) + cyc_primitive(b)

    def test_laurent_scalars_coerce(self):
        assert Q * CycScalar.zeta(2) == CycScalar(2, {1: Q})
        assert CycScalar.one(2) == 1


class TestMultiLaurent:
    def test_variable_limit(self):
        with pytest.raises(IndexOutOfRangeError):
            MultiLaurent(4)

    def test_embed(self):
        x = MultiLaurent.var(1, 0, 2)
        assert x.embed(1, 3) == MultiLaurent(3, {(0, 2, 0): 1})

    def test_from_laurent(self):
        assert MultiLaurent.from_laurent(Q_DIFF, 2, 1) == MultiLaurent(2, {(0, 1): 1, (0, -1): -1})

    def test_involutions(self):
        x = MultiLaurent(2, {(1, 2): 3})
        assert MonomialInvolution.inversion(2)(x) == MultiLaurent(2, {(-1, -2): 3})
        assert MonomialInvolution.swap(2, 0, 1)(x) == MultiLaurent(2, {(2, 1): 3})

    def test_involution_must_square_to_identity(self):
        with pytest.raises(ValueError):
            MonomialInvolution([[1, 1], [0, 1]])

    def test_direct_sum(self):
        sigma = MonomialInvolution.identity(1).direct_sum(MonomialInvolution.inversion(1))
        assert sigma(MultiLaurent(2, {(1, 1): 1})) == MultiLaurent(2, {(1, -1): 1})

    @given(multi_laurents(), multi_laurents())
    def test_involutions_are_ring_homs(self, a, b):
        for sigma in (MonomialInvolution.inversion(2), MonomialInvolution.swap(2, 0, 1)):
            assert sigma(a * b) == sigma(a) * sigma(b)
            assert sigma(sigma(a)) == a

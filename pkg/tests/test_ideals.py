# -*- coding: utf-8 -*-

import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from conftest import ideals, monomials, random_ideal
from sallylab.errors import (BudgetExceeded, ExponentOverflow, MixedDimension,
                             NotContained, NotMPrimary, SallyLabError,
                             ZeroDivisorIdeal)
from sallylab.ideals import (MAX_EXPONENT, Monomial, MonomialIdeal, colength,
                             colon, contains, equals, ideal_sum, intersect,
                             is_parameter_ideal, max_ideal, member,
                             minimalize, power, product, quotient_length,
                             standard_monomials, unit_ideal, zero_ideal)


def ideal(*gens):
    return minimalize(gens)


class TestMonomials:
    def test_rendering(self):
        assert str(Monomial((2, 3))) == 'x^2*y^3'
        assert str(Monomial((1, 0, 1))) == 'x*z'
        assert str(Monomial((0, 0))) == '1'
        assert str(Monomial((0,) * 4 + (2,))) == 'x5^2'

    def test_negative_exponent(self):
        with pytest.raises(ValueError):
            Monomial((1, -1))

    def test_divides_and_lcm(self):
        assert Monomial((1, 2)).divides((1, 3))
        assert not Monomial((2, 0)).divides((1, 3))
        assert Monomial((1, 2)).lcm((3, 0)) == (3, 2)
        with pytest.raises(MixedDimension):
            Monomial((1, 2)).divides((1, 2, 3))

    def test_exponent_overflow(self):
        with pytest.raises(ExponentOverflow) as excinfo:
            MonomialIdeal(2, [(2**41, 0)])
        assert isinstance(excinfo.value, SallyLabError)
        assert isinstance(excinfo.value, OverflowError)
        I = MonomialIdeal(2, [(MAX_EXPONENT, 0), (0, 1)])
        with pytest.raises(ExponentOverflow):
            product(I, I)


class TestMinimalize:
    def test_removes_redundant(self):
        I = ideal((2, 0), (0, 2), (1, 1), (2, 1), (3, 3))
        assert I.gens == ((2, 0), (1, 1), (0, 2))

    def test_canonical_order(self):
        assert ideal((0, 3), (3, 0), (1, 1)).gens == ((1, 1), (3, 0), (0, 3))

    def test_mixed_dimensions(self):
        with pytest.raises(MixedDimension):
            minimalize([(1, 2), (1, 2, 3)])

    def test_unit_and_zero(self):
        assert ideal((0, 0), (1, 2)).is_unit
        assert zero_ideal(2).is_zero
        assert unit_ideal(3).gens == ((0, 0, 0),)

    @given(ideals(dim=3))
    def test_generators_are_antichain(self, I):
        for g in I.gens:
            for h in I.gens:
                assert g == h or not g.divides(h)


class TestArithmetic:
    @given(ideals(), ideals())
    def test_sum_commutes(self, I, J):
        assert ideal_sum(I, J) == ideal_sum(J, I) == I + J

    @given(ideals(), ideals(), ideals())
    def test_product_associates(self, I, J, K):
        assert product(product(I, J), K) == product(I, product(J, K))

    @given(ideals(), ideals(), ideals())
    def test_distributive(self, I, J, K):
        assert product(I, ideal_sum(J, K)) == \
            ideal_sum(product(I, J), product(I, K))

    @given(ideals(max_exponent=3, max_gens=3))
    def test_powers(self, I):
        assert power(I, 0) == unit_ideal(2)
        assert power(I, 1) == I
        assert power(I, 3) == product(power(I, 2), I) == I ** 3

    @given(ideals(), ideals())
    def test_product_in_intersection(self, I, J):
        assert contains(intersect(I, J), product(I, J))
        assert contains(I, intersect(I, J))

    @given(ideals(), monomials(2, 8))
    def test_member_matches_oracle(self, I, m):
        assert member(m, I) == oracles.member(m, I.gens) == (m in I)

    def test_max_ideal(self):
        assert max_ideal(3).gens == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert power(max_ideal(2), 2) == ideal((2, 0), (1, 1), (0, 2))

    def test_equality_in_powers(self, x5y5):
        Q, I = x5y5
        assert equals(power(I, 3), product(Q, power(I, 2)))
        assert not equals(power(I, 2), product(Q, I))

    def test_mixed_dimensions(self):
        with pytest.raises(MixedDimension):
            product(max_ideal(2), max_ideal(3))
        with pytest.raises(MixedDimension):
            member((1, 1, 1), max_ideal(2))

    def test_is_parameter_ideal(self):
        assert is_parameter_ideal(ideal((3, 0), (0, 5)))
        assert not is_parameter_ideal(ideal((3, 0), (0, 5), (1, 1)))
        assert not is_parameter_ideal(ideal((3, 0), (1, 1)))


class TestColon:
    def test_example(self):
        I = ideal((3, 0), (0, 3), (2, 2))
        assert colon(I, max_ideal(2)) == \
            ideal((3, 0), (2, 1), (1, 2), (0, 3))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisorIdeal):
            colon(max_ideal(2), zero_ideal(2))

    def test_colon_by_unit(self):
        I = ideal((2, 0), (1, 1), (0, 3))
        assert colon(I, unit_ideal(2)) == I
        assert colon(I, I).is_unit

    @given(ideals(), monomials(2, 4))
    def test_product_by_monomial_cancels(self, I, g):
        P = MonomialIdeal(2, [g])
        assert colon(product(I, P), P) == I

    @given(ideals(m_primary=True), ideals(max_gens=3))
    def test_matches_oracle(self, I, J):
        C = colon(I, J)
        box = [a + 1 for a in oracles.box_of(I.gens, 2)]
        for p in oracles.points(box):
            assert member(p, C) == oracles.colon_member(p, I.gens, J.gens)


class TestColength:
    def test_examples(self, x5y5, example_d3):
        Q, I = x5y5
        assert colength(Q) == 25
        assert colength(I) == 17
        assert colength(example_d3[1]) == 11
        assert colength(unit_ideal(2)) == 0
        assert colength(ideal((4,))) == 4

    def test_not_m_primary(self):
        with pytest.raises(NotMPrimary):
            colength(ideal((3, 0), (1, 1)))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            colength(ideal((100, 0), (0, 100)), max_points=1000)

    def test_standard_monomials(self, x5y5):
        _, I = x5y5
        points = standard_monomials(I)
        assert len(points) == 17
        assert not any(member(tuple(p), I) for p in points.tolist())

    def test_quotient_length(self, example_s1_3):
        Q, I = example_s1_3
        assert quotient_length(product(Q, I), power(I, 2)) == 3
        assert quotient_length(product(product(Q, Q), I), power(I, 3)) == 5
        with pytest.raises(NotContained):
            quotient_length(I, product(Q, I))

    @given(ideals(m_primary=True), ideals(m_primary=True))
    def test_inclusion_exclusion(self, I, J):
        assert colength(intersect(I, J)) + colength(ideal_sum(I, J)) == \
            colength(I) + colength(J)

    @given(ideals(m_primary=True), ideals(m_primary=True))
    def test_monotone(self, I, J):
        assert colength(product(I, J)) >= colength(intersect(I, J)) >= \
            colength(I) >= colength(ideal_sum(I, J))

    @given(ideals(dim=3, max_exponent=4, m_primary=True))
    @settings(max_examples=50)
    def test_matches_oracle(self, I):
        assert colength(I) == oracles.colength(I.gens, 3)

    @pytest.mark.parametrize('dim,box', [(2, 8), (3, 5)])
    def test_seeded_oracle_equivalence(self, dim, box):
        rng = np.random.default_rng(20240)
        for _ in range(200):
            I = random_ideal(rng, dim, box)
            J = random_ideal(rng, dim, box, max_extra=2)
            assert colength(I) == oracles.colength(I.gens, dim)
            C = colon(I, J)
            for p in oracles.points([box + 1] * dim):
                assert member(p, I) == oracles.member(p, I.gens)
                assert member(p, C) == oracles.colon_member(p, I.gens,
                                                            J.gens)

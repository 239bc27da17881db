# -*- coding: utf-8 -*-

import pytest

from sallylab.errors import (HypothesisViolated, NegativeRank,
                             NotAReduction, NotParameterIdeal,
                             RangeViolation)
from sallylab.fixtures import builtin_fixtures
from sallylab.ideals import max_ideal, minimalize, power
from sallylab.sally import (ClosedForm, analyze, check_hypotheses,
                            check_inequalities, classify, m_invariant,
                            sally_lengths, sally_rank, verify_closed_form,
                            violations)


@pytest.fixture(scope='module')
def profiles():
    """Profiles of all built-in examples, by label."""
    return {f.spec.label: analyze(*f.spec.ideals())
            for f in builtin_fixtures()}


def ideal(*gens):
    return minimalize(gens)


class TestSallyLengths:
    def test_free_example(self, x5y5):
        Q, I = x5y5
        assert sally_lengths(I, Q, 6) == (2, 4, 6, 8, 10, 12)

    def test_table_shortcut_agrees(self, x5y5, profiles):
        Q, I = x5y5
        assert sally_lengths(I, Q, 5, table=profiles['x5y5'].table) == \
            sally_lengths(I, Q, 5)

    def test_zero_module(self):
        Q = ideal((2, 0), (0, 2))
        assert sally_lengths(power(max_ideal(2), 2), Q, 4) == (0, 0, 0, 0)

    def test_errors(self, x5y5):
        Q, I = x5y5
        with pytest.raises(NotParameterIdeal):
            sally_lengths(I, I, 3)
        with pytest.raises(NotAReduction):
            sally_lengths(ideal((5, 0), (0, 5), (1, 1)), Q, 3)
        with pytest.raises(ValueError):
            sally_lengths(I, Q, 0)


class TestHypotheses:
    def test_lemma_example(self, example_s1_3):
        Q, I = example_s1_3
        flags = check_hypotheses(I, Q)
        assert flags.reduction and flags.i3_equals_qi2 and flags.m_i2_in_qi
        assert flags.lemma
        assert not flags.i2_equals_qi
        assert flags.integrally_closed is False

    def test_parameter_ideal(self, x5y5):
        Q, _ = x5y5
        flags = check_hypotheses(Q, Q)
        assert flags.i2_equals_qi and flags.i3_equals_qi2
        assert flags.integrally_closed is False
        assert flags.ratliff_rush_closed is True

    def test_three_dimensions(self, example_d3):
        Q, I = example_d3
        flags = check_hypotheses(I, Q)
        assert flags.lemma
        assert flags.ratliff_rush_closed is None

    def test_without_closures(self, x5y5):
        Q, I = x5y5
        flags = check_hypotheses(I, Q, with_closures=False)
        assert flags.integrally_closed is None
        flags = check_hypotheses(I, Q, with_closures='lemma')
        assert flags.integrally_closed is False


class TestInvariants:
    def test_sally_rank(self):
        assert sally_rank((25, 10, 2), 17) == 2
        assert sally_rank((16, 6, 0), 11) == 1
        with pytest.raises(NegativeRank):
            sally_rank((25, 10, 2), 10)

    def test_m_invariant(self):
        assert m_invariant((16, 6, 0), 11) == 0
        assert m_invariant((25, 10, 2), 17) == -1
        with pytest.raises(RangeViolation):
            m_invariant((25, 10, 3), 17)

    def test_profile(self, profiles):
        p = profiles['x5y5']
        assert p.len_ai == 17 and p.len_aq == 25
        assert p.e.e == (25, 10, 2)
        assert p.rank == 2 and p.m_inv == -1
        assert p.reduction_number == 2
        assert p.s_at(0) == 0 and p.s_at(3) == 6
        assert p.N == 10 and p.main_hypotheses


class TestClassification:
    @pytest.mark.parametrize('label,name,depth', [
        ('family-1', 'NEAR_FREE', 0),
        ('family-2', 'S1_4_D2(ii)', 0),
        ('family-3', 'UNCLASSIFIED', None),
        ('x5y5', 'FREE', '>= 1'),
        ('ex-3.8-1', 'S1_3(i)', 0),
        ('ex-3.8-2', 'S1_4_D2(i)', 0),
        ('ex-3.8-3', 'S1_4_D2(ii)', 0),
        ('remark-d3', 'NEAR_FREE', 0),
    ])
    def test_examples(self, profiles, label, name, depth):
        c = profiles[label].classification
        assert c.name == name
        assert c.depth == depth

    def test_predicted_lengths(self, profiles):
        assert profiles['x5y5'].classification.predicted_s(4, 2) == 8
        c = profiles['ex-3.8-1'].classification
        assert c.resolution == ((1, 3), (2, -1))
        assert [c.predicted_s(n, 2) for n in range(4)] == [0, 3, 5, 7]
        c = profiles['remark-d3'].classification
        assert c.c == 3
        assert [c.predicted_s(n, 3) for n in (1, 2)] == [4, 9]

    def test_zero(self, x5y5):
        Q, _ = x5y5
        p = analyze(Q, Q)
        assert p.classification.tag == 'ZERO'
        assert p.e.e == (25, 0, 0)
        assert p.s == (0,) * p.N
        I = power(max_ideal(2), 2)
        p = analyze(ideal((2, 0), (0, 2)), I)
        assert p.classification.tag == 'ZERO'
        assert p.e.e == (4, 1, 0)

    def test_needs_hypotheses(self, profiles):
        p = profiles['x5y5']
        p = p._replace(flags=p.flags._replace(m_i2_in_qi=False))
        with pytest.raises(HypothesisViolated):
            classify(p)

    def test_s1_3_range(self, profiles):
        p = profiles['x5y5']
        p = p._replace(m_inv=0, s=(3, 4) + p.s[2:])
        with pytest.raises(RangeViolation):
            classify(p)

    def test_closed_form(self):
        form = ClosedForm(((16, 2, 2), (-6, 1, 1)), 1)
        assert form(1) == 36
        assert str(form) == '16*C(n+2, 2) + -6*C(n+1, 1) for n >= 1'
        form = ClosedForm(((1, 0, 0),), 0, free=((2, 1, 2),))
        assert [form(n) for n in range(3)] == [1, 3, 5]


class TestChecks:
    @pytest.mark.parametrize('label', [
        'family-1', 'family-2', 'family-3', 'x5y5', 'ex-3.8-1', 'ex-3.8-2',
        'ex-3.8-3', 'remark-d3'])
    def test_no_violations(self, profiles, label):
        p = profiles[label]
        checks = check_inequalities(p) + verify_closed_form(
                p.classification, p)
        assert violations(checks) == []

    def test_check_names(self, profiles):
        names = [c.name for c in check_inequalities(profiles['ex-3.8-1'])]
        for name in ('northcott', 'narita', 'sally_identity',
                     'huneke_ooishi', 'difference_is_e0', 'multiplicity',
                     'main_inequality', 'm_range', 's1_3_range'):
            assert name in names
        assert 'sally_itoh' not in names

    def test_integrally_closed_equality(self):
        # an integrally closed instance: I = m^2 over Q = (x^2, y^2)
        p = analyze(ideal((2, 0), (0, 2)), power(max_ideal(2), 2))
        checks = {c.name: c for c in check_inequalities(p)}
        assert checks['sally_itoh'].holds
        assert checks['huneke_ooishi'].holds

    def test_failures_are_reported(self, profiles):
        p = profiles['x5y5']
        p = p._replace(e=p.e._replace(e=(25, 10, 3)))
        failed = [c.name for c in violations(check_inequalities(p))]
        assert 'main_inequality' in failed
        assert 'northcott' not in failed

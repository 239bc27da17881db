# -*- coding: utf-8 -*-

"""
Built-in example instances with the quantitative claims attached to them.

Every claim names the value it expects and how to read the computed value
off a SallyProfile. Provenance tags tell where a claim comes from: PAPER
for statements made about the example in the literature, DERIVED for
values that follow from them by computation, TRIVIAL for consequences of
definitions.
"""

from collections import namedtuple
from operator import attrgetter

from .closures import is_integrally_closed
from .hilbert import binomial
from .ideals import power
from .sally import check_inequalities, verify_closed_form, violations
from .sally.checks import sally_identity
from .specs import IdealSpec

PAPER = 'PAPER'
DERIVED = 'DERIVED'
TRIVIAL = 'TRIVIAL'

# claims about H(n) and s_n cover these ranges
H_RANGE = range(1, 9)
S_RANGE = range(1, 7)


class Claim(namedtuple('Claim', ['id', 'description', 'expected',
                                 'compute', 'provenance'])):
    """
    A claim about a fixture. `compute` maps the SallyProfile to the
    computed value; `expected` is a value or, for claims relating computed
    quantities, a function of the profile as well.
    """
    __slots__ = ()

    def expected_value(self, profile):
        return self.expected(profile) if callable(self.expected) \
            else self.expected


Fixture = namedtuple('Fixture', ['spec', 'claims'])


def tag(profile):
    return profile.classification.name if profile.classification else None


def s_values(n_range):
    return lambda p: tuple(p.s_at(n) for n in n_range)


def h_values(n_range):
    return lambda p: tuple(p.table.values[n] for n in n_range)


def h_form(n_range, shift=0):
    """e_0 C(n+2, 2) - e_1 (n+1) + shift over `n_range`, d = 2."""
    def form(p):
        e0, e1 = p.e.e[:2]
        return tuple(e0 * binomial(n + 2, 2) - e1 * (n + 1) + shift
                     for n in n_range)
    return form


def lemma_claims():
    return [
        Claim('i3_equals_qi2', 'I^3 = QI^2', True,
              attrgetter('flags.i3_equals_qi2'), PAPER),
        Claim('m_i2_in_qi', 'm I^2 is contained in QI', True,
              attrgetter('flags.m_i2_in_qi'), PAPER),
    ]


def common_claims():
    return [
        Claim('sally_identity',
              'H(n) + s_n = e_0 C(n+d, d) - (e_0 - l(A/I)) C(n+d-1, d-1) '
              'for 0 <= n <= N',
              lambda p: tuple(sally_identity(p, n)
                              for n in range(p.N + 1)),
              lambda p: tuple(p.table.values[n] + p.s_at(n)
                              for n in range(p.N + 1)), PAPER),
        Claim('no_violations',
              'every applicable inequality and prediction holds', (),
              lambda p: tuple(str(c) for c in violations(
                  check_inequalities(p) +
                  verify_closed_form(p.classification, p))), DERIVED),
    ]


def family_fixture(l):
    """
    Q = (x^(2l+2), y^(2l+2)), I = Q + (x^(2i+1) y^(2l-2i+1) : 0 <= i <= l),
    with Sally module of rank l.
    """
    a = 2 * l + 2
    spec = IdealSpec(2, [(a, 0), (0, a)],
                     [(2 * i + 1, 2 * l - 2 * i + 1) for i in range(l + 1)],
                     'family-%d' % l)
    e0 = 4 * (l + 1)**2
    e1 = 2 * l**2 + 3 * l + 1
    tags = {1: 'NEAR_FREE', 2: 'S1_4_D2(ii)'}
    claims = lemma_claims() + [
        Claim('i2_equals_qi', 'I^2 != QI', False,
              attrgetter('flags.i2_equals_qi'), DERIVED),
        Claim('hilbert_function',
              'H(n) = %d C(n+2, 2) - %d (n+1) for 1 <= n <= 8' % (e0, e1),
              tuple(e0 * binomial(n + 2, 2) - e1 * (n + 1) for n in H_RANGE),
              h_values(H_RANGE), PAPER),
        Claim('coefficients', 'e = (%d, %d, 0)' % (e0, e1), (e0, e1, 0),
              attrgetter('e.e'), PAPER),
        Claim('postulation', 'H(n) is polynomial from n = 1 on', True,
              lambda p: p.e.postulation <= 1, PAPER),
        Claim('colength', 'l(A/I) = 2l^2 + 6l + 3',
              2 * l**2 + 6 * l + 3, attrgetter('len_ai'), DERIVED),
        Claim('rank', 'rank of the Sally module is %d' % l, l,
              attrgetter('rank'), PAPER),
        Claim('m', 'm = l - 1', l - 1, attrgetter('m_inv'), DERIVED),
        Claim('powers_integrally_closed',
              'I^2 and I^3 are integrally closed', True,
              lambda p: all(is_integrally_closed(power(p.I, n))
                            for n in (2, 3)), PAPER),
        Claim('classification', 'classified as %s' %
              tags.get(l, 'UNCLASSIFIED'), tags.get(l, 'UNCLASSIFIED'),
              tag, DERIVED),
    ]
    if l == 2:
        claims.append(Claim('sally_lengths', 's_n = 2n + 2 for 1 <= n <= 6',
                            tuple(2 * n + 2 for n in S_RANGE),
                            s_values(S_RANGE), DERIVED))
    return Fixture(spec, claims + common_claims())


def free_fixture():
    """Q = (x^5, y^5), I = Q + (x^2 y^3, x^3 y^2), with free Sally module."""
    spec = IdealSpec(2, [(5, 0), (0, 5)], [(2, 3), (3, 2)], 'x5y5')
    claims = lemma_claims() + [
        Claim('reduction', 'Q is a reduction of I', True,
              attrgetter('flags.reduction'), PAPER),
        Claim('colength', 'l(A/I) = 17', 17, attrgetter('len_ai'), DERIVED),
        Claim('sally_lengths', 's_n = 2n for 1 <= n <= 6',
              tuple(2 * n for n in S_RANGE), s_values(S_RANGE), PAPER),
        Claim('classification', 'S is free of rank 2', 'FREE', tag, PAPER),
        Claim('rank', 'rank of the Sally module is 2', 2,
              attrgetter('rank'), PAPER),
        Claim('coefficients', 'e = (25, 10, 2)', (25, 10, 2),
              attrgetter('e.e'), DERIVED),
        Claim('hilbert_function',
              'H(n) = 25 C(n+2, 2) - 10 (n+1) + 2 for 0 <= n <= 8',
              tuple(25 * binomial(n + 2, 2) - 10 * (n + 1) + 2
                    for n in range(9)),
              h_values(range(9)), DERIVED),
        Claim('m', 'm = -1', -1, attrgetter('m_inv'), DERIVED),
        Claim('reduction_number', 'I^3 = QI^2 but I^2 != QI', 2,
              attrgetter('reduction_number'), DERIVED),
        Claim('integrally_closed', 'I is not integrally closed', False,
              attrgetter('flags.integrally_closed'), DERIVED),
    ]
    return Fixture(spec, claims + common_claims())


def s1_3_fixture():
    spec = IdealSpec(2, [(7, 0), (0, 7)], [(1, 6), (2, 5), (4, 3), (5, 2)],
                     'ex-3.8-1')
    claims = lemma_claims() + [
        Claim('s1_s2', 'l(I^2/QI) = 3 and l(I^3/Q^2I) = 5', (3, 5),
              s_values((1, 2)), PAPER),
        Claim('classification', '0 -> B(-2) -> B(-1)^3 -> S -> 0',
              'S1_3(i)', tag, PAPER),
        Claim('sally_lengths', 's_n = 2n + 1 for 1 <= n <= 6',
              tuple(2 * n + 1 for n in S_RANGE), s_values(S_RANGE),
              DERIVED),
        Claim('colength', 'l(A/I) = 30', 30, attrgetter('len_ai'), DERIVED),
        Claim('e1', 'e_1 = e_0 - l(A/I) + 2',
              lambda p: p.e.e[0] - p.len_ai + 2, lambda p: p.e.e[1], PAPER),
        Claim('e2', 'e_2 = 1', 1, lambda p: p.e.e[2], DERIVED),
        Claim('m', 'm = 0', 0, attrgetter('m_inv'), DERIVED),
    ]
    return Fixture(spec, claims + common_claims())


def s1_4_fixture(subcase):
    if subcase == 'i':
        spec = IdealSpec(2, [(8, 0), (0, 8)],
                         [(2, 6), (3, 5), (5, 3), (6, 2)], 'ex-3.8-2')
        s2, colength, shift, resolution = 7, 39, 2, 'B(-2) -> B(-1)^4'
        s_n = tuple(3 * n + 1 for n in S_RANGE)
    else:
        spec = IdealSpec(2, [(7, 0), (0, 7)],
                         [(1, 6), (3, 4), (4, 3), (6, 1)], 'ex-3.8-3')
        s2, colength, shift, resolution = 6, 30, 0, 'B(-2)^2 -> B(-1)^4'
        s_n = tuple(2 * n + 2 for n in S_RANGE)
    drop = 1 if subcase == 'i' else 2
    claims = lemma_claims() + [
        Claim('s1_s2', 'l(I^2/QI) = 4 and l(I^3/Q^2I) = %d' % s2, (4, s2),
              s_values((1, 2)), PAPER),
        Claim('classification', '0 -> %s -> S -> 0' % resolution,
              'S1_4_D2(%s)' % subcase, tag, PAPER),
        Claim('sally_lengths', 's_n for 1 <= n <= 6 from the resolution',
              s_n, s_values(S_RANGE), DERIVED),
        Claim('colength', 'l(A/I) = %d' % colength, colength,
              attrgetter('len_ai'), DERIVED),
        Claim('hilbert_function',
              'H(n) = e_0 C(n+2, 2) - e_1 (n+1) + %d for 1 <= n <= 8'
              % shift, h_form(H_RANGE, shift), h_values(H_RANGE), PAPER),
        Claim('e2', 'e_2 = e_1 - e_0 + l(A/I) - %d' % drop,
              lambda p: p.e.e[1] - p.e.e[0] + p.len_ai - drop,
              lambda p: p.e.e[2], PAPER),
    ]
    return Fixture(spec, claims + common_claims())


def remark_fixture():
    """A three-dimensional instance with l(I^2/QI) = 4, l(I^3/Q^2I) = 9."""
    spec = IdealSpec(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3)],
                     [(2, 1, 0), (1, 2, 0), (0, 2, 1), (0, 1, 2), (2, 0, 1),
                      (1, 0, 2)], 'remark-d3')
    claims = lemma_claims() + [
        Claim('s1_s2', 'l(I^2/QI) = 4 and l(I^3/Q^2I) = 9', (4, 9),
              s_values((1, 2)), PAPER),
        Claim('neither_s1_3_nor_s1_4',
              'matches neither the l(I^2/QI) = 3 nor the l(I^2/QI) = 4 case',
              True,
              lambda p: tag(p) is None or
              not tag(p).startswith(('S1_3', 'S1_4_D2')), PAPER),
        Claim('main_inequality', 'e_1 >= e_0 - l(A/I) + e_2', True,
              lambda p: p.e.e[1] >= p.e.e[0] - p.len_ai + p.e.e[2], PAPER),
        Claim('colength', 'l(A/I) = 11', 11, attrgetter('len_ai'), DERIVED),
        Claim('coefficients', 'e_0, e_1, e_2 = 27, 18, 1', (27, 18, 1),
              lambda p: p.e.e[:3], DERIVED),
        Claim('rank', 'rank of the Sally module is 2', 2,
              attrgetter('rank'), DERIVED),
        Claim('classification', 'm = 0 with c = 3 = d', 'NEAR_FREE', tag,
              DERIVED),
    ]
    return Fixture(spec, claims + common_claims())


def builtin_fixtures():
    """Returns all built-in fixtures, in suite order."""
    return ([family_fixture(l) for l in (1, 2, 3)] +
            [free_fixture(), s1_3_fixture(), s1_4_fixture('i'),
             s1_4_fixture('ii'), remark_fixture()])


def get_fixture(label):
    """Returns the built-in fixture with the given label."""
    for fixture in builtin_fixtures():
        if fixture.spec.label == label:
            return fixture
    raise ValueError("Unknown fixture %r; choose one of %s" % (
            label, ', '.join(f.spec.label for f in builtin_fixtures())))

# -*- coding: utf-8 -*-

"""
Inequalities, identities and closed-form predictions checked on a profile.
Every check yields a `Check` entry; failures are entries, not exceptions.
"""

from collections import namedtuple

from ..hilbert import binomial, finite_differences
from .profile import m_value


class Check(namedtuple('Check', ['name', 'relation', 'lhs', 'rhs', 'holds',
                                 'heuristic'])):
    """
    Outcome of comparing `lhs` and `rhs` under `relation` ('>=', '==',
    '<=>' or 'in'). Heuristic checks rest on an unproven stop rule and
    never count as violations.
    """
    __slots__ = ()

    @property
    def violated(self):
        return not self.holds and not self.heuristic

    def __str__(self):
        return '%s: %s %s %s [%s%s]' % (
                self.name, self.lhs, self.relation, self.rhs,
                'ok' if self.holds else 'FAILED',
                ', heuristic' if self.heuristic else '')


def _compare(name, relation, lhs, rhs, heuristic=False):
    if relation == '>=':
        holds = lhs >= rhs
    elif relation == 'in':
        holds = lhs in rhs
    else:
        holds = lhs == rhs
    return Check(name, relation, lhs, rhs, holds, heuristic)


def sally_identity(profile, n):
    """e_0 C(n+d, d) - (e_0 - l(A/I)) C(n+d-1, d-1), which is H(n) + s_n."""
    d = profile.d
    e0 = profile.e.e[0]
    return (e0 * binomial(n + d, d) -
            (e0 - profile.len_ai) * binomial(n + d - 1, d - 1))


def check_inequalities(profile):
    """
    Returns the list of Checks applying to `profile`: Northcott's
    inequality always, Narita's e_2 >= 0 for d >= 2, the Sally identity and
    Huneke-Ooishi criterion, the d-th difference of H and the multiplicity,
    and under I^3 = QI^2 and m I^2 in QI (d >= 2) the main inequality
    e_1 >= e_0 - l(A/I) + e_2, the range of m and the numerical ranges of
    the classification. For integrally closed I the reverse inequality and
    the resulting equality are added; for Ratliff-Rush closed I in d = 2 the
    equality is added, flagged heuristic if the closure was.
    """
    d = profile.d
    e = profile.e.e
    e0, e1 = e[0], e[1]
    e2 = e[2] if d >= 2 else 0
    len_ai = profile.len_ai
    flags = profile.flags
    values = profile.table.values
    checks = [_compare('northcott', '>=', e1, e0 - len_ai)]
    if d >= 2:
        checks.append(_compare('narita', '>=', e2, 0))
    checks.append(_compare(
            'sally_identity', '==',
            tuple(values[n] + profile.s_at(n) for n in range(profile.N + 1)),
            tuple(sally_identity(profile, n) for n in range(profile.N + 1))))
    checks.append(_compare('huneke_ooishi', '<=>', e1 == e0 - len_ai,
                           flags.i2_equals_qi))
    diffs = finite_differences(values, d)[profile.e.postulation:]
    checks.append(_compare('difference_is_e0', '==', tuple(diffs),
                           (e0,) * len(diffs)))
    checks.append(_compare('multiplicity', '==', e0, profile.len_aq))

    if d >= 2 and flags.lemma:
        checks.append(_compare('main_inequality', '>=', e1,
                               e0 - len_ai + e2))
        if not flags.i2_equals_qi:
            m = m_value(e, len_ai)
            checks.append(Check('m_range', 'in', m,
                                (-1, profile.rank - 1),
                                -1 <= m <= profile.rank - 1, False))
        s1, s2 = profile.s_at(1), profile.s_at(2)
        if s1 == 3 and s2 < 3 * d:
            allowed = (3 * d - 1, 3 * d - 3) if d >= 3 else (3 * d - 1,)
            checks.append(_compare('s1_3_range', 'in', s2, allowed))
        if d == 2 and s1 == 4 and s2 < 8:
            checks.append(_compare('s1_4_range', 'in', s2, (6, 7)))
        if flags.integrally_closed:
            checks.append(_compare('integrally_closed_equality', '==', e1,
                                   e0 - len_ai + e2))
        if d == 2 and flags.ratliff_rush_closed:
            checks.append(_compare('ratliff_rush_equality', '==', e1,
                                   e0 - len_ai + e2,
                                   heuristic=bool(
                                       flags.ratliff_rush_heuristic)))
    if d >= 2 and flags.integrally_closed:
        checks.append(_compare('sally_itoh', '>=', e2, e1 - e0 + len_ai))
    return checks


def verify_closed_form(classification, profile):
    """
    Compares the predictions of `classification` with the computed
    `profile`: the closed form of H(n) over its valid range within the
    window, s_n from the predicted resolution for 1 <= n <= N, and the
    predicted coefficient relations. Returns a list of Checks.
    """
    checks = []
    if classification is None:
        return checks
    form = classification.closed_form
    if form is not None:
        for n in range(form.n_min, profile.table.N + 1):
            checks.append(_compare('H(%d)' % n, '==',
                                   profile.table.values[n], form(n)))
    if classification.resolution is not None:
        for n in range(1, profile.N + 1):
            checks.append(_compare(
                    's(%d)' % n, '==', profile.s_at(n),
                    classification.predicted_s(n, profile.d)))
    for i, value in classification.relations:
        checks.append(_compare('e%d' % i, '==', profile.e.e[i], value))
    return checks


def violations(checks):
    return [check for check in checks if check.violated]

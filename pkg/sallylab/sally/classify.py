# -*- coding: utf-8 -*-

"""
Classification of Sally modules by their numerical profile, with the
predicted resolution shape, Hilbert function and coefficient relations of
each class.

Tags are tried in the order ZERO, FREE, S1_3, S1_4_D2, NEAR_FREE; an
instance matching none of them is UNCLASSIFIED.
"""

from collections import namedtuple

from ..errors import HypothesisViolated, RangeViolation
from ..hilbert import binomial, shifted_free_length

ZERO = 'ZERO'
FREE = 'FREE'
NEAR_FREE = 'NEAR_FREE'
S1_3 = 'S1_3'
S1_4_D2 = 'S1_4_D2'
UNCLASSIFIED = 'UNCLASSIFIED'
TAGS = (ZERO, FREE, S1_3, S1_4_D2, NEAR_FREE, UNCLASSIFIED)


class ClosedForm(namedtuple('ClosedForm', ['terms', 'n_min', 'free'])):
    """
    Predicted Hilbert function, claimed for all n >= `n_min`: the sum of
    coef * C(n+a, b) over the `terms` (coef, a, b), plus coef * l(B(-a)_n)
    over the `free` terms (coef, a, dim), B a polynomial ring in dim
    variables.
    """
    __slots__ = ()

    def __new__(cls, terms, n_min, free=()):
        return super(ClosedForm, cls).__new__(cls, tuple(terms), n_min,
                                              tuple(free))

    def __call__(self, n):
        return (sum(coef * binomial(n + a, b) for coef, a, b in self.terms) +
                sum(coef * shifted_free_length(n, a, dim)
                    for coef, a, dim in self.free))

    def __str__(self):
        parts = ['%d*C(n%+d, %d)' % term for term in self.terms]
        parts.extend('%d*l(B(-%d)_n)' % (coef, a) for coef, a, _ in self.free)
        return '%s for n >= %d' % (' + '.join(parts), self.n_min)


class Classification(namedtuple('Classification',
                                ['tag', 'subcase', 'c', 'depth',
                                 'resolution', 'closed_form', 'relations'])):
    """
    A classification tag with its predictions:

    - `subcase`: 'i' or 'ii' for S1_3 and S1_4_D2, otherwise None
    - `c`: the number of generators of the ideal quotient of a NEAR_FREE
      Sally module
    - `depth`: predicted depth of the associated graded ring, an integer, a
      string such as '>= 1', or None if nothing is predicted
    - `resolution`: Betti shape of S as (shift, signed multiplicity) pairs,
      so that s_n = sum mult * l(B(-shift)_n), or None
    - `closed_form`: predicted Hilbert function, or None
    - `relations`: pairs (i, value) predicting e_i = value
    """
    __slots__ = ()

    @property
    def name(self):
        return self.tag + ('(%s)' % self.subcase if self.subcase else '')

    def predicted_s(self, n, d):
        if self.resolution is None:
            return None
        return sum(mult * shifted_free_length(n, shift, d)
                   for shift, mult in self.resolution)


def classifiable(profile):
    """Whether classify() accepts `profile`."""
    return profile.flags.i2_equals_qi or profile.flags.lemma


def _resolution_form(profile, resolution):
    """
    Hilbert function predicted from a resolution of S through
    H(n) = e_0 C(n+d, d) - (e_0 - l(A/I)) C(n+d-1, d-1) - s_n. Valid for
    n >= 0 since the resolution has no terms in degree 0.
    """
    d = profile.d
    e0 = profile.e.e[0]
    terms = [(e0, d, d), (profile.len_ai - e0, d - 1, d - 1)]
    free = [(-mult, shift, d) for shift, mult in resolution]
    return ClosedForm(terms, 0, free)


def _near_free_resolution(rank, c):
    """B(-1)^(rank-1) plus the Koszul resolution of (X_1, ..., X_c)B."""
    resolution = [(1, rank - 1)] if rank > 1 else []
    for k in range(1, c + 1):
        mult = (-1)**(k - 1) * binomial(c, k)
        if resolution and resolution[0][0] == k:
            resolution[0] = (k, resolution[0][1] + mult)
        else:
            resolution.append((k, mult))
    return tuple(resolution)


def classify(profile):
    """
    Returns the Classification of a SallyProfile. Raises HypothesisViolated
    unless I^2 = QI, or I^3 = QI^2 and m I^2 in QI. Raises RangeViolation
    where a proven numerical range is left.
    """
    flags = profile.flags
    d = profile.d
    e0, e1 = profile.e.e[0], profile.e.e[1]
    len_ai = profile.len_ai
    rank = profile.rank
    if flags.i2_equals_qi:
        return Classification(
                ZERO, None, None, 'Cohen-Macaulay', (),
                ClosedForm(((e0, d, d), (-e1, d - 1, d - 1)), 0),
                ((1, e0 - len_ai),) + tuple((i, 0) for i in range(2, d + 1)))
    if not flags.lemma:
        raise HypothesisViolated("Classification needs I^3 = QI^2 and "
                                 "m I^2 in QI (Q = %s, I = %s)" %
                                 (profile.Q, profile.I))
    m = profile.m_inv
    if m is None:
        return Classification(UNCLASSIFIED, None, None, None, None, None, ())
    s1, s2 = profile.s_at(1), profile.s_at(2)

    if m == -1:
        return Classification(
                FREE, None, None, '>= %d' % (d - 1), ((1, rank),),
                ClosedForm(((e0, d, d), (-e1, d - 1, d - 1),
                            (rank, d - 2, d - 2)), 0),
                ((2, rank),))

    if s1 == 3 and s2 < 3 * d:
        if s2 == 3 * d - 1:
            resolution = ((1, 3), (2, -1))
            if d >= 3:
                form = ClosedForm(((e0, d, d), (-e1, d - 1, d - 1),
                                   (1, d - 2, d - 2), (1, d - 3, d - 3)), 0)
            else:
                form = _resolution_form(profile, resolution)
            return Classification(S1_3, 'i', None, d - 2, resolution, form,
                                  ((1, e0 - len_ai + 2),
                                   (2, e1 - e0 + len_ai - 1)))
        if s2 == 3 * d - 3 and d >= 3:
            resolution = ((1, 3), (2, -3), (3, 1))
            if d >= 4:
                form = ClosedForm(((e0, d, d), (-e1, d - 1, d - 1),
                                   (1, d - 4, d - 4)), 0)
            else:
                form = _resolution_form(profile, resolution)
            return Classification(S1_3, 'ii', None, d - 3, resolution, form,
                                  ((1, e0 - len_ai + 1),
                                   (2, e1 - e0 + len_ai - 1)))
        raise RangeViolation("l(I^2/QI) = 3 and l(I^3/Q^2I) = %d < 3d = %d, "
                             "but it is not 3d-1, nor 3d-3 with d >= 3"
                             % (s2, 3 * d))

    if d == 2 and s1 == 4 and s2 < 8:
        if s2 == 7:
            return Classification(
                    S1_4_D2, 'i', None, 0, ((1, 4), (2, -1)),
                    ClosedForm(((e0, 2, 2), (-e1, 1, 1), (2, 0, 0)), 1),
                    ((1, e0 - len_ai + 3), (2, e1 - e0 + len_ai - 1)))
        if s2 == 6:
            return Classification(
                    S1_4_D2, 'ii', None, 0, ((1, 4), (2, -2)),
                    ClosedForm(((e0, 2, 2), (-e1, 1, 1)), 1),
                    ((1, e0 - len_ai + 2), (2, e1 - e0 + len_ai - 2)))
        raise RangeViolation("d = 2, l(I^2/QI) = 4 and l(I^3/Q^2I) = %d < 8, "
                             "but not 6 or 7" % s2)

    if m == 0:
        c = s1 - rank + 1
        if not 2 <= c <= d:
            raise RangeViolation("m = 0 but c = l(I^2/QI) - rank + 1 = %d "
                                 "outside [2, %d]" % (c, d))
        terms = [(e0, d, d), (-e1, d - 1, d - 1), (rank - 1, d - 2, d - 2)]
        if c < d:
            terms.append((1, d - c - 1, d - c - 1))
        return Classification(
                NEAR_FREE, None, c, d - c, _near_free_resolution(rank, c),
                ClosedForm(tuple(terms), 0 if c < d else 1),
                ((2, rank - 1),))

    return Classification(UNCLASSIFIED, None, None, None, None, None, ())

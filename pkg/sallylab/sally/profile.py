# -*- coding: utf-8 -*-

"""
Numerical data of the Sally module S_Q(I) = sum_{n>=1} I^(n+1)/IQ^n of an
m-primary monomial ideal I over a monomial parameter reduction Q.
"""

from collections import namedtuple

from .. import config
from ..closures import (integral_closure, is_reduction, ratliff_rush_chain,
                        reduction_number, DEFAULT_RATLIFF_RUSH_MAX)
from ..errors import (NegativeRank, NotAReduction, NotParameterIdeal,
                      RangeViolation)
from ..hilbert import binomial_fit, configured_window, hilbert_function
from ..ideals import (DEFAULT_MAX_POINTS, bounding_box, check_dimensions,
                      colength, contains, is_parameter_ideal, max_ideal,
                      product, quotient_length)
from .classify import classify, classifiable


def coefficient(e, i):
    """e_i of a HilbertCoefficients tuple or a plain sequence, 0 if absent."""
    e = getattr(e, 'e', e)
    return e[i] if i < len(e) else 0


def check_parameter_reduction(Q, I):
    """
    Raises unless `Q` is generated by pure powers of all variables and is a
    reduction of `I`.
    """
    check_dimensions(Q, I)
    if not is_parameter_ideal(Q):
        raise NotParameterIdeal("%s is not generated by pure powers of all "
                                "%d variables" % (Q, Q.dim))
    if not is_reduction(Q, I):
        raise NotAReduction("%s is not a reduction of %s" % (Q, I))


def sally_lengths(I, Q, N, table=None, max_points=DEFAULT_MAX_POINTS):
    """
    Returns (s_1, ..., s_N) with s_n = l(I^(n+1)/IQ^n). If the Hilbert
    function `table` of I reaches up to N, its values supply l(A/I^(n+1)).
    """
    check_parameter_reduction(Q, I)
    if N < 1:
        raise ValueError("Need N >= 1, got %d" % N)
    if table is not None and table.N < N:
        table = None
    lengths = []
    IQn = I
    In1 = I
    for n in range(1, N + 1):
        IQn = product(IQn, Q)
        if table is None:
            In1 = product(In1, I)
            lengths.append(quotient_length(IQn, In1, max_points=max_points))
        else:
            lengths.append(colength(IQn, max_points=max_points) -
                           table.values[n])
    return tuple(lengths)


class Hypotheses(namedtuple('Hypotheses',
                            ['reduction', 'i2_equals_qi', 'i3_equals_qi2',
                             'm_i2_in_qi', 'integrally_closed',
                             'ratliff_rush_closed', 'ratliff_rush_heuristic'])):
    """
    Ideal-theoretic conditions of an instance (Q, I). The closure flags are
    None when they were not computed; `ratliff_rush_closed` is only computed
    in dimension two.
    """
    __slots__ = ()

    @property
    def lemma(self):
        """I^3 = QI^2 and m I^2 in QI."""
        return self.i3_equals_qi2 and self.m_i2_in_qi


def check_hypotheses(I, Q, with_closures=True,
                     ratliff_rush_max=DEFAULT_RATLIFF_RUSH_MAX,
                     max_points=DEFAULT_MAX_POINTS):
    """
    Computes the flags of `Hypotheses` for the instance (Q, I). The closure
    flags are computed if `with_closures` is True, or if it is 'lemma' and
    I^3 = QI^2 and m I^2 in QI hold.
    """
    check_dimensions(Q, I)
    bounding_box(Q)
    bounding_box(I)
    QI = product(Q, I)
    I2 = product(I, I)
    flags = dict(reduction=is_reduction(Q, I),
                 i2_equals_qi=I2 == QI,
                 i3_equals_qi2=product(I2, I) == product(Q, I2),
                 m_i2_in_qi=contains(QI, product(max_ideal(I.dim), I2)),
                 integrally_closed=None,
                 ratliff_rush_closed=None,
                 ratliff_rush_heuristic=None)
    if with_closures is True or (with_closures == 'lemma' and
                                 flags['i3_equals_qi2'] and
                                 flags['m_i2_in_qi']):
        closure = integral_closure(I, max_points=max_points)
        flags['integrally_closed'] = closure == I
        if I.dim == 2:
            chain = ratliff_rush_chain(I, ratliff_rush_max, closure=closure)
            flags['ratliff_rush_closed'] = chain.ideal == I
            flags['ratliff_rush_heuristic'] = chain.heuristic
    return Hypotheses(**flags)


def sally_rank(e, len_ai):
    """
    Returns the rank e_1 - e_0 + l(A/I) of the Sally module.
    """
    rank = coefficient(e, 1) - coefficient(e, 0) + len_ai
    if rank < 0:
        raise NegativeRank("e1 - e0 + l(A/I) = %d - %d + %d < 0" %
                           (coefficient(e, 1), coefficient(e, 0), len_ai))
    return rank


def m_value(e, len_ai):
    """l(A/I) - e_0 + e_1 - e_2 - 1, without any range check."""
    return (len_ai - coefficient(e, 0) + coefficient(e, 1) -
            coefficient(e, 2) - 1)


def m_invariant(e, len_ai, rank=None):
    """
    Returns m = l(A/I) - e_0 + e_1 - e_2 - 1 for an instance with d >= 2,
    I^2 != QI, I^3 = QI^2 and m I^2 in QI, where -1 <= m <= rank - 1 holds.
    """
    if rank is None:
        rank = sally_rank(e, len_ai)
    m = m_value(e, len_ai)
    if not -1 <= m <= rank - 1:
        raise RangeViolation("m = %d outside [-1, %d] (e = %r, l(A/I) = %d)"
                             % (m, rank - 1, tuple(getattr(e, 'e', e)),
                                len_ai))
    return m


class SallyProfile(namedtuple('SallyProfile',
                              ['d', 'I', 'Q', 'table', 's', 'len_ai',
                               'len_aq', 'e', 'rank', 'm_inv', 'flags',
                               'reduction_number', 'classification'])):
    """
    Everything computed about an instance (Q, I): the Hilbert function
    `table` over the window, the Sally lengths `s` = (s_1, ..., s_N), the
    colengths of I and Q, the Hilbert coefficients `e`, the Sally rank, the
    invariant m (None outside its hypotheses), the `flags`, the reduction
    number of I with respect to Q and the classification (None if the hypotheses of every tag fail).
    """
    __slots__ = ()

    @property
    def N(self):
        return len(self.s)

    def s_at(self, n):
        """s_n, including s_0 = 0."""
        return self.s[n - 1] if n else 0

    @property
    def main_hypotheses(self):
        return (self.d >= 2 and self.flags.lemma and
                not self.flags.i2_equals_qi)


def analyze(Q, I, window=None, cfg=None, with_closures=True):
    """
    Computes the full SallyProfile of the instance (Q, I), including its
    classification. Settings not passed explicitly come from `cfg`, or the
    package defaults.
    """
    if cfg is None:
        cfg = config.default_config()
    check_parameter_reduction(Q, I)
    max_points = int(cfg['colength.max_points'])
    N = window or configured_window(cfg, I.dim)
    table = hilbert_function(I, N,
                             num_workers=config.num_workers(
                                     cfg, 'hilbert.num_workers'),
                             max_points=max_points)
    e = binomial_fit(table)
    len_ai = table.values[0]
    flags = check_hypotheses(
            I, Q, with_closures=with_closures,
            ratliff_rush_max=int(cfg['closures.ratliff_rush_max']),
            max_points=max_points)
    s = sally_lengths(I, Q, N, table=table, max_points=max_points)
    rank = sally_rank(e, len_ai)
    r = reduction_number(Q, I, int(cfg['closures.reduction_max']))
    profile = SallyProfile(I.dim, I, Q, table, s, len_ai,
                           colength(Q, max_points=max_points), e, rank,
                           None, flags, r, None)
    if profile.main_hypotheses:
        profile = profile._replace(m_inv=m_invariant(e, len_ai, rank))
    if classifiable(profile):
        profile = profile._replace(classification=classify(profile))
    return profile

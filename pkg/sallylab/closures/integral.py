# -*- coding: utf-8 -*-

"""
Integral closure, reductions and reduction numbers of monomial ideals.
"""

import numpy as np

from ..errors import BudgetExceeded, NotAReduction
from ..ideals import (MonomialIdeal, bounding_box, check_dimensions,
                      contains, power, product, standard_monomials,
                      DEFAULT_MAX_POINTS)
from .newton import NewtonPolyhedron

DEFAULT_REDUCTION_MAX = 10


def integral_closure(ideal, max_points=DEFAULT_MAX_POINTS):
    """
    Returns the integral closure of the m-primary `ideal`: the ideal of all
    monomials in its Newton polyhedron. Only the standard monomials of
    `ideal` need testing, everything else is in `ideal` already.
    """
    polyhedron = NewtonPolyhedron.of(ideal)
    candidates = standard_monomials(ideal, max_points=max_points)
    integral = [p for p in candidates.tolist() if p in polyhedron]
    if not integral:
        return ideal
    return MonomialIdeal(ideal.dim, np.concatenate(
            (ideal.exponents, np.asarray(integral, dtype=np.int64))))


def is_integrally_closed(ideal, max_points=DEFAULT_MAX_POINTS):
    polyhedron = NewtonPolyhedron.of(ideal)
    candidates = standard_monomials(ideal, max_points=max_points)
    return not any(p in polyhedron for p in candidates.tolist())


def is_reduction(Q, I):
    """
    True iff `Q` is a reduction of `I`, i.e. Q is contained in I and every
    generator of I lies in the Newton polyhedron of Q.
    """
    check_dimensions(Q, I)
    bounding_box(Q)
    bounding_box(I)
    if not contains(I, Q):
        return False
    polyhedron = NewtonPolyhedron.of(Q)
    return all(g in polyhedron for g in I.gens)


def reduction_number(Q, I, r_max=DEFAULT_REDUCTION_MAX):
    """
    Returns the least r <= `r_max` with I^(r+1) = Q I^r.
    """
    if not is_reduction(Q, I):
        raise NotAReduction("%s is not a reduction of %s" % (Q, I))
    current = power(I, 0)
    for r in range(r_max + 1):
        following = product(current, I)
        if following == product(Q, current):
            return r
        current = following
    raise BudgetExceeded("I^(r+1) != Q I^r for all r <= %d (Q = %s, I = %s)"
                         % (r_max, Q, I))

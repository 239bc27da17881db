# -*- coding: utf-8 -*-

"""
Lattice counting below the staircase of an m-primary monomial ideal.
"""

import numpy as np

from ..errors import BudgetExceeded, NotContained, NotMPrimary
from .monomials import (CHUNK_ELEMENTS, check_dimensions, contains,
                        divisible_rows)

DEFAULT_MAX_POINTS = 20000000


def bounding_box(ideal):
    """
    Returns the exponents of the pure-power generators, one per variable.
    The staircase of `ideal` lies inside the box they span.
    """
    box = ideal.pure_powers()
    missing = [i for i, a in enumerate(box) if a is None]
    if missing:
        raise NotMPrimary("%s has no pure power of variable(s) %s" %
                          (ideal, ', '.join(str(i) for i in missing)))
    return box


def is_m_primary(ideal):
    return None not in ideal.pure_powers()


def _check_budget(box, max_points):
    volume = int(np.prod(box, dtype=object))
    if max_points is not None and volume > max_points:
        raise BudgetExceeded("Bounding box %r holds %d lattice points, "
                             "budget is %d" % (tuple(box), volume,
                                               max_points))


def box_points(box):
    """All lattice points of the box [0, a_1) x ... x [0, a_d), as rows."""
    return np.indices(box, dtype=np.int64).reshape(len(box), -1).T


def standard_monomials(ideal, max_points=DEFAULT_MAX_POINTS):
    """
    Returns the exponent rows of all monomials outside `ideal`, found by
    testing every point of the bounding box for membership.
    """
    box = bounding_box(ideal)
    _check_budget(box, max_points)
    points = box_points(box)
    return points[~divisible_rows(points, ideal.exponents)]


def colength(ideal, max_points=DEFAULT_MAX_POINTS):
    """
    Returns l(A/I), the number of monomials outside the m-primary `ideal`.

    The box is walked column by column over the first d-1 coordinates; the
    height of each column is the smallest last coordinate of a generator
    dividing it in those coordinates, capped by the box.
    """
    box = bounding_box(ideal)
    _check_budget(box, max_points)
    if 0 in box:
        return 0
    if ideal.dim == 1:
        return int(box[0])
    gens = ideal.exponents
    columns = box_points(box[:-1])
    heights = np.full(len(columns), box[-1], dtype=np.int64)
    step = max(1, CHUNK_ELEMENTS // (len(columns) * ideal.dim))
    for start in range(0, len(gens), step):
        block = gens[start:start + step]
        below = (block[np.newaxis, :, :-1] <=
                 columns[:, np.newaxis]).all(-1)
        tops = np.where(below, block[np.newaxis, :, -1], box[-1]).min(1)
        np.minimum(heights, tops, out=heights)
    return int(heights.sum())


def quotient_length(J, I, max_points=DEFAULT_MAX_POINTS):
    """
    Returns l(I/J) = l(A/J) - l(A/I) for m-primary J contained in I.
    """
    check_dimensions(J, I)
    if not contains(I, J):
        raise NotContained("%s is not contained in %s" % (J, I))
    return (colength(J, max_points=max_points) -
            colength(I, max_points=max_points))

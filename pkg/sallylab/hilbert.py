# -*- coding: utf-8 -*-

"""
Hilbert functions H(n) = l(A/I^(n+1)) of m-primary monomial ideals and exact
extraction of their Hilbert coefficients in the binomial basis

    P(n) = sum_{i=0}^{d} (-1)^i e_i C(n+d-i, d-i).
"""

import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import partial

from .closures import is_reduction
from .errors import InsufficientWindow, NotAReduction, NotParameterIdeal
from .ideals import (DEFAULT_MAX_POINTS, bounding_box, colength,
                     is_parameter_ideal, product)


def default_window(dim):
    """Default window N of a Hilbert function table in dimension `dim`."""
    return 2 * dim + 6


def configured_window(cfg, dim):
    """
    Returns the window configured as hilbert.window, where 0 selects the
    default for `dim`.
    """
    return int(cfg['hilbert.window']) or default_window(dim)


def binomial(a, j):
    """
    C(a, j) for any integer `a`, with C(a, j) = 0 for j < 0. Negative `a`
    follow C(a, j) = (-1)^j C(j-a-1, j).
    """
    if j < 0:
        return 0
    if a < 0:
        return (-1)**j * binomial(j - a - 1, j)
    return math.comb(a, j)


def shifted_free_length(n, shift, dim):
    """
    l(B_n) for the graded free module B(-shift) over a polynomial ring B in
    `dim` variables: C(n-shift+dim-1, dim-1) for n >= shift, else 0.
    """
    if n < shift:
        return 0
    return binomial(n - shift + dim - 1, dim - 1)


def eval_binomial_poly(e, d, n):
    """
    Evaluates sum_{i=0}^{d} (-1)^i e_i C(n+d-i, d-i). Coefficients beyond
    those given count as zero.
    """
    return sum((-1)**i * e_i * binomial(n + d - i, d - i)
               for i, e_i in enumerate(e[:d + 1]))


class HilbertFunctionTable(namedtuple('HilbertFunctionTable',
                                      ['ideal', 'values'])):
    """
    Values H(0), ..., H(N) of the Hilbert function of `ideal`.
    """
    __slots__ = ()

    @property
    def N(self):
        return len(self.values) - 1

    @property
    def dim(self):
        return self.ideal.dim


class HilbertCoefficients(namedtuple('HilbertCoefficients',
                                     ['d', 'e', 'postulation'])):
    """
    Hilbert coefficients (e_0, ..., e_d) and the least n from which the
    Hilbert polynomial agrees with the tabulated function.
    """
    __slots__ = ()

    def __call__(self, n):
        return eval_binomial_poly(self.e, self.d, n)


def hilbert_function(ideal, N, num_workers=1, max_points=DEFAULT_MAX_POINTS):
    """
    Tabulates H(n) = colength(I^(n+1)) for 0 <= n <= N. With `num_workers`
    above one, the colengths are counted in a thread pool; the powers are
    always formed sequentially.
    """
    if N < 0:
        raise ValueError("Window must be nonnegative, got %d" % N)
    bounding_box(ideal)
    powers = [ideal]
    for _ in range(N):
        powers.append(product(powers[-1], ideal))
    count = partial(colength, max_points=max_points)
    if num_workers > 1:
        with ThreadPoolExecutor(num_workers) as pool:
            values = list(pool.map(count, powers))
    else:
        values = [count(J) for J in powers]
    return HilbertFunctionTable(ideal, tuple(values))


def _solve_exact(matrix, rhs):
    """
    Solves a square linear system over the rationals by Gauss-Jordan
    elimination. The matrix must be invertible.
    """
    size = len(matrix)
    rows = [[Fraction(a) for a in row] + [Fraction(b)]
            for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if rows[r][col])
        rows[col], rows[pivot] = rows[pivot], rows[col]
        piv = rows[col][col]
        rows[col] = [a / piv for a in rows[col]]
        for r in range(size):
            f = rows[r][col]
            if r != col and f:
                rows[r] = [a - f * p for a, p in zip(rows[r], rows[col])]
    return [row[-1] for row in rows]


def binomial_fit(table, d=None):
    """
    Fits the Hilbert polynomial to the top d+1 entries of `table`, checks it
    against the entry below, and scans further down for the postulation
    index. Raises InsufficientWindow if the top d+2 entries are not
    polynomial of degree d.
    """
    values = table.values if isinstance(table, HilbertFunctionTable) \
        else tuple(table)
    if d is None:
        if not isinstance(table, HilbertFunctionTable):
            raise ValueError("The dimension d must be given to fit a plain "
                             "sequence of values")
        d = table.dim
    N = len(values) - 1
    if N + 1 < d + 2:
        raise InsufficientWindow("A fit in dimension %d needs %d table "
                                 "entries, got %d" % (d, d + 2, N + 1))
    points = range(N - d, N + 1)
    matrix = [[(-1)**i * binomial(n + d - i, d - i) for i in range(d + 1)]
              for n in points]
    e = _solve_exact(matrix, [values[n] for n in points])
    if any(c.denominator != 1 for c in e):
        raise InsufficientWindow("Top %d entries of %r fit no integer "
                                 "Hilbert polynomial" % (d + 1, values))
    e = tuple(int(c) for c in e)
    n = N - d - 1
    if eval_binomial_poly(e, d, n) != values[n]:
        raise InsufficientWindow("H(%d) = %d deviates from the polynomial "
                                 "fitted to H(%d..%d); enlarge the window"
                                 % (n, values[n], N - d, N))
    while n > 0 and eval_binomial_poly(e, d, n - 1) == values[n - 1]:
        n -= 1
    return HilbertCoefficients(d, e, n)


def finite_differences(values, order):
    """Returns the `order`-th backward differences of a sequence."""
    values = list(values)
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def multiplicity_crosscheck(I, Q, coefficients=None, window=None,
                            max_points=DEFAULT_MAX_POINTS):
    """
    True iff e_0(I) equals l(A/Q) for the parameter reduction `Q` of `I`.
    The coefficients of I are computed unless given.
    """
    if not is_parameter_ideal(Q):
        raise NotParameterIdeal("%s is not generated by pure powers of all "
                                "variables" % Q)
    if not is_reduction(Q, I):
        raise NotAReduction("%s is not a reduction of %s" % (Q, I))
    if coefficients is None:
        window = window or default_window(I.dim)
        coefficients = binomial_fit(
                hilbert_function(I, window, max_points=max_points))
    return coefficients.e[0] == colength(Q, max_points=max_points)

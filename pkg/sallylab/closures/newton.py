# -*- coding: utf-8 -*-

"""
Newton polyhedra of monomial ideals and exact membership testing.

A point v lies in the Newton polyhedron conv(G) + R^d_{>=0} of a generator
set G iff there are weights lambda_j >= 0 summing to one with
sum_j lambda_j g_j <= v componentwise. This is decided by the first phase
of a simplex method over Fractions, pivoting with Bland's rule.
"""

from fractions import Fraction

import numpy as np

from ..errors import MixedDimension


class FeasibilityTableau(object):
    """
    Simplex tableau for the system A x = b, x >= 0 with b >= 0, where the
    columns listed in `basis` form an identity except for the rows in
    `artificial`, which start with an artificial basic variable. Running
    `solve()` minimizes the sum of artificial variables; the system is
    feasible iff that sum reaches zero.
    """
    def __init__(self, A, b, basis, artificial):
        self.rows = [[Fraction(a) for a in row] + [Fraction(rhs)]
                     for row, rhs in zip(A, b)]
        self.num_cols = len(self.rows[0]) - 1
        # artificial variables are numbered past all real columns
        self.basis = list(basis)
        for k, i in enumerate(artificial):
            self.basis[i] = self.num_cols + k
        # phase-one objective row: reduced costs, and minus the current sum
        self.obj = [Fraction(0)] * (self.num_cols + 1)
        for i in artificial:
            for j, a in enumerate(self.rows[i]):
                self.obj[j] -= a

    def pivot(self, r, e):
        row = self.rows[r]
        piv = row[e]
        row[:] = [a / piv for a in row]
        for k, other in enumerate(self.rows):
            f = other[e]
            if k != r and f:
                other[:] = [a - f * p for a, p in zip(other, row)]
        f = self.obj[e]
        self.obj[:] = [a - f * p for a, p in zip(self.obj, row)]
        self.basis[r] = e

    def step(self):
        """
        Performs one pivot. Returns False when the objective is optimal.
        """
        try:
            e = next(j for j in range(self.num_cols) if self.obj[j] < 0)
        except StopIteration:
            return False
        candidates = [(row[-1] / row[e], self.basis[k], k)
                      for k, row in enumerate(self.rows) if row[e] > 0]
        # a phase-one problem is bounded below by zero
        _, _, r = min(candidates)
        self.pivot(r, e)
        return True

    def solve(self):
        while self.step():
            pass
        return self.obj[-1] == 0


def feasible_convex_point(v, points):
    """
    Returns whether some convex combination of the integer `points` is
    componentwise at most `v`, deciding it exactly.
    """
    points = [tuple(p) for p in points]
    if not points:
        return False
    dim = len(v)
    k = len(points)
    # rows 0..d-1: sum_j lambda_j p_j[i] + s_i = v_i; row d: sum_j lambda_j = 1
    A = [[p[i] for p in points] + [int(i == l) for l in range(dim)]
         for i in range(dim)]
    A.append([1] * k + [0] * dim)
    b = list(v) + [1]
    basis = [k + i for i in range(dim)] + [None]
    return FeasibilityTableau(A, b, basis, artificial=[dim]).solve()


class NewtonPolyhedron(object):
    """
    Newton polyhedron conv(vertices) + R^d_{>=0} of a monomial ideal, given
    by the exponents of its generators.
    """
    def __init__(self, dim, vertices):
        vertices = np.asarray(vertices, dtype=np.int64).reshape(-1, dim)
        self.dim = dim
        self.vertices = vertices

    @classmethod
    def of(cls, ideal):
        return cls(ideal.dim, ideal.exponents)

    def __contains__(self, v):
        v = tuple(int(a) for a in v)
        if len(v) != self.dim:
            raise MixedDimension("Point %r does not have dimension %d" %
                                 (v, self.dim))
        vertices = self.vertices
        if not len(vertices):
            return False
        point = np.asarray(v, dtype=np.int64)
        if (vertices <= point).all(1).any():
            return True
        if (point < vertices.min(0)).any():
            return False
        return feasible_convex_point(v, vertices.tolist())

    def __repr__(self):
        return 'NewtonPolyhedron(%d, %r)' % (self.dim, self.vertices.tolist())


def newton_member(v, ideal):
    """
    True iff the exponent vector `v` lies in the Newton polyhedron of `ideal`,
    i.e. the monomial with exponents `v` is integral over `ideal`.
    """
    if len(v) != ideal.dim:
        raise MixedDimension("Point %r does not have dimension %d" %
                             (tuple(v), ideal.dim))
    return v in NewtonPolyhedron.of(ideal)

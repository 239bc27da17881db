# -*- coding: utf-8 -*-

"""
Brute-force reference implementations, written independently of the
package: plain tuples, itertools and Fractions only.
"""

import itertools
from fractions import Fraction


def divides(g, m):
    return all(a <= b for a, b in zip(g, m))


def member(m, gens):
    return any(divides(g, m) for g in gens)


def box_of(gens, dim):
    """Exponents of the pure powers among `gens`, per variable."""
    box = [None] * dim
    for g in gens:
        support = [i for i, a in enumerate(g) if a]
        if not support:
            return [0] * dim
        if len(support) == 1:
            i = support[0]
            box[i] = g[i] if box[i] is None else min(box[i], g[i])
    return box


def points(box):
    return itertools.product(*(range(a) for a in box))


def colength(gens, dim):
    """Counts the lattice points of the bounding box outside the ideal."""
    return sum(1 for p in points(box_of(gens, dim)) if not member(p, gens))


def colon_member(m, I_gens, J_gens):
    """Whether m * g lies in I for all generators g of J."""
    return all(member(tuple(a + b for a, b in zip(m, g)), I_gens)
               for g in J_gens)


def _solve(rows, rhs):
    """Solves a small square system over the rationals, or returns None."""
    n = len(rows)
    m = [[Fraction(a) for a in row] + [Fraction(b)]
         for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][-1] / m[i][i] for i in range(n)]


def _simplex_point_below(v, simplex):
    """
    Whether some convex combination of the `simplex` points is at most `v`,
    by enumerating the vertices of the feasible set of weights.
    """
    k = len(simplex) - 1
    last = simplex[-1]
    if k == 0:
        return divides(last, v)
    # constraints a . lambda <= b on lambda_1..lambda_k
    constraints = [([-int(i == j) for j in range(k)], 0) for i in range(k)]
    constraints.append(([1] * k, 1))
    for i in range(len(v)):
        constraints.append(([p[i] - last[i] for p in simplex[:-1]],
                            v[i] - last[i]))
    for chosen in itertools.combinations(constraints, k):
        weights = _solve([a for a, _ in chosen], [b for _, b in chosen])
        if weights is None:
            continue
        if all(sum(x * y for x, y in zip(a, weights)) <= b
               for a, b in constraints):
            return True
    return False


def newton_member(v, gens):
    """
    Whether `v` lies in conv(gens) + R^d_{>=0}. Minimal points of that set
    lie in the convex hull of at most d generators.
    """
    gens = [tuple(g) for g in gens]
    if member(v, gens):
        return True
    dim = len(v)
    for size in range(2, dim + 1):
        for simplex in itertools.combinations(gens, size):
            if _simplex_point_below(v, simplex):
                return True
    return False


def integral_closure_points(gens, dim):
    """Points of the bounding box lying in the Newton polyhedron."""
    return set(p for p in points(box_of(gens, dim))
               if newton_member(p, gens))

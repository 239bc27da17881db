# -*- coding: utf-8 -*-

"""
Monomials and monomial ideals in d variables.

A monomial is an exponent vector; an ideal is stored by its minimal
generators in graded-lexicographic order, so that equal ideals have equal
representations. Bulk operations (products, dominance tests) run on int64
numpy arrays; the public objects hold plain Python ints.
"""

import operator

import numpy as np

from ..errors import ExponentOverflow, MixedDimension, ZeroDivisorIdeal

VARIABLES = 'xyzw'

# exponents beyond this are rejected; sums of two stay within int64
MAX_EXPONENT = 2**40

# number of array elements compared at once in dominance tests
CHUNK_ELEMENTS = 2**22


def variable_names(dim):
    """
    Returns the names used for the variables: x, y, z, w, or x1..xd.
    """
    if dim <= len(VARIABLES):
        return list(VARIABLES[:dim])
    return ['x%d' % (i + 1) for i in range(dim)]


class Monomial(tuple):
    """
    Exponent vector of a monomial in `len(exponents)` variables.
    """
    __slots__ = ()

    def __new__(cls, exponents):
        exponents = tuple(operator.index(e) for e in exponents)
        if not exponents:
            raise ValueError("A monomial needs at least one variable")
        if min(exponents) < 0:
            raise ValueError("Negative exponent in %r" % (exponents,))
        return super(Monomial, cls).__new__(cls, exponents)

    @classmethod
    def unit(cls, dim):
        return cls((0,) * dim)

    @classmethod
    def variable(cls, index, dim, power=1):
        return cls(power if i == index else 0 for i in range(dim))

    @property
    def dim(self):
        return len(self)

    @property
    def degree(self):
        return sum(self)

    def _check(self, other):
        if len(other) != len(self):
            raise MixedDimension("Monomials %s and %s live in different "
                                 "dimensions" % (self, Monomial(other)))

    def divides(self, other):
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def times(self, other):
        self._check(other)
        return Monomial(a + b for a, b in zip(self, other))

    def lcm(self, other):
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def colon(self, other):
        """Generator of (self) : (other), i.e. lcm(self, other) / other."""
        self._check(other)
        return Monomial(max(a - b, 0) for a, b in zip(self, other))

    def pure_power_of(self):
        """
        Returns the index of the variable this is a nontrivial pure power of,
        or None.
        """
        support = [i for i, e in enumerate(self) if e]
        return support[0] if len(support) == 1 else None

    def sort_key(self):
        return (self.degree,) + tuple(-e for e in self)

    def __repr__(self):
        return 'Monomial(%r)' % (tuple(self),)

    def __str__(self):
        factors = []
        for name, e in zip(variable_names(len(self)), self):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append('%s^%d' % (name, e))
        return '*'.join(factors) or '1'


def as_rows(monomials, dim):
    """
    Converts an iterable of exponent vectors to an int64 array of shape
    (n, dim), checking dimensions and exponent range.
    """
    rows = [tuple(m) for m in monomials]
    for row in rows:
        if len(row) != dim:
            raise MixedDimension("Monomial %r does not have dimension %d" %
                                 (row, dim))
        if any(e < 0 for e in row):
            raise ValueError("Negative exponent in %r" % (row,))
        if any(e > MAX_EXPONENT for e in row):
            raise ExponentOverflow("Exponents of %r exceed %d" %
                                   (row, MAX_EXPONENT))
    return np.array(rows, dtype=np.int64).reshape(-1, dim)


def check_range(rows):
    if rows.size and (rows.min() < 0 or rows.max() > MAX_EXPONENT):
        raise ExponentOverflow("Exponent out of range [0, %d]" %
                               MAX_EXPONENT)


def canonical_order(rows):
    """
    Sorts exponent rows by total degree, ties broken lexicographically with
    the first variable largest (x^2, xy, y^2).
    """
    if len(rows) < 2:
        return rows
    keys = (tuple(-rows[:, i] for i in reversed(range(rows.shape[1]))) +
            (rows.sum(1),))
    return rows[np.lexsort(keys)]


def minimal_rows(rows, dim):
    """
    Returns the minimal elements of a set of exponent rows under
    componentwise order, canonically sorted.
    """
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, dim)
    if len(rows) > 1:
        rows = np.unique(rows, axis=0)
        keep = np.ones(len(rows), dtype=bool)
        step = max(1, CHUNK_ELEMENTS // (len(rows) * dim))
        for start in range(0, len(rows), step):
            block = rows[start:start + step]
            divides = (rows[np.newaxis] <= block[:, np.newaxis]).all(-1)
            # rows are unique, so only the diagonal divides trivially
            divides[np.arange(len(block)),
                    np.arange(start, start + len(block))] = False
            keep[start:start + step] = ~divides.any(1)
        rows = rows[keep]
    return canonical_order(rows)


def divisible_rows(points, gens):
    """
    Returns a boolean array telling which of the exponent rows in `points`
    are divisible by at least one row of `gens`.
    """
    points = np.asarray(points, dtype=np.int64)
    result = np.zeros(len(points), dtype=bool)
    if not len(gens) or not len(points):
        return result
    step = max(1, CHUNK_ELEMENTS // (len(gens) * gens.shape[1]))
    for start in range(0, len(points), step):
        block = points[start:start + step]
        result[start:start + step] = (
                gens[np.newaxis] <= block[:, np.newaxis]).all(-1).any(1)
    return result


class MonomialIdeal(object):
    """
    Monomial ideal of the polynomial (or power series) ring in `dim`
    variables, given by any generating set of monomials. The zero ideal has
    no generators, the unit ideal the single generator 1.
    """
    __slots__ = ('dim', 'gens', '_rows')

    def __init__(self, dim, gens=()):
        if dim < 1:
            raise ValueError("Dimension must be positive, got %r" % dim)
        if not isinstance(gens, np.ndarray):
            gens = as_rows(gens, dim)
        elif gens.ndim != 2 or gens.shape[1] != dim:
            raise MixedDimension("Generator array of shape %r does not "
                                 "have dimension %d" % (gens.shape, dim))
        rows = np.array(minimal_rows(gens, dim))
        rows.flags.writeable = False
        self.dim = dim
        self._rows = rows
        self.gens = tuple(Monomial(row) for row in rows.tolist())

    @property
    def exponents(self):
        """Read-only int64 array of the minimal generators, one per row."""
        return self._rows

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def pure_powers(self):
        """
        Returns, per variable, the smallest exponent of a pure power of that
        variable among the generators (0 for the unit ideal), or None.
        """
        powers = [None] * self.dim
        for g in self.gens:
            if not any(g):
                return [0] * self.dim
            i = g.pure_power_of()
            if i is not None:
                powers[i] = g[i]
        return powers

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and self.gens == other.gens

    def __hash__(self):
        return hash((self.dim, self.gens))

    def __contains__(self, monomial):
        return member(monomial, self)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return 'MonomialIdeal(%d, %r)' % (self.dim,
                                          [tuple(g) for g in self.gens])

    def __str__(self):
        return '(%s)' % ', '.join(str(g) for g in self.gens)


def check_dimensions(*objects):
    """
    Raises MixedDimension unless all ideals and monomials share a dimension.
    """
    dims = set(getattr(o, 'dim', None) or len(o) for o in objects)
    if len(dims) > 1:
        raise MixedDimension("Mixed dimensions %s among %s" %
                             (sorted(dims), ', '.join(str(o) for o in objects)))


def minimalize(gens, dim=None):
    """
    Returns the ideal generated by `gens`, with redundant generators removed.
    The dimension is taken from the monomials, or must be given for an empty
    generating set.
    """
    gens = [Monomial(g) for g in gens]
    if dim is None:
        if not gens:
            raise ValueError("The dimension of an empty generating set "
                             "must be given")
        dim = len(gens[0])
    return MonomialIdeal(dim, gens)


def zero_ideal(dim):
    return MonomialIdeal(dim)


def unit_ideal(dim):
    return MonomialIdeal(dim, [Monomial.unit(dim)])


def max_ideal(dim):
    """The maximal ideal (x_1, ..., x_d)."""
    return MonomialIdeal(dim, np.eye(dim, dtype=np.int64))


def member(monomial, ideal):
    """True iff some generator of `ideal` divides `monomial`."""
    check_dimensions(monomial, ideal)
    return bool(divisible_rows(as_rows([monomial], ideal.dim),
                               ideal.exponents)[0])


def ideal_sum(I, J):
    check_dimensions(I, J)
    return MonomialIdeal(I.dim, np.concatenate((I.exponents, J.exponents)))


def product(I, J):
    check_dimensions(I, J)
    rows = (I.exponents[:, np.newaxis] + J.exponents[np.newaxis])
    rows = rows.reshape(-1, I.dim)
    check_range(rows)
    return MonomialIdeal(I.dim, rows)


def power(I, k):
    """I^k by repeated multiplication; I^0 is the unit ideal."""
    if k < 0:
        raise ValueError("Negative power %d" % k)
    result = unit_ideal(I.dim)
    for _ in range(k):
        result = product(result, I)
    return result


def intersect(I, J):
    """I ∩ J, generated by the pairwise lcms of the generators."""
    check_dimensions(I, J)
    rows = np.maximum(I.exponents[:, np.newaxis], J.exponents[np.newaxis])
    return MonomialIdeal(I.dim, rows.reshape(-1, I.dim))


def colon(I, J):
    """
    I : J, the intersection over the generators g of J of I : g, where
    I : g is generated by the lcm(f, g) / g for the generators f of I.
    """
    check_dimensions(I, J)
    if J.is_zero:
        raise ZeroDivisorIdeal("Colon %s : (0) is undefined" % I)
    result = None
    for g in J.exponents:
        quotient = MonomialIdeal(I.dim, np.maximum(I.exponents - g, 0))
        result = quotient if result is None else intersect(result, quotient)
    return result


def is_parameter_ideal(ideal):
    """
    True iff `ideal` is generated by pure powers of all d distinct variables.
    """
    return (len(ideal.gens) == ideal.dim and
            sorted(g.pure_power_of() for g in ideal.gens
                   if g.pure_power_of() is not None) ==
            list(range(ideal.dim)))


def contains(I, J):
    """True iff J is contained in I."""
    check_dimensions(I, J)
    return bool(divisible_rows(J.exponents, I.exponents).all())


def equals(I, J):
    check_dimensions(I, J)
    return I == J

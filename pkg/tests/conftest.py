# -*- coding: utf-8 -*-

"""
Shared fixtures and hypothesis strategies.
"""

import numpy as np
import pytest
from hypothesis import strategies as st

from sallylab import config
from sallylab.ideals import MonomialIdeal
from sallylab.specs import IdealSpec


def monomials(dim, max_exponent=6):
    return st.tuples(*[st.integers(0, max_exponent)] * dim)


@st.composite
def ideals(draw, dim=2, max_exponent=6, max_gens=5, m_primary=False):
    """Monomial ideals with up to `max_gens` random generators."""
    gens = draw(st.lists(monomials(dim, max_exponent), min_size=1,
                         max_size=max_gens))
    if m_primary:
        powers = draw(st.lists(st.integers(1, max_exponent), min_size=dim,
                               max_size=dim))
        gens += [tuple(a if j == i else 0 for j in range(dim))
                 for i, a in enumerate(powers)]
    return MonomialIdeal(dim, gens)


def random_ideal(rng, dim, box, max_extra=6):
    """
    An m-primary ideal with pure powers of exponent at most `box` and a few
    random generators inside the box, drawn from the numpy generator `rng`.
    """
    powers = rng.integers(1, box + 1, size=dim)
    extra = rng.integers(0, box, size=(int(rng.integers(0, max_extra + 1)),
                                       dim))
    return MonomialIdeal(dim, np.concatenate((np.diag(powers), extra)))


@pytest.fixture
def cfg():
    return config.default_config()


@pytest.fixture
def x5y5():
    """Q = (x^5, y^5) and I = Q + (x^2 y^3, x^3 y^2)."""
    spec = IdealSpec(2, [(5, 0), (0, 5)], [(2, 3), (3, 2)])
    return spec.ideals()


@pytest.fixture
def example_s1_3():
    spec = IdealSpec(2, [(7, 0), (0, 7)], [(1, 6), (2, 5), (4, 3), (5, 2)])
    return spec.ideals()


@pytest.fixture
def example_s1_4():
    spec = IdealSpec(2, [(8, 0), (0, 8)], [(2, 6), (3, 5), (5, 3), (6, 2)])
    return spec.ideals()


@pytest.fixture
def example_d3():
    spec = IdealSpec(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3)],
                     [(2, 1, 0), (1, 2, 0), (0, 2, 1), (0, 1, 2), (2, 0, 1),
                      (1, 0, 2)])
    return spec.ideals()

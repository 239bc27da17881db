# -*- coding: utf-8 -*-

"""
Ratliff-Rush closure of monomial ideals, from the ascending chain
I^(n+1) : I^n.
"""

from collections import namedtuple

from ..errors import BudgetExceeded
from ..ideals import colon, power, product

DEFAULT_RATLIFF_RUSH_MAX = 10

RatliffRushChain = namedtuple('RatliffRushChain',
                              ['ideal', 'terms', 'stable_at', 'heuristic'])
RatliffRushChain.__doc__ = """
Result of ratliff_rush_chain(): the closure `ideal`, the chain `terms`
T_1, ..., T_k that were computed, the index `stable_at` of the first term
repeated by its successor, and whether the result rests on the stop rule
only (`heuristic`).
"""


def ratliff_rush_chain(ideal, n_max=DEFAULT_RATLIFF_RUSH_MAX, closure=None):
    """
    Computes T_n = I^(n+1) : I^n for n = 1, 2, ... until two consecutive
    terms agree, and returns the last one as the Ratliff-Rush closure.

    Consecutive agreement does not prove the chain has stabilized, so the
    result is flagged heuristic unless it reaches the integral closure
    `closure` (if given), which bounds the Ratliff-Rush closure from above.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2, got %d" % n_max)
    lower = power(ideal, 1)
    upper = product(lower, ideal)
    terms = []
    for n in range(1, n_max + 1):
        terms.append(colon(upper, lower))
        if len(terms) > 1 and terms[-1] == terms[-2]:
            result = terms[-1]
            heuristic = closure is None or result != closure
            return RatliffRushChain(result, tuple(terms), n - 1, heuristic)
        lower, upper = upper, product(upper, ideal)
    raise BudgetExceeded("Ratliff-Rush chain of %s did not repeat a term "
                         "within %d steps" % (ideal, n_max))


def ratliff_rush(ideal, n_max=DEFAULT_RATLIFF_RUSH_MAX):
    """Returns the (heuristic) Ratliff-Rush closure of `ideal`."""
    return ratliff_rush_chain(ideal, n_max).ideal


def is_ratliff_rush_closed(ideal, n_max=DEFAULT_RATLIFF_RUSH_MAX):
    return ratliff_rush(ideal, n_max) == ideal

# -*- coding: utf-8 -*-

"""
Exact Hilbert functions, Hilbert coefficients and Sally-module data of
m-primary monomial ideals.
"""
__version__ = '0.1.0'

from .ideals import (Monomial, MonomialIdeal, minimalize, member, ideal_sum,
                     product, power, intersect, colon, contains, equals,
                     max_ideal, colength, quotient_length)
from .closures import (newton_member, integral_closure, is_integrally_closed,
                       is_reduction, reduction_number, ratliff_rush)
from .hilbert import (hilbert_function, binomial_fit, eval_binomial_poly,
                      multiplicity_crosscheck)
from .sally import (sally_lengths, check_hypotheses, sally_rank, m_invariant,
                    check_inequalities, classify, verify_closed_form,
                    analyze)
from .search import SearchConfig, random_instance, sweep
from .specs import IdealSpec, parse_spec, render_spec
from .verify import ClaimResult, run_suite

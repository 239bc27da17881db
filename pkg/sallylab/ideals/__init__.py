# -*- coding: utf-8 -*-

"""
Monomial ideal arithmetic and staircase counting.
"""
from .monomials import (MAX_EXPONENT, Monomial, MonomialIdeal,
                        variable_names, check_dimensions, minimalize,
                        zero_ideal, unit_ideal, max_ideal, member, ideal_sum,
                        product, power, intersect, colon,
                        is_parameter_ideal, contains, equals)
from .staircase import (DEFAULT_MAX_POINTS, bounding_box, is_m_primary,
                        box_points, standard_monomials, colength,
                        quotient_length)

# -*- coding: utf-8 -*-

"""
Closure operations on monomial ideals, via Newton polyhedra and colon chains.
"""
from .newton import NewtonPolyhedron, newton_member, feasible_convex_point
from .integral import (DEFAULT_REDUCTION_MAX, integral_closure,
                       is_integrally_closed, is_reduction, reduction_number)
from .ratliff_rush import (DEFAULT_RATLIFF_RUSH_MAX, RatliffRushChain,
                           ratliff_rush_chain, ratliff_rush,
                           is_ratliff_rush_closed)

# -*- coding: utf-8 -*-

"""
Sally-module analysis of an m-primary monomial ideal I over a monomial
parameter reduction Q.
"""
from .classify import (ZERO, FREE, NEAR_FREE, S1_3, S1_4_D2, UNCLASSIFIED,
                       TAGS, ClosedForm, Classification, classify,
                       classifiable)
from .profile import (Hypotheses, SallyProfile, check_parameter_reduction,
                      sally_lengths, check_hypotheses, sally_rank, m_value,
                      m_invariant, analyze)
from .checks import (Check, check_inequalities, verify_closed_form,
                     sally_identity, violations)

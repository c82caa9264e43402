"""Ky Fan and Schatten norms of graphs and matrices, their extremal constructions,
a catalog of norm inequalities with equality verdicts, and small-graph searches."""

__version__ = "0.1.0"

from .errors import (ApplicabilityError, ArgumentError, BudgetExceeded, ConstructionUnavailable,
                     DimensionError, DomainError, ParseError, PrecisionError, RecoveryFailed,
                     SpecnormError)
from .graphs import Graph, emit_graph6, parse_graph6
from .norms import (NormSubject, energy, frobenius, ky_fan, max_norm, operator_norm,
                    recover_spectrum, schatten, schatten_curve, trace_norm)
from .bounds import evaluate_bound, equality_verdict
from .search import extremal_search

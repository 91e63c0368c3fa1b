"""Exact arithmetic for dual q-Hahn and dual -1 Hahn polynomials.

The dual -1 Hahn family is built from its three-term recurrence and checked
against closed hypergeometric forms, a five-diagonal difference operator, a
Dunkl-shift operator and a Leonard-pair representation. Floating-point code
is confined to :mod:`dualhahn.limits`.
"""

from .errors import (
    DegenerateGrid,
    DenominatorPole,
    DualHahnError,
    NonExactDivision,
    SingularEvaluationMatrix,
    ToleranceExceeded,
)
from .m1hahn import (
    M1HahnParams,
    christoffel_pair,
    christoffel_reconstruct,
    evaluation_matrix,
    m1_closed_polynomial,
    m1_evaluate_closed,
    m1_evaluate_recurrence,
    m1_grid,
    m1_polynomials,
    m1_recurrence_branch,
    m1_recurrence_compact,
    m1_weights,
    positivity_report,
    recurrence_table,
    spectral_bisets,
)
from .operators import dunkl_operator, leonard_pair, m1_stencil
from .poly import Polynomial, RationalFunction
from .qhahn import QHahnParams, q_diff_op, q_evaluate, q_grid, q_monic_coeffs, q_recurrence, q_weights

__all__ = [name for name in dir() if not name.startswith("_")]

"""Linear recursions, their periods modulo primes, and the finite rings
F_p[X]/(C) whose structure those periods reflect.

A coefficient vector t = (t1, ..., tk) indexes both the monic polynomial
X^k - t1 X^(k-1) - ... - tk and the degree-k recursion
f(n) = t1 f(n-1) + ... + tk f(n-k).  This package computes the attached
sequences exactly, their periods modulo any prime by several independent
routes, and the idempotent / unit / radical structure of the quotient ring,
with a ramification test tying the two sides together: p divides the period
exactly when the core has a repeated factor modulo p.
"""

__version__ = "0.1.0"

from .errors import RecurringError
from .fplinalg import FpMatrix, OrbitRecord, matrix_order, vector_orbit
from .fppoly import FpFactorization, FpPoly, factorize, is_squarefree, order_of_x_mod
from .intcore import (
    CorePoly,
    IntMatrix,
    IntPoly,
    companion,
    core_product,
    cyclotomic,
    discriminant,
    exact_period,
    new_core,
    resultant,
)
from .period import (
    PeriodResult,
    period_consistent,
    period_factor_lcm,
    period_matrix_order,
    period_of,
    period_orbit,
)
from .recurrence import (
    SequenceCursor,
    companion_power_entries,
    different_matrix,
    gfp,
    gfp_range,
    glp,
    glp_column_check,
    glp_range,
    lambda_representation,
    schur_hook,
    trace_equals_glp,
)
from .semilocal import (
    IdempotentSet,
    RingElement,
    RpContext,
    check_period_ramification,
    make_context,
    nilradical,
    primitive_idempotents,
    rank_laws,
    unit_group_order,
)

__all__ = [
    "__version__",
    "RecurringError",
    "CorePoly",
    "IntMatrix",
    "IntPoly",
    "new_core",
    "companion",
    "core_product",
    "cyclotomic",
    "discriminant",
    "exact_period",
    "resultant",
    "FpPoly",
    "FpFactorization",
    "factorize",
    "is_squarefree",
    "order_of_x_mod",
    "FpMatrix",
    "OrbitRecord",
    "matrix_order",
    "vector_orbit",
    "SequenceCursor",
    "gfp",
    "gfp_range",
    "glp",
    "glp_range",
    "schur_hook",
    "companion_power_entries",
    "lambda_representation",
    "different_matrix",
    "glp_column_check",
    "trace_equals_glp",
    "PeriodResult",
    "period_orbit",
    "period_matrix_order",
    "period_factor_lcm",
    "period_consistent",
    "period_of",
    "RpContext",
    "RingElement",
    "IdempotentSet",
    "make_context",
    "primitive_idempotents",
    "rank_laws",
    "unit_group_order",
    "nilradical",
    "check_period_ramification",
]

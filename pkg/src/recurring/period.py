"""The period of a linear recursion modulo a prime, by three routes.

For p coprime to tk the period is the multiplicative order of the companion
matrix modulo p, and three independent computations of it are offered:

* ``period_orbit``      - lcm of the orbit lengths of the standard basis
                          vectors (a single vector can undercount when the
                          core is reducible modulo p);
* ``period_matrix_order`` - plain iterated multiplication up to p^k - 1;
* ``period_factor_lcm``   - lcm over the irreducible factors of the core
                          modulo p of the order of X in each local quotient.

``period_consistent`` runs whatever is affordable, checks agreement, and
additionally certifies the factor-lcm result through an order certificate
(X^N = 1 and X^(N/l) != 1 for every prime l dividing N) which is cheap at
any scale.  When p divides tk the companion matrix is singular; the matrix
power sequence is then only eventually periodic and the orbit route reports
the preperiod as well.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import InternalInconsistency, SingularCompanion
from .fplinalg import FpMatrix, cycle_length, matrix_order, matrix_power_cycle
from .fppoly import FpPoly, factorize, order_of_x_mod, powmod, prime_factors, require_prime
from .intcore import CorePoly

# Iterative routes (orbit walk, matrix powering) are only run when the state
# space is at most this large; the factor-lcm route plus its order
# certificate covers every scale.
EXHAUSTIVE_LIMIT = 4_000


@dataclass(frozen=True)
class PeriodResult:
    core: CorePoly
    p: int
    period: int
    preperiod: int
    method: str
    per_factor: tuple[tuple[FpPoly, int, int], ...] = ()


def _core_mod(core: CorePoly, p: int) -> FpPoly:
    return FpPoly.from_int_poly(core.as_poly(), p)


def _require_invertible(core: CorePoly, p: int) -> None:
    if core.trailing % p == 0:
        raise SingularCompanion(f"p = {p} divides tk = {core.trailing}")


def period_orbit(core: CorePoly, p: int) -> PeriodResult:
    """Orbit route.

    Invertible case: orbits are purely periodic, so each basis vector's
    orbit is walked in O(1) memory until it closes, and the period is the
    lcm over the basis.  Singular case (p | tk): the matrix power sequence
    I, A, A^2, ... is hashed to find its tail and cycle.
    """
    require_prime(p)
    k = core.k
    if core.trailing % p != 0:
        basis = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
        period = math.lcm(*(cycle_length(v, core, p) for v in basis))
        return PeriodResult(core=core, p=p, period=period, preperiod=0, method="orbit")
    pre, per = matrix_power_cycle(FpMatrix.companion(core, p))
    return PeriodResult(core=core, p=p, period=per, preperiod=pre, method="orbit")


def period_matrix_order(core: CorePoly, p: int) -> PeriodResult:
    """Iterated powering of the companion matrix modulo p."""
    require_prime(p)
    _require_invertible(core, p)
    order = matrix_order(FpMatrix.companion(core, p))
    return PeriodResult(core=core, p=p, period=order, preperiod=0, method="matrix-order")


def period_factor_lcm(core: CorePoly, p: int) -> PeriodResult:
    """lcm over irreducible factors of the per-factor orders of X."""
    require_prime(p)
    _require_invertible(core, p)
    factorization = factorize(_core_mod(core, p))
    per_factor = tuple(
        (f, e, order_of_x_mod(f, e)) for f, e in factorization.factors
    )
    period = math.lcm(*(order for _, _, order in per_factor))
    return PeriodResult(
        core=core, p=p, period=period, preperiod=0, method="factor-lcm", per_factor=per_factor
    )


def order_certificate(core: CorePoly, p: int, n: int) -> bool:
    """True iff n is exactly the order of X modulo the core mod p.

    Verifies X^n = 1 and X^(n/l) != 1 for every prime l | n; since the
    matrix representation of X is faithful, this certifies the matrix order
    without iterating it.
    """
    c = _core_mod(core, p)
    x = FpPoly.x(p)
    one = FpPoly.one(p)
    if powmod(x, n, c) != one:
        return False
    return all(powmod(x, n // ell, c) != one for ell in prime_factors(n))


def period_consistent(
    core: CorePoly, p: int, exhaustive_limit: int = EXHAUSTIVE_LIMIT
) -> PeriodResult:
    """Run every affordable route, insist on agreement, return the richest.

    The factor-lcm result is always computed and always certified.  The two
    iterative routes run when p^k <= exhaustive_limit; beyond that their
    cost grows with the period itself and the certificate already pins the
    answer down.
    """
    require_prime(p)
    if core.trailing % p == 0:
        return period_orbit(core, p)
    result = period_factor_lcm(core, p)
    if not order_certificate(core, p, result.period):
        raise InternalInconsistency(
            f"factor-lcm period {result.period} fails the order certificate "
            f"for t={core.t}, p={p}"
        )
    if p ** core.k <= exhaustive_limit:
        by_order = period_matrix_order(core, p).period
        by_orbit = period_orbit(core, p).period
        if not (by_order == by_orbit == result.period):
            raise InternalInconsistency(
                f"period methods disagree for t={core.t}, p={p}: "
                f"factor-lcm={result.period}, matrix-order={by_order}, orbit={by_orbit}"
            )
    return result


@functools.lru_cache(maxsize=None)
def _period_cached(t: tuple[int, ...], p: int) -> int:
    return period_consistent(CorePoly(t), p).period


def period_of(core: CorePoly, p: int) -> int:
    """Cached period for p coprime to tk."""
    _require_invertible(core, p)
    return _period_cached(core.t, p)

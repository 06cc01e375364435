"""Report builders: the shared layer behind the HTTP endpoints and the CLI.

Sweeps and campaigns can fan out over primes with a thread pool capped by the
``RECURRING_THREADS`` environment variable; results are always assembled in
ascending prime order, so the output is deterministic regardless of the cap.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from . import intcore, period, semilocal
from .corpus import primes_up_to, sample_core
from .errors import InternalInconsistency
from .fplinalg import FpMatrix, vector_orbit
from .fppoly import require_prime
from .models import (
    FactorEntry,
    OrbitReport,
    PrimeReport,
    SequenceResult,
    SequenceRow,
    SweepResult,
    SweepSummary,
    VerifyFailure,
    VerifyReport,
)
from .recurrence import gfp_range, glp_range

T = TypeVar("T")
U = TypeVar("U")


def thread_cap() -> int:
    raw = os.environ.get("RECURRING_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(value, 1)


def _ordered_map(fn: Callable[[T], U], items: Iterable[T]) -> list[U]:
    items = list(items)
    workers = min(thread_cap(), max(len(items), 1))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def build_prime_report(t: Iterable[int], p: int) -> PrimeReport:
    """Full analysis of one (core, prime) pair."""
    core = intcore.new_core(t)
    disc = intcore.discriminant(core)
    exact = intcore.exact_period(core)
    ctx = semilocal.make_context(core, p)
    factors = [
        FactorEntry(poly=str(f), multiplicity=e) for f, e in ctx.factorization.factors
    ]
    if ctx.companion_invertible:
        result = period.period_consistent(core, p)
        ranks = list(semilocal.primitive_idempotents(ctx).ranks)
        unit_order: str | None = str(semilocal.unit_group_order(ctx))
        divides = result.period % p == 0
        agree: bool | None = divides == (ctx.classification == semilocal.RAMIFIED)
    else:
        result = period.period_orbit(core, p)
        ranks = None
        unit_order = None
        divides = result.period % p == 0
        agree = None
    return PrimeReport(
        t=list(core.t),
        p=p,
        period=result.period,
        preperiod=result.preperiod,
        classification=ctx.classification,
        factors=factors,
        discriminant=str(disc),
        p_divides_discriminant=disc % p == 0,
        p_divides_period=divides,
        thm67_agree=agree,
        unit_group_order=unit_order,
        idempotent_ranks=ranks,
        exact_period=exact,
    )


def sweep_reports(t: Iterable[int], pmax: int) -> SweepResult:
    """One report per prime up to pmax, plus an agreement summary."""
    t = list(t)
    primes = primes_up_to(pmax)
    reports = _ordered_map(lambda p: build_prime_report(t, p), primes)
    checked = [r for r in reports if r.thm67_agree is not None]
    summary = SweepSummary(
        t=t,
        pmax=pmax,
        primes_checked=len(primes),
        thm67_checked=len(checked),
        thm67_agreed=sum(1 for r in checked if r.thm67_agree),
    )
    return SweepResult(reports=reports, summary=summary)


def run_verify(k: int, coeff_bound: int, pmax: int, trials: int, seed: int) -> VerifyReport:
    """Randomized campaign: period-method agreement plus the divisibility /
    ramification equivalence, over seeded cores and all usable primes."""
    rng = random.Random(seed)
    cores = [sample_core(rng, k, coeff_bound) for _ in range(trials)]
    primes = primes_up_to(pmax)

    def check_core(core: intcore.CorePoly) -> tuple[int, list[VerifyFailure]]:
        pairs = 0
        failures: list[VerifyFailure] = []
        for p in primes:
            if core.trailing % p == 0:
                continue
            pairs += 1
            try:
                period.period_consistent(core, p)
            except InternalInconsistency as exc:
                failures.append(
                    VerifyFailure(t=list(core.t), p=p, kind="period-methods", detail=str(exc))
                )
                continue
            record = semilocal.check_period_ramification(core, p)
            if not record.agree:
                failures.append(
                    VerifyFailure(
                        t=list(core.t),
                        p=p,
                        kind="period-ramification",
                        detail=(
                            f"period={record.period}, p_divides_period="
                            f"{record.p_divides_period}, ramified={record.ramified}"
                        ),
                    )
                )
        return pairs, failures

    outcomes = _ordered_map(check_core, cores)
    pairs_checked = sum(pairs for pairs, _ in outcomes)
    failures = [f for _, fs in outcomes for f in fs]
    return VerifyReport(
        k=k,
        coeff_bound=coeff_bound,
        pmax=pmax,
        trials=trials,
        seed=seed,
        cores_checked=len(cores),
        pairs_checked=pairs_checked,
        failures=failures,
        passed=not failures,
    )


def sequence_rows(
    t: Iterable[int], start: int, stop: int, mod: int | None = None
) -> SequenceResult:
    """Values of F and G over an inclusive index range."""
    core = intcore.new_core(t)
    if mod is not None:
        require_prime(mod)
    if stop < start:
        raise ValueError("empty range: stop < start")
    fs = gfp_range(core, start, stop, mod=mod)
    gs = glp_range(core, start, stop, mod=mod)
    rows = [
        SequenceRow(n=start + i, gfp=str(f), glp=str(g))
        for i, (f, g) in enumerate(zip(fs, gs))
    ]
    return SequenceResult(t=list(core.t), start=start, stop=stop, mod=mod, rows=rows)


def orbit_report(t: Iterable[int], p: int, m: Iterable[int]) -> OrbitReport:
    """Companion orbit of a residue vector, states in visiting order."""
    core = intcore.new_core(t)
    m = list(m)
    if len(m) != core.k:
        raise ValueError("start vector must have k entries")
    record = vector_orbit(tuple(m), FpMatrix.companion(core, p))
    return OrbitReport(
        t=list(core.t),
        p=p,
        m=[c % p for c in m],
        states=[list(state) for state in record.states],
        preperiod=record.preperiod,
        period=record.period,
        length=record.length,
    )

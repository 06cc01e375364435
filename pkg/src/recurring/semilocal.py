"""Structure of the finite quotient ring R = F_p[X]/(C mod p).

Elements are k-tuples of residues, the coordinates in the basis
1, lambda, ..., lambda^(k-1) where lambda is the class of X.  The *standard
matrix* of an element m has rows m*A^0, ..., m*A^(k-1), i.e. the first k
steps of the companion orbit of m; multiplication by lambda is right
multiplication by the companion matrix A.

The ring splits into one local factor per irreducible factor of the core
modulo p, which drives everything here: classification (inert / split /
ramified), primitive idempotents through the polynomial Chinese remainder
theorem, rank identities, unit-group order, and the nilradical.  Brute-force
counterparts scan every element of small rings so the algebraic routes never
have to be taken on faith.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    ContextMismatch,
    HypothesisNotMet,
    InternalInconsistency,
    NotCoprime,
    SingularCompanion,
)
from .fplinalg import FpMatrix, OrbitRecord, companion_step, vector_orbit
from .fppoly import FpFactorization, FpPoly, factorize, is_squarefree, require_prime, xgcd
from .intcore import CorePoly
from .period import period_of
from .recurrence import glp_range

# Element scans are capped; above this many states only algebraic routes run.
BRUTE_FORCE_LIMIT = 20_000

INERT = "inert"
SPLIT = "split"
RAMIFIED = "ramified"


@dataclass(frozen=True)
class RpContext:
    """A core polynomial reduced modulo p, factored and classified."""

    core: CorePoly
    p: int
    cpoly: FpPoly
    factorization: FpFactorization
    classification: str
    s: int
    ramification_lcm: int

    @property
    def size(self) -> int:
        return self.p ** self.core.k

    @property
    def companion_invertible(self) -> bool:
        return self.core.trailing % self.p != 0

    def _require_invertible(self) -> None:
        if not self.companion_invertible:
            raise SingularCompanion(f"p = {self.p} divides tk = {self.core.trailing}")

    def element(self, coords) -> "RingElement":
        cs = tuple(c % self.p for c in coords)
        if len(cs) != self.core.k:
            raise ValueError("coordinate vector must have k entries")
        return RingElement(self, cs)

    def zero(self) -> "RingElement":
        return self.element((0,) * self.core.k)

    def one(self) -> "RingElement":
        return self.element((1,) + (0,) * (self.core.k - 1))

    def x(self) -> "RingElement":
        """The class of X, a root of the core in this ring."""
        if self.core.k == 1:
            return self.element((self.core.t[0],))
        return self.element((0, 1) + (0,) * (self.core.k - 2))

    def from_poly(self, poly: FpPoly) -> "RingElement":
        reduced = poly % self.cpoly
        coords = reduced.coeffs + (0,) * (self.core.k - len(reduced.coeffs))
        return self.element(coords)


def make_context(core: CorePoly, p: int) -> RpContext:
    """Factor the core modulo p and classify the prime.

    One factor of multiplicity 1 is inert; several factors, all of
    multiplicity 1, split; any repeated factor ramifies.  The recorded lcm of
    the multiplicities is the exponent at which the nilradical dies.
    """
    require_prime(p)
    cpoly = FpPoly.from_int_poly(core.as_poly(), p)
    factorization = factorize(cpoly)
    mults = [e for _, e in factorization.factors]
    if any(e > 1 for e in mults):
        classification = RAMIFIED
    elif factorization.s == 1:
        classification = INERT
    else:
        classification = SPLIT
    return RpContext(
        core=core,
        p=p,
        cpoly=cpoly,
        factorization=factorization,
        classification=classification,
        s=factorization.s,
        ramification_lcm=math.lcm(*mults),
    )


@dataclass(frozen=True)
class RingElement:
    """Element of R as coordinates in the power basis of lambda."""

    ctx: RpContext
    coords: tuple[int, ...]

    def _match(self, other: "RingElement") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("elements live in different rings")

    def to_poly(self) -> FpPoly:
        return FpPoly(self.ctx.p, self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "RingElement") -> "RingElement":
        self._match(other)
        return self.ctx.element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._match(other)
        return self.ctx.element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RingElement":
        return self.ctx.element(tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.ctx.element(tuple(other * a for a in self.coords))
        self._match(other)
        return self.ctx.from_poly(self.to_poly() * other.to_poly())

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RingElement":
        if e < 0:
            raise ValueError("negative powers are not defined here")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def standard_matrix(self) -> FpMatrix:
        """Rows are m, m*A, ..., m*A^(k-1): the start of the companion orbit."""
        ctx = self.ctx
        t = tuple(c % ctx.p for c in ctx.core.t)
        rows = [self.coords]
        for _ in range(ctx.core.k - 1):
            rows.append(companion_step(rows[-1], t, ctx.p))
        return FpMatrix(ctx.p, rows)

    def norm(self) -> int:
        return self.standard_matrix().det()

    def is_unit(self) -> bool:
        return self.norm() != 0

    def rank(self) -> int:
        return self.standard_matrix().rank()

    def __str__(self) -> str:
        return str(self.to_poly())


def trace_formula(a: RingElement) -> int:
    """Trace as the G-weighted coordinate sum: sum of mi * G(i) mod p."""
    ctx = a.ctx
    gs = glp_range(ctx.core, 0, ctx.core.k - 1, mod=ctx.p)
    return sum(m * g for m, g in zip(a.coords, gs)) % ctx.p


def trace_matrix(a: RingElement) -> int:
    """Trace of the standard matrix; must agree with :func:`trace_formula`."""
    return a.standard_matrix().trace()


@dataclass(frozen=True)
class OrbitStructure:
    orbit: OrbitRecord
    component_sum: int
    trace_sum: int
    period: int
    divides_period: bool


def orbit_structure(ctx: RpContext, a: RingElement) -> OrbitStructure:
    """Companion orbit of an element plus the aggregate identities.

    The sum of all components across the orbit equals the sum of the traces
    of the orbit vectors, and the orbit length divides the period.
    """
    ctx._require_invertible()
    if a.ctx != ctx:
        raise ContextMismatch("element does not belong to this context")
    record = vector_orbit(a.coords, FpMatrix.companion(ctx.core, ctx.p))
    component_sum = sum(sum(state) for state in record.states) % ctx.p
    trace_sum = sum(trace_formula(ctx.element(state)) for state in record.states) % ctx.p
    period = period_of(ctx.core, ctx.p)
    return OrbitStructure(
        orbit=record,
        component_sum=component_sum,
        trace_sum=trace_sum,
        period=period,
        divides_period=period % record.period == 0,
    )


@dataclass(frozen=True)
class PrimitiveIdempotent:
    element: RingElement
    rank: int
    factor: FpPoly
    multiplicity: int


@dataclass(frozen=True)
class IdempotentSet:
    entries: tuple[PrimitiveIdempotent, ...]

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(e.rank for e in self.entries)


def primitive_idempotents(ctx: RpContext) -> IdempotentSet:
    """One primitive idempotent per local factor, via polynomial CRT.

    For each factor power q = f^e with cofactor c = C/q, the extended gcd
    gives u*c + v*q = 1, and e = u*c mod C is 1 on that local factor and 0 on
    every other.  The defining laws (e^2 = e, pairwise products zero, sum 1)
    are re-verified on the spot.
    """
    ctx._require_invertible()
    entries = []
    for f, e in ctx.factorization.factors:
        fe = f ** e
        cofactor = ctx.cpoly // fe
        g, u, _ = xgcd(cofactor, fe)
        if not g.is_one():
            raise NotCoprime("cofactor and factor power are not coprime")
        elem = ctx.from_poly(u * cofactor)
        entries.append(
            PrimitiveIdempotent(element=elem, rank=elem.rank(), factor=f, multiplicity=e)
        )
    for ent in entries:
        if ent.element * ent.element != ent.element:
            raise InternalInconsistency("CRT idempotent is not idempotent")
    for i, ei in enumerate(entries):
        for ej in entries[i + 1:]:
            if not (ei.element * ej.element).is_zero():
                raise InternalInconsistency("primitive idempotents are not orthogonal")
    total = ctx.zero()
    for ent in entries:
        total = total + ent.element
    if total != ctx.one():
        raise InternalInconsistency("primitive idempotents do not sum to 1")
    return IdempotentSet(entries=tuple(entries))


@dataclass(frozen=True)
class RankLawReport:
    subset_checks: int
    pairwise_checks: int


def rank_laws(ctx: RpContext, idems: IdempotentSet) -> RankLawReport:
    """Rank identities for a complete set of primitive idempotents.

    Stated for split primes (the inert case is trivially included); ramified
    contexts raise ``HypothesisNotMet``.  Checks r(sum) = sum r = k, the
    complement law r(e) + r(1-e) = k over all subset sums (s <= 6), and
    pairwise additivity.
    """
    if ctx.classification == RAMIFIED:
        raise HypothesisNotMet("rank identities are stated for unramified primes")
    k = ctx.core.k
    one = ctx.one()
    elements = [ent.element for ent in idems.entries]
    ranks = [ent.rank for ent in idems.entries]
    total = ctx.zero()
    for e in elements:
        total = total + e
    if total.rank() != k or sum(ranks) != k:
        raise InternalInconsistency("ranks of primitive idempotents do not sum to k")

    subset_checks = 0
    if len(elements) <= 6:
        for mask in range(1 << len(elements)):
            e = ctx.zero()
            expected = 0
            for i, elem in enumerate(elements):
                if mask >> i & 1:
                    e = e + elem
                    expected += ranks[i]
            complement = one - e
            if e.rank() != expected or e.rank() + complement.rank() != k:
                raise InternalInconsistency("subset rank law failed")
            subset_checks += 1

    pairwise_checks = 0
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if (elements[i] + elements[j]).rank() != ranks[i] + ranks[j]:
                raise InternalInconsistency("pairwise rank additivity failed")
            pairwise_checks += 1
    return RankLawReport(subset_checks=subset_checks, pairwise_checks=pairwise_checks)


def unit_group_order(ctx: RpContext) -> int:
    """Order of the unit group as a product over local factors.

    Each local factor F_p[X]/(f^e) with d = deg f contributes
    p^(e*d) - p^((e-1)*d); for e = 1 that is the field count p^d - 1.
    """
    ctx._require_invertible()
    order = 1
    for f, e in ctx.factorization.factors:
        d = f.degree()
        order *= ctx.p ** (e * d) - ctx.p ** ((e - 1) * d)
    return order


def iter_elements(ctx: RpContext, limit: int = BRUTE_FORCE_LIMIT) -> Iterator[RingElement]:
    """All p^k elements of a small ring."""
    if ctx.size > limit:
        raise ValueError(f"ring has {ctx.size} elements, above the scan cap {limit}")
    for coords in itertools.product(range(ctx.p), repeat=ctx.core.k):
        yield RingElement(ctx, coords)


def brute_force_unit_count(ctx: RpContext, limit: int = BRUTE_FORCE_LIMIT) -> int:
    return sum(1 for a in iter_elements(ctx, limit) if a.is_unit())


def brute_force_idempotents(ctx: RpContext, limit: int = BRUTE_FORCE_LIMIT) -> list[RingElement]:
    return [a for a in iter_elements(ctx, limit) if a * a == a]


@dataclass(frozen=True)
class Nilradical:
    generator: RingElement
    is_trivial: bool


def nilradical(ctx: RpContext) -> Nilradical:
    """Nilradical, generated by the squarefree part of the core modulo p.

    Unramified contexts have squarefree part equal to the core itself, so
    the generator reduces to 0 and the radical is trivial.
    """
    ctx._require_invertible()
    squarefree_part = FpPoly.one(ctx.p)
    for f, _ in ctx.factorization.factors:
        squarefree_part = squarefree_part * f
    return Nilradical(
        generator=ctx.from_poly(squarefree_part),
        is_trivial=ctx.classification != RAMIFIED,
    )


def in_nilradical(a: RingElement) -> bool:
    """Membership by divisibility: every irreducible factor divides a."""
    poly = a.to_poly()
    return all((poly % f).is_zero() for f, _ in a.ctx.factorization.factors)


def is_nilpotent(a: RingElement) -> bool:
    """Membership by powering; must agree with :func:`in_nilradical`."""
    return (a ** a.ctx.core.k).is_zero()


def maximal_ideal_count(ctx: RpContext) -> int:
    """One maximal ideal per irreducible factor."""
    return ctx.s


def maximal_ideal_elements(
    ctx: RpContext, index: int, limit: int = BRUTE_FORCE_LIMIT
) -> list[RingElement]:
    """Kernel of the projection onto local factor ``index``, by enumeration."""
    if ctx.size > limit:
        raise ValueError(f"ring has {ctx.size} elements, above the scan cap {limit}")
    f, _ = ctx.factorization.factors[index]
    cofactor_dim = ctx.core.k - f.degree()
    out = []
    for coeffs in itertools.product(range(ctx.p), repeat=cofactor_dim):
        h = FpPoly(ctx.p, coeffs)
        out.append(ctx.from_poly(f * h))
    return out


@dataclass(frozen=True)
class RamificationPeriodRecord:
    core: CorePoly
    p: int
    period: int
    p_divides_period: bool
    ramified: bool
    agree: bool


def check_period_ramification(core: CorePoly, p: int) -> RamificationPeriodRecord:
    """p divides the period exactly when the core ramifies at p.

    Ramification is detected by the gcd-based squarefreeness test, which is
    independent of the factorization used by the period routes.
    """
    require_prime(p)
    if core.trailing % p == 0:
        raise SingularCompanion(f"p = {p} divides tk = {core.trailing}")
    period = period_of(core, p)
    ramified = not is_squarefree(FpPoly.from_int_poly(core.as_poly(), p))
    divides = period % p == 0
    return RamificationPeriodRecord(
        core=core,
        p=p,
        period=period,
        p_divides_period=divides,
        ramified=ramified,
        agree=divides == ramified,
    )


@dataclass(frozen=True)
class TranslationSurvey:
    ideals: int
    orbit_pairs: int
    translatable_pairs: int


def unit_translation_survey(ctx: RpContext, limit: int = 2048) -> TranslationSurvey:
    """How often two orbits in one maximal ideal differ by a unit.

    Empirical companion to the orbit observations: for each ordered pair of
    distinct nonzero orbits inside a maximal ideal, search for a unit g with
    O1 * g = O2 setwise.  Reported as a frequency, not asserted, because the
    claim's exact scope is unclear; tiny rings only.
    """
    ctx._require_invertible()
    a_p = FpMatrix.companion(ctx.core, ctx.p)
    units = [g for g in iter_elements(ctx, limit) if g.is_unit()]
    ideals = maximal_ideal_count(ctx)
    pairs = 0
    translatable = 0
    for index in range(ideals):
        orbits: list[frozenset[tuple[int, ...]]] = []
        seen: set[tuple[int, ...]] = set()
        for elem in maximal_ideal_elements(ctx, index, limit):
            if elem.coords in seen or elem.is_zero():
                continue
            states = frozenset(vector_orbit(elem.coords, a_p).states)
            seen.update(states)
            orbits.append(states)
        for o1 in orbits:
            for o2 in orbits:
                if o1 is o2:
                    continue
                pairs += 1
                for g in units:
                    image = frozenset(
                        (ctx.element(state) * g).coords for state in o1
                    )
                    if image == o2:
                        translatable += 1
                        break
    return TranslationSurvey(ideals=ideals, orbit_pairs=pairs, translatable_pairs=translatable)

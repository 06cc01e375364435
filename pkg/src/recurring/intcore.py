"""Exact integer layer: core polynomials, companion matrices, resultants,
discriminants, cyclotomic polynomials, and the exact periodicity test.

Conventions shared by the whole package:

* A coefficient vector ``t = (t1, ..., tk)`` indexes the monic integer
  polynomial ``X^k - t1*X^(k-1) - ... - tk`` (the *core* polynomial) and,
  equivalently, the degree-k linear recursion
  ``f(n) = t1*f(n-1) + ... + tk*f(n-k)``.
* Polynomial coefficients are stored lowest degree first.
* Row vectors act on matrices from the left, so the orbit of a row vector
  under the companion matrix walks the recursion forward.
* All arithmetic is arbitrary precision; recursion values grow exponentially
  and must never be truncated silently.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    DegenerateCore,
    EmptyCoefficients,
    InternalInconsistency,
    NonUnitTrailing,
    ZeroPolynomial,
)


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of X^i.

    >>> IntPoly([-1, -1, 1])
    IntPoly('x^2 - x - 1')
    >>> IntPoly([-1, -1, 1]).degree()
    2
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x_power(cls, n: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * n + [coeff])

    @classmethod
    def one(cls) -> "IntPoly":
        return cls([1])

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division over the integers.

        Every leading-coefficient division must be exact; divisors in this
        package are monic, so the guard only trips on misuse.
        """
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        dn = other.degree()
        lead = other.coeffs[-1]
        r = list(self.coeffs)
        q = [0] * max(len(r) - dn, 0)
        while len(r) - 1 >= dn and r:
            c, rem = divmod(r[-1], lead)
            if rem:
                raise ValueError("coefficient division is not exact")
            shift = len(r) - 1 - dn
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                r[shift + i] -= c * b
            while r and r[-1] == 0:
                r.pop()
        return IntPoly(q), IntPoly(r)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[1]

    def divides(self, other: "IntPoly") -> bool:
        """True when self divides other exactly (integer quotient included)."""
        if self.is_zero():
            return other.is_zero()
        try:
            _, r = divmod(other, self)
        except ValueError:
            return False
        return r.is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = " - " if c < 0 else (" + " if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts and c < 0:
                sign = "-"
            parts.append(sign + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"


def derivative(poly: IntPoly) -> IntPoly:
    """Formal derivative."""
    return IntPoly([i * c for i, c in enumerate(poly.coeffs)][1:])


@dataclass(frozen=True)
class CorePoly:
    """Validated coefficient vector of a core polynomial.

    ``t = (t1, ..., tk)`` stands for ``X^k - t1 X^(k-1) - ... - tk``.  The
    trailing coefficient must be nonzero: a vanishing tk means X divides the
    polynomial, and callers are expected to strip those factors themselves.
    """

    t: tuple[int, ...]

    def __post_init__(self):
        if not self.t:
            raise EmptyCoefficients("a core polynomial needs at least one coefficient")
        object.__setattr__(self, "t", tuple(int(c) for c in self.t))
        if self.t[-1] == 0:
            raise DegenerateCore("tk = 0: factor out powers of X first")

    @property
    def k(self) -> int:
        return len(self.t)

    @property
    def trailing(self) -> int:
        return self.t[-1]

    def as_poly(self) -> IntPoly:
        """The polynomial X^k - t1 X^(k-1) - ... - tk, lowest degree first."""
        return IntPoly([-c for c in reversed(self.t)] + [1])

    @classmethod
    def from_poly(cls, poly: IntPoly) -> "CorePoly":
        """Inverse of :meth:`as_poly` for monic polynomials of degree >= 1."""
        if poly.degree() < 1 or not poly.is_monic():
            raise ValueError("expected a monic polynomial of degree >= 1")
        return cls(tuple(-c for c in reversed(poly.coeffs[:-1])))

    def __str__(self) -> str:
        return str(self.as_poly())


def new_core(t: Iterable[int]) -> CorePoly:
    """Validate a coefficient vector ``(t1, ..., tk)``.

    >>> new_core([1, 1]).as_poly()
    IntPoly('x^2 - x - 1')
    """
    return CorePoly(tuple(t))


def core_product(a: CorePoly, b: CorePoly) -> CorePoly:
    """Core whose polynomial is the product of the two inputs."""
    return CorePoly.from_poly(a.as_poly() * b.as_poly())


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix with exact arithmetic."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(int(c) for c in row) for row in rows)
        if any(len(row) != len(rs) for row in rs):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rs)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        n = self.n
        if other.n != n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in row] for row in self.rows])

    def pow(self, e: int) -> "IntMatrix":
        """Nonnegative power by repeated squaring."""
        if e < 0:
            raise ValueError("negative powers need an explicit inverse")
        result = IntMatrix.identity(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def det(self) -> int:
        return _bareiss_det([list(r) for r in self.rows])

    def row_times(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Row vector times matrix."""
        return tuple(sum(v[i] * self.rows[i][j] for i in range(self.n)) for j in range(self.n))


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant; every intermediate division is exact."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[i][i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * piv - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def companion(core: CorePoly) -> IntMatrix:
    """Companion matrix: 1s on the superdiagonal, last row (tk, ..., t1).

    Its determinant is (-1)^(k+1) * tk.

    >>> companion(new_core([1, 1])).rows
    ((0, 1), (1, 1))
    """
    k = core.k
    rows = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        rows[i][i + 1] = 1
    rows[k - 1] = list(reversed(core.t))
    return IntMatrix(rows)


def companion_inverse(core: CorePoly) -> IntMatrix:
    """Exact integer inverse of the companion matrix; needs |tk| = 1.

    The first row is (-t(k-1), ..., -t1, 1) / tk and the remaining rows are
    the shifted identity.
    """
    if abs(core.trailing) != 1:
        raise NonUnitTrailing("the companion matrix has no integer inverse unless |tk| = 1")
    k = core.k
    inv = core.trailing  # tk is its own inverse when it is +-1
    first = [-core.t[k - 2 - j] * inv for j in range(k - 1)] + [inv]
    rows = [first]
    for i in range(1, k):
        rows.append([1 if j == i - 1 else 0 for j in range(k)])
    return IntMatrix(rows)


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant as the determinant of the Sylvester matrix, a-rows first.

    Computed by fraction-free elimination, so the result is exact for
    arbitrary-precision inputs.
    """
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    m, n = a.degree(), b.degree()
    size = m + n
    if size == 0:
        return 1
    ra = list(reversed(a.coeffs))
    rb = list(reversed(b.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + ra + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + rb + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant(core: CorePoly) -> int:
    """Polynomial discriminant (-1)^(k(k-1)/2) * res(C, C').

    The core is monic, so no leading-coefficient division is involved.  A
    prime divides this value exactly when the core acquires a repeated factor
    modulo that prime.

    >>> discriminant(new_core([1, 1]))
    5
    """
    c = core.as_poly()
    sign = -1 if (core.k * (core.k - 1) // 2) % 2 else 1
    return sign * resultant(c, derivative(c))


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler totient by trial-division factorization (desk scale)."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            result -= result // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        result -= result // m
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial.

    Built by exact division of X^n - 1 by the cyclotomic polynomials of the
    proper divisors of n; degree phi(n).

    >>> cyclotomic(6)
    IntPoly('x^2 - x + 1')
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly, rem = divmod(poly, cyclotomic(d))
            if not rem.is_zero():
                raise InternalInconsistency("cyclotomic division left a remainder")
    return poly


def exact_period(core: CorePoly) -> Optional[int]:
    """Least exact (mod 1) period of the recursion, or None.

    The recursion is exactly periodic iff the core is a product of distinct
    cyclotomic polynomials; the period is then the lcm of their indices.
    Repeated cyclotomic factors are excluded: they make terms grow
    polynomially instead of repeating.  Candidate indices n are scanned up to
    2*k^2, which covers every n with phi(n) <= k.

    >>> exact_period(new_core([0, -1]))   # x^2 + 1
    4
    >>> exact_period(new_core([1, 1])) is None
    True
    """
    c = core.as_poly()
    k = core.k
    hits = [n for n in range(1, 2 * k * k + 1) if euler_phi(n) <= k and cyclotomic(n).divides(c)]
    product = IntPoly.one()
    for n in hits:
        product = product * cyclotomic(n)
    if product != c:
        return None
    period = math.lcm(*hits)
    _check_exact_period(core, period)
    return period


def _check_exact_period(core: CorePoly, period: int) -> None:
    """Cross-check by direct iteration with the standard seed window."""
    k = core.k
    window = [0] * (k - 1) + [1]
    values = list(window)
    for _ in range(2 * period + k):
        nxt = sum(core.t[j] * window[k - 1 - j] for j in range(k))
        values.append(nxt)
        window = window[1:] + [nxt]
    for m in range(period + k):
        if values[m] != values[m + period]:
            raise InternalInconsistency(
                f"cyclotomic analysis predicted period {period} but iteration disagrees"
            )

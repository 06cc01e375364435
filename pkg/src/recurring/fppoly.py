"""Polynomial arithmetic and factorization over the prime field F_p.

Coefficients are stored lowest degree first and kept reduced to [0, p).
Factorization is deterministic trial division in increasing degree and
lexicographic candidate order: exactly reproducible, and entirely adequate
for the desk scale this package targets (small p times small degree).  It
makes no attempt to compete with randomized splitting for large inputs.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DivisionByZeroPoly,
    ModulusMismatch,
    NotPrime,
    XNotInvertible,
    ZeroPolynomial,
)
from .intcore import IntPoly


@functools.lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Trial-division primality test; fine for machine-word moduli."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


class FpPoly:
    """Immutable polynomial over F_p."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        require_prime(p)
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls(p, (1,))

    @classmethod
    def from_int_poly(cls, poly: IntPoly, p: int) -> "FpPoly":
        return cls(p, poly.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "FpPoly":
        if self.is_zero() or self.lc() == 1:
            return self
        inv = pow(self.lc(), self.p - 2, self.p)
        return FpPoly(self.p, [c * inv for c in self.coeffs])

    def evaluate(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def _match(self, other: "FpPoly") -> None:
        if not isinstance(other, FpPoly):
            raise TypeError("expected an FpPoly")
        if self.p != other.p:
            raise ModulusMismatch(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._match(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return FpPoly(self.p, out)

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._match(other)
        a = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = (a[i] - c) % self.p
        return FpPoly(self.p, a)

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [c * other for c in self.coeffs])
        self._match(other)
        if self.is_zero() or other.is_zero():
            return FpPoly(self.p)
        p = self.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(p, [c % p for c in out])

    __rmul__ = __mul__

    def __divmod__(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        self._match(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        p = self.p
        dn = other.degree()
        inv = pow(other.lc(), p - 2, p)
        r = list(self.coeffs)
        q = [0] * max(len(r) - dn, 0)
        while len(r) - 1 >= dn and r:
            c = (r[-1] * inv) % p
            shift = len(r) - 1 - dn
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                r[shift + i] = (r[shift + i] - c * b) % p
            while r and r[-1] == 0:
                r.pop()
        return FpPoly(p, q), FpPoly(p, r)

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "FpPoly":
        if e < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = FpPoly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                var = "x" if i == 1 else f"x^{i}"
                term = var if c == 1 else f"{c}{var}"
            parts.append(term)
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"FpPoly(p={self.p}, '{self}')"


def gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic greatest common divisor."""
    a._match(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: FpPoly, b: FpPoly) -> tuple[FpPoly, FpPoly, FpPoly]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    a._match(b)
    p = a.p
    u0, u1 = FpPoly.one(p), FpPoly(p)
    v0, v1 = FpPoly(p), FpPoly.one(p)
    while not b.is_zero():
        q, r = divmod(a, b)
        a, b = b, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if a.is_zero():
        return a, u0, v0
    scale = pow(a.lc(), p - 2, p)
    return a.monic(), u0 * scale, v0 * scale


def powmod(a: FpPoly, e: int, modulus: FpPoly) -> FpPoly:
    """a^e reduced modulo a nonzero polynomial at every step."""
    a._match(modulus)
    if modulus.is_zero():
        raise DivisionByZeroPoly("zero modulus")
    if e < 0:
        raise ValueError("negative exponents are not supported")
    result = FpPoly.one(a.p) % modulus
    base = a % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


@dataclass(frozen=True)
class FpFactorization:
    """Monic irreducible factors with multiplicities, plus the unit scalar."""

    p: int
    factors: tuple[tuple[FpPoly, int], ...]
    unit: int

    @property
    def s(self) -> int:
        """Number of distinct irreducible factors."""
        return len(self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def product(self) -> FpPoly:
        out = FpPoly(self.p, (self.unit,))
        for f, e in self.factors:
            out = out * f ** e
        return out


def _monic_candidates(p: int, degree: int) -> Iterator[FpPoly]:
    """All monic polynomials of the given degree, in counting order."""
    for v in range(p ** degree):
        coeffs = []
        x = v
        for _ in range(degree):
            x, r = divmod(x, p)
            coeffs.append(r)
        coeffs.append(1)
        yield FpPoly(p, coeffs)


def factorize(f: FpPoly) -> FpFactorization:
    """Complete factorization into monic irreducibles with multiplicities.

    Trial division in increasing candidate degree; each divisor found is
    removed to full multiplicity, so later candidates that divide are
    automatically irreducible.  Linear candidates are screened by a root
    scan before any division is attempted.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    p = f.p
    unit = f.lc()
    w = f.monic()
    factors: list[tuple[FpPoly, int]] = []

    for a in range(p):
        if w.degree() < 1:
            break
        if w.evaluate(a) != 0:
            continue
        g = FpPoly(p, (-a, 1))
        mult = 0
        while True:
            q, r = divmod(w, g)
            if not r.is_zero():
                break
            w = q
            mult += 1
        factors.append((g, mult))

    d = 2
    while 2 * d <= w.degree():
        for g in _monic_candidates(p, d):
            if 2 * d > w.degree():
                break
            q, r = divmod(w, g)
            if not r.is_zero():
                continue
            mult = 1
            w = q
            while True:
                q, r = divmod(w, g)
                if not r.is_zero():
                    break
                w = q
                mult += 1
            factors.append((g, mult))
        d += 1

    if w.degree() >= 1:
        factors.append((w, 1))

    total = sum(e * g.degree() for g, e in factors)
    assert total == f.degree(), "factor degrees must sum to the input degree"
    return FpFactorization(p=p, factors=tuple(factors), unit=unit)


def is_squarefree(f: FpPoly) -> bool:
    """gcd(f, f') test; independent of :func:`factorize` by design."""
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial is undefined")
    if f.degree() < 1:
        raise ZeroPolynomial("squarefreeness needs degree >= 1")
    return gcd(f, f.derivative()).degree() == 0


def is_irreducible(f: FpPoly) -> bool:
    """Deterministic trial-division irreducibility test."""
    if f.degree() < 1:
        return False
    w = f.monic()
    if any(w.evaluate(a) == 0 for a in range(f.p)):
        return w.degree() == 1
    for d in range(2, w.degree() // 2 + 1):
        for g in _monic_candidates(f.p, d):
            if (w % g).is_zero():
                return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def order_of_x_mod(f: FpPoly, multiplicity: int = 1) -> int:
    """Least n with X^n = 1 modulo f^multiplicity, for monic irreducible f.

    The order in the residue field divides p^deg(f) - 1 and is found by
    divisor descent.  Lifting to f^m multiplies by p^s where p^s is the
    smallest power of p at least m: X^d - 1 is squarefree (gcd(d, p) = 1),
    so each Frobenius lift X^(d p^j) - 1 = (X^d - 1)^(p^j) carries f to
    exactly the p^j-th power.
    """
    if f.degree() < 1:
        raise ZeroPolynomial("modulus must have degree >= 1")
    if multiplicity < 1:
        raise ValueError("multiplicity must be >= 1")
    w = f.monic()
    if w.evaluate(0) == 0:
        raise XNotInvertible("X is a zero divisor modulo a polynomial with f(0) = 0")
    p = f.p
    x = FpPoly.x(p)
    one = FpPoly.one(p)
    order = p ** w.degree() - 1
    for ell in prime_factors(order):
        while order % ell == 0 and powmod(x, order // ell, w) == one:
            order //= ell
    if multiplicity > 1:
        lift = 1
        while lift < multiplicity:
            lift *= p
            order *= p
    return order

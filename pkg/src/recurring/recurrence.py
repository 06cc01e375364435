"""The sequence zoo attached to a core polynomial.

Stacking the orbit of a window under the companion matrix produces a doubly
infinite matrix whose rows n = -k+1 .. 0 form the identity block.  Reading it
columnwise:

* column k is the generalized Fibonacci sequence ``F``: seeds
  F(0) = 1, F(-1) = ... = F(-k+1) = 0, the complete-homogeneous side of the
  symmetric-function dictionary, and the bottom-right entry of A^n;
* column j carries sign * hook values: the entry in row n is
  (-1)^(k-j) S(n, 1^(k-j)), a Schur hook with arm n and leg k-j;
* any k consecutive rows assemble A^n exactly, and the first row of A^n lists
  the coordinates of lambda^n in the basis 1, lambda, ..., lambda^(k-1);
* traces of A^n give the generalized Lucas sequence ``G`` (power sums of the
  roots), seeded through Newton's identities so no root finding is needed.

Every identity in this module is checked by computing both sides from
independent machinery; disagreement raises ``InternalInconsistency``.
"""

from __future__ import annotations

from typing import Optional

from .errors import (
    InternalInconsistency,
    LegOutOfRange,
    NonUnitTrailing,
    SingularCompanion,
)
from .fppoly import require_prime
from .intcore import CorePoly, IntMatrix, companion, companion_inverse, derivative


class SequenceCursor:
    """Doubly infinite walker over a t-linear recursion.

    Keeps the k values f(index-k+1) .. f(index).  Stepping forward applies
    the recursion; stepping backward solves it for the trailing term, which
    requires |tk| = 1 in exact mode or p coprime to tk in mod-p mode.
    """

    __slots__ = ("core", "mod", "window", "index", "_tk_inv")

    def __init__(
        self,
        core: CorePoly,
        window: tuple[int, ...],
        index: int = 0,
        mod: Optional[int] = None,
    ):
        if len(window) != core.k:
            raise ValueError("seed window must have k values")
        if mod is not None:
            require_prime(mod)
        self.core = core
        self.mod = mod
        self.window = [v % mod for v in window] if mod else list(window)
        self.index = index
        self._tk_inv = None

    @classmethod
    def gfp(cls, core: CorePoly, mod: Optional[int] = None) -> "SequenceCursor":
        """Cursor over F with the window (F(-k+1), ..., F(0)) = (0, .., 0, 1)."""
        return cls(core, (0,) * (core.k - 1) + (1,), index=0, mod=mod)

    @classmethod
    def glp(cls, core: CorePoly, mod: Optional[int] = None) -> "SequenceCursor":
        """Cursor over G seeded by Newton's identities at (G(0), ..., G(k-1))."""
        return cls(core, newton_seeds(core), index=core.k - 1, mod=mod)

    @classmethod
    def hook_column(cls, core: CorePoly, col: int, mod: Optional[int] = None) -> "SequenceCursor":
        """Cursor over column ``col`` (1-based) of the infinite orbit matrix.

        Seed windows are the rows n = -k+1 .. 0, i.e. the identity block, so
        column col starts from the standard basis vector e(col).
        """
        if not 1 <= col <= core.k:
            raise ValueError("column index out of range")
        seed = tuple(1 if i == col - 1 else 0 for i in range(core.k))
        return cls(core, seed, index=0, mod=mod)

    @property
    def value(self) -> int:
        """f(index)."""
        return self.window[-1]

    def step(self) -> int:
        """Advance to index + 1 and return the new value."""
        k = self.core.k
        t = self.core.t
        nxt = sum(t[j] * self.window[k - 1 - j] for j in range(k))
        if self.mod:
            nxt %= self.mod
        self.window.pop(0)
        self.window.append(nxt)
        self.index += 1
        return nxt

    def back(self) -> int:
        """Retreat the window by one: compute and return f(index - k)."""
        k = self.core.k
        t = self.core.t
        numer = self.window[-1] - sum(t[j - 1] * self.window[k - 1 - j] for j in range(1, k))
        if self.mod:
            prev = (numer * self._trailing_inverse()) % self.mod
        else:
            if abs(t[-1]) != 1:
                raise NonUnitTrailing("exact backward stepping needs |tk| = 1")
            prev = numer * t[-1]  # +-1 is its own inverse
        self.window.pop()
        self.window.insert(0, prev)
        self.index -= 1
        return prev

    def _trailing_inverse(self) -> int:
        if self._tk_inv is None:
            tk = self.core.trailing % self.mod
            if tk == 0:
                raise SingularCompanion(f"p = {self.mod} divides tk")
            self._tk_inv = pow(tk, self.mod - 2, self.mod)
        return self._tk_inv

    def at(self, n: int) -> int:
        """Value f(n), stepping the window only as far as needed."""
        while self.index < n:
            self.step()
        while self.index - self.core.k + 1 > n:
            self.back()
        return self.window[n - (self.index - self.core.k + 1)]

    def range(self, start: int, stop: int) -> list[int]:
        """Values f(start) .. f(stop), inclusive.

        Collected in ascending order, so backward stepping (and its
        trailing-coefficient requirements) is only triggered when ``start``
        actually lies below the seed window.
        """
        if stop < start:
            raise ValueError("empty range")
        self.at(start)
        out = []
        for n in range(start, stop + 1):
            if n <= self.index:
                out.append(self.window[n - (self.index - self.core.k + 1)])
            else:
                out.append(self.step())
        return out


def newton_seeds(core: CorePoly) -> tuple[int, ...]:
    """(G(0), ..., G(k-1)) from Newton's identities: G(0) = k and
    G(n) = t1 G(n-1) + ... + t(n-1) G(1) + n*tn for 1 <= n < k."""
    k = core.k
    t = core.t
    seeds = [k]
    for n in range(1, k):
        seeds.append(sum(t[j - 1] * seeds[n - j] for j in range(1, n)) + n * t[n - 1])
    return tuple(seeds)


def gfp(core: CorePoly, n: int, mod: Optional[int] = None) -> int:
    """F(n): bottom-right entry of A^n.

    >>> [gfp(CorePoly((1, 1)), n) for n in range(6)]
    [1, 1, 2, 3, 5, 8]
    """
    return SequenceCursor.gfp(core, mod).at(n)


def glp(core: CorePoly, n: int, mod: Optional[int] = None) -> int:
    """G(n): sum of the n-th powers of the core's roots; trace of A^n.

    >>> [glp(CorePoly((1, 1)), n) for n in range(5)]
    [2, 1, 3, 4, 7]
    """
    return SequenceCursor.glp(core, mod).at(n)


def gfp_range(core: CorePoly, start: int, stop: int, mod: Optional[int] = None) -> list[int]:
    return SequenceCursor.gfp(core, mod).range(start, stop)


def glp_range(core: CorePoly, start: int, stop: int, mod: Optional[int] = None) -> list[int]:
    return SequenceCursor.glp(core, mod).range(start, stop)


def schur_hook(core: CorePoly, arm: int, leg: int, mod: Optional[int] = None) -> int:
    """Hook value S(arm, 1^leg) evaluated at the core's coefficients.

    Read off column k - leg of the infinite orbit matrix, whose entry in row
    n is (-1)^leg * S(n, 1^leg); legs are limited to 0 .. k-1.
    """
    if not 0 <= leg <= core.k - 1:
        raise LegOutOfRange(f"leg must be in 0..{core.k - 1}")
    raw = SequenceCursor.hook_column(core, core.k - leg, mod).at(arm)
    value = raw if leg % 2 == 0 else -raw
    return value % mod if mod else value


def companion_power(core: CorePoly, n: int) -> IntMatrix:
    """Exact A^n; negative n needs |tk| = 1."""
    if n >= 0:
        return companion(core).pow(n)
    return companion_inverse(core).pow(-n)


def companion_power_entries(core: CorePoly, n: int) -> IntMatrix:
    """A^n computed two independent ways, asserted equal.

    (a) repeated exact multiplication of the companion matrix;
    (b) assembly from hook columns: rows n-k+1 .. n of the infinite orbit
    matrix.  This equality is the backbone identity of the module.
    """
    direct = companion_power(core, n)
    k = core.k
    cols = []
    for j in range(1, k + 1):
        cursor = SequenceCursor.hook_column(core, j)
        cols.append(cursor.range(n - k + 1, n))
    assembled = IntMatrix([[cols[j][i] for j in range(k)] for i in range(k)])
    if assembled != direct:
        raise InternalInconsistency(f"hook assembly of A^{n} disagrees with direct powering")
    return direct


def lambda_representation(core: CorePoly, n: int) -> tuple[int, ...]:
    """Coordinates (c0, ..., c(k-1)) with lambda^n = sum cj lambda^j.

    This is the first row of A^n (equivalently row n-k+1 of the infinite
    orbit matrix).  The result is verified through the Cayley-Hamilton
    identity: sum cj A^j must reproduce A^n exactly.

    >>> lambda_representation(CorePoly((1, 1)), 5)
    (3, 5)
    """
    k = core.k
    power = companion_power(core, n)
    coords = power.rows[0]
    a = companion(core)
    assembled = IntMatrix.identity(k).scale(0)
    for c in reversed(coords):
        assembled = assembled * a + IntMatrix.identity(k).scale(c)
    if assembled != power:
        raise InternalInconsistency(
            f"Cayley-Hamilton reconstruction of lambda^{n} failed"
        )
    return tuple(coords)


def different_matrix(core: CorePoly) -> IntMatrix:
    """C'(A): the derivative of the core evaluated at the companion matrix.

    This is the standard matrix of the different; it is a unit modulo p
    exactly when p does not divide the discriminant.
    """
    k = core.k
    d = IntMatrix.identity(k).scale(0)
    a = companion(core)
    for c in reversed(derivative(core.as_poly()).coeffs):
        d = d * a + IntMatrix.identity(k).scale(c)
    return d


def _int_companion_step(v: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    k = len(t)
    last = v[k - 1]
    return (last * t[k - 1],) + tuple(v[j - 1] + last * t[k - 1 - j] for j in range(1, k))


def glp_column_check(core: CorePoly, n_max: int) -> bool:
    """Walk the orbit of the different's first row and compare right-hand
    entries against G(0) .. G(n_max)."""
    row = different_matrix(core).rows[0]
    cursor = SequenceCursor.glp(core)
    for n in range(n_max + 1):
        if row[-1] != cursor.at(n):
            return False
        row = _int_companion_step(row, core.t)
    return True


def trace_equals_glp(core: CorePoly, n_max: int) -> bool:
    """tr(A^n) = G(n) for 0 <= n <= n_max, and for negative n when |tk| = 1."""
    a = companion(core)
    power = IntMatrix.identity(core.k)
    cursor = SequenceCursor.glp(core)
    for n in range(n_max + 1):
        if power.trace() != cursor.at(n):
            return False
        power = power * a
    if abs(core.trailing) == 1:
        inv = companion_inverse(core)
        power = IntMatrix.identity(core.k)
        for n in range(1, n_max + 1):
            power = power * inv
            if power.trace() != cursor.at(-n):
                return False
    return True

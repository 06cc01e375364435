"""Dense linear algebra over F_p plus orbit computation.

Row vectors act on matrices from the left (v -> v*M) throughout, so the
orbit of a window of recursion values under the companion matrix walks the
recursion forward one step at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InternalInconsistency, ModulusMismatch, SingularMatrix
from .fppoly import require_prime
from .intcore import CorePoly, IntMatrix


class FpMatrix:
    """Immutable square matrix over F_p."""

    __slots__ = ("p", "n", "rows")

    def __init__(self, p: int, rows: Iterable[Iterable[int]]):
        require_prime(p)
        rs = tuple(tuple(c % p for c in row) for row in rows)
        if any(len(row) != len(rs) for row in rs):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", len(rs))
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("FpMatrix is immutable")

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_int_matrix(cls, m: IntMatrix, p: int) -> "FpMatrix":
        return cls(p, m.rows)

    @classmethod
    def companion(cls, core: CorePoly, p: int) -> "FpMatrix":
        k = core.k
        rows = [[0] * k for _ in range(k)]
        for i in range(k - 1):
            rows[i][i + 1] = 1
        rows[k - 1] = list(reversed(core.t))
        return cls(p, rows)

    def _match(self, other: "FpMatrix") -> None:
        if self.p != other.p or self.n != other.n:
            raise ModulusMismatch("matrices disagree on modulus or dimension")

    def __mul__(self, other: "FpMatrix") -> "FpMatrix":
        self._match(other)
        p = self.p
        cols = list(zip(*other.rows))
        return FpMatrix(
            p,
            [[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in self.rows],
        )

    def pow(self, e: int) -> "FpMatrix":
        if e < 0:
            return self.inverse().pow(-e)
        result = FpMatrix.identity(self.p, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def row_times(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Row vector times matrix."""
        if len(v) != self.n:
            raise ModulusMismatch("vector length does not match the matrix dimension")
        p = self.p
        return tuple(
            sum(v[i] * self.rows[i][j] for i in range(self.n)) % p for j in range(self.n)
        )

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n)) % self.p

    def det(self) -> int:
        p = self.p
        m = [list(r) for r in self.rows]
        n = self.n
        det = 1
        for i in range(n):
            pivot_row = next((r for r in range(i, n) if m[r][i] % p != 0), None)
            if pivot_row is None:
                return 0
            if pivot_row != i:
                m[i], m[pivot_row] = m[pivot_row], m[i]
                det = -det
            piv = m[i][i] % p
            det = (det * piv) % p
            inv = pow(piv, p - 2, p)
            for r in range(i + 1, n):
                factor = (m[r][i] * inv) % p
                if factor:
                    for c in range(i, n):
                        m[r][c] = (m[r][c] - factor * m[i][c]) % p
        return det % p

    def rank(self) -> int:
        p = self.p
        m = [list(r) for r in self.rows]
        n = self.n
        rank = 0
        row = 0
        for col in range(n):
            pivot_row = next((r for r in range(row, n) if m[r][col] % p != 0), None)
            if pivot_row is None:
                continue
            m[row], m[pivot_row] = m[pivot_row], m[row]
            inv = pow(m[row][col] % p, p - 2, p)
            for r in range(row + 1, n):
                factor = (m[r][col] * inv) % p
                if factor:
                    for c in range(col, n):
                        m[r][c] = (m[r][c] - factor * m[row][c]) % p
            rank += 1
            row += 1
        return rank

    def inverse(self) -> "FpMatrix":
        p = self.p
        n = self.n
        m = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        for i in range(n):
            pivot_row = next((r for r in range(i, n) if m[r][i] % p != 0), None)
            if pivot_row is None:
                raise SingularMatrix("matrix is not invertible modulo p")
            m[i], m[pivot_row] = m[pivot_row], m[i]
            inv = pow(m[i][i] % p, p - 2, p)
            m[i] = [(c * inv) % p for c in m[i]]
            for r in range(n):
                if r != i and m[r][i]:
                    factor = m[r][i]
                    m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[i])]
        return FpMatrix(p, [row[n:] for row in m])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.p, self.rows))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, rows={self.rows})"


@dataclass(frozen=True)
class OrbitRecord:
    """States visited before the first repeat, split into tail and cycle.

    ``states[preperiod + period]`` would equal ``states[preperiod]``; all
    recorded states are distinct.
    """

    states: tuple[tuple[int, ...], ...]
    preperiod: int
    period: int

    @property
    def length(self) -> int:
        return len(self.states)


def vector_orbit(v: Iterable[int], a: FpMatrix) -> OrbitRecord:
    """Orbit of a row vector under repeated right multiplication.

    Cycle detection is a hash of visited states, which keeps the full state
    list available for structure reports.  The preperiod is 0 whenever the
    matrix is invertible; singular matrices give a genuine tail.
    """
    cur = tuple(c % a.p for c in v)
    if len(cur) != a.n:
        raise ModulusMismatch("vector length does not match the matrix dimension")
    seen: dict[tuple[int, ...], int] = {}
    states: list[tuple[int, ...]] = []
    while cur not in seen:
        seen[cur] = len(states)
        states.append(cur)
        cur = a.row_times(cur)
    first = seen[cur]
    return OrbitRecord(states=tuple(states), preperiod=first, period=len(states) - first)


def companion_step(v: tuple[int, ...], t: tuple[int, ...], p: int) -> tuple[int, ...]:
    """One right-multiplication by the companion matrix of t, in O(k)."""
    k = len(t)
    last = v[k - 1]
    out = [0] * k
    out[0] = (last * t[k - 1]) % p
    for j in range(1, k):
        out[j] = (v[j - 1] + last * t[k - 1 - j]) % p
    return tuple(out)


def cycle_length(v: tuple[int, ...], core: CorePoly, p: int) -> int:
    """Orbit length of v under an invertible companion matrix, O(1) memory.

    Pure periodicity (no tail) means the first repeat is the start vector,
    so no hash of visited states is needed.
    """
    t = tuple(c % p for c in core.t)
    start = tuple(c % p for c in v)
    cur = companion_step(start, t, p)
    n = 1
    bound = p ** core.k
    while cur != start:
        cur = companion_step(cur, t, p)
        n += 1
        if n > bound:
            raise InternalInconsistency("orbit failed to close within p^k steps")
    return n


def matrix_order(m: FpMatrix) -> int:
    """Least n >= 1 with m^n = I, by plain iteration.

    The order of an invertible matrix whose characteristic polynomial has
    degree n is at most p^n - 1; exceeding that bound trips an internal
    assertion rather than looping forever.
    """
    if m.det() == 0:
        raise SingularMatrix("singular matrices have no multiplicative order")
    ident = FpMatrix.identity(m.p, m.n)
    bound = m.p ** m.n - 1
    power = m
    n = 1
    while power != ident:
        power = power * m
        n += 1
        if n > bound:
            raise InternalInconsistency("matrix order exceeded p^k - 1")
    return n


def matrix_power_cycle(m: FpMatrix) -> tuple[int, int]:
    """(preperiod, period) of the sequence I, m, m^2, ... under hashing."""
    seen: dict[FpMatrix, int] = {}
    states: list[FpMatrix] = []
    cur = FpMatrix.identity(m.p, m.n)
    while cur not in seen:
        seen[cur] = len(states)
        states.append(cur)
        cur = cur * m
    first = seen[cur]
    return first, len(states) - first

"""Matrix arithmetic over F_p, multiplicative orders, and orbits.

The powering oracle is a naive row-by-column multiply written here, so the
square-and-multiply path in the package is checked against something dumber.
"""

import random

import pytest

from recurring.errors import ModulusMismatch, SingularMatrix
from recurring.fplinalg import (
    FpMatrix,
    companion_step,
    cycle_length,
    matrix_order,
    matrix_power_cycle,
    vector_orbit,
)
from recurring.intcore import new_core


def mul_oracle(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    n, p = a.n, a.p
    return FpMatrix(
        p,
        [[sum(a.rows[i][l] * b.rows[l][j] for l in range(n)) for j in range(n)] for i in range(n)],
    )


def pow_oracle(a: FpMatrix, e: int) -> FpMatrix:
    acc = FpMatrix.identity(a.p, a.n)
    for _ in range(e):
        acc = mul_oracle(acc, a)
    return acc


FIB2 = FpMatrix.companion(new_core([1, 1]), 2)
FIB3 = FpMatrix.companion(new_core([1, 1]), 3)


class TestMatrixOps:
    def test_cube_is_identity(self):
        assert pow_oracle(FIB2, 3) == FpMatrix.identity(2, 2)
        assert FIB2.pow(3) == FpMatrix.identity(2, 2)

    def test_pow_matches_oracle_random(self):
        rng = random.Random(4)
        for _ in range(25):
            p = rng.choice([2, 3, 5, 7])
            n = rng.randint(1, 4)
            m = FpMatrix(p, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
            e = rng.randint(0, 9)
            assert m.pow(e) == pow_oracle(m, e)

    def test_identity_rank(self):
        for n in range(1, 5):
            assert FpMatrix.identity(7, n).rank() == n

    def test_rank_of_product_bounded(self):
        rng = random.Random(8)
        for _ in range(30):
            p = rng.choice([2, 3, 5])
            n = rng.randint(1, 4)
            a = FpMatrix(p, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
            b = FpMatrix(p, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
            assert (a * b).rank() <= min(a.rank(), b.rank())

    def test_singular_companion_inverse(self):
        # k = 2, t = (1, 2): det = -2 = 0 mod 2
        m = FpMatrix.companion(new_core([1, 2]), 2)
        assert m.det() == 0
        with pytest.raises(SingularMatrix):
            m.inverse()

    def test_negative_powers(self):
        rng = random.Random(15)
        count = 0
        while count < 20:
            p = rng.choice([3, 5, 7])
            n = rng.randint(1, 3)
            m = FpMatrix(p, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
            if m.det() == 0:
                continue
            e = rng.randint(1, 20)
            assert m.pow(e) * m.pow(-e) == FpMatrix.identity(p, n)
            count += 1

    def test_det_multiplicative(self):
        rng = random.Random(23)
        for _ in range(30):
            p = rng.choice([2, 5, 11])
            n = rng.randint(1, 4)
            a = FpMatrix(p, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
            b = FpMatrix(p, [[rng.randrange(p) for _ in range(n)] for _ in range(n)])
            assert (a * b).det() == (a.det() * b.det()) % p

    def test_dimension_mismatch(self):
        with pytest.raises(ModulusMismatch):
            FIB2 * FpMatrix.identity(2, 3)


class TestMatrixOrder:
    def test_fibonacci_orders(self):
        assert matrix_order(FIB2) == 3
        assert matrix_order(FIB3) == 8  # bound p^k - 1 attained

    def test_scalar_order(self):
        # order of 2 in F_7 is 3
        assert matrix_order(FpMatrix(7, [[2]])) == 3

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrix):
            matrix_order(FpMatrix.companion(new_core([1, 2]), 2))

    def test_order_bound(self):
        rng = random.Random(31)
        count = 0
        while count < 20:
            p = rng.choice([2, 3, 5])
            k = rng.randint(1, 3)
            t = [rng.randint(-4, 4) for _ in range(k)]
            if t[-1] % p == 0 or t[-1] == 0:
                continue
            m = FpMatrix.companion(new_core(t), p)
            assert matrix_order(m) <= p ** k - 1
            count += 1


class TestOrbits:
    def test_reference_orbit(self):
        record = vector_orbit((1, 0), FIB2)
        assert record.states == ((1, 0), (0, 1), (1, 1))
        assert record.preperiod == 0
        assert record.period == 3

    def test_zero_is_fixed(self):
        record = vector_orbit((0, 0), FIB2)
        assert record.states == ((0, 0),)
        assert record.period == 1

    def test_singular_orbit_by_hand(self):
        # t = (1, 2) mod 2: A = [[0,1],[0,1]]; (1,0) -> (0,1) -> (0,1) ...
        a = FpMatrix.companion(new_core([1, 2]), 2)
        assert a.row_times((1, 0)) == (0, 1)
        assert a.row_times((0, 1)) == (0, 1)
        record = vector_orbit((1, 0), a)
        assert record.states == ((1, 0), (0, 1))
        assert record.preperiod == 1
        assert record.period == 1

    def test_matrix_power_cycle_singular(self):
        a = FpMatrix.companion(new_core([1, 2]), 2)
        assert matrix_power_cycle(a) == (1, 1)

    def test_matrix_power_cycle_invertible(self):
        assert matrix_power_cycle(FIB2) == (0, 3)

    def test_companion_step_matches_row_times(self):
        rng = random.Random(42)
        for _ in range(40):
            p = rng.choice([2, 3, 5, 7])
            k = rng.randint(1, 5)
            t = tuple(rng.randrange(p) for _ in range(k - 1)) + (rng.randrange(1, p),)
            core = new_core(t)
            a = FpMatrix.companion(core, p)
            v = tuple(rng.randrange(p) for _ in range(k))
            tm = tuple(c % p for c in core.t)
            assert companion_step(v, tm, p) == a.row_times(v)

    def test_cycle_length_matches_orbit(self):
        rng = random.Random(6)
        count = 0
        while count < 25:
            p = rng.choice([2, 3, 5])
            k = rng.randint(1, 3)
            t = [rng.randint(-3, 3) for _ in range(k)]
            if t[-1] == 0 or t[-1] % p == 0:
                continue
            core = new_core(t)
            a = FpMatrix.companion(core, p)
            v = tuple(rng.randrange(p) for _ in range(k))
            if all(c == 0 for c in v):
                continue
            assert cycle_length(v, core, p) == vector_orbit(v, a).period
            count += 1

    def test_orbit_period_divides_matrix_order(self):
        order = matrix_order(FIB3)
        for v in [(1, 0), (0, 1), (1, 2), (2, 2)]:
            assert order % vector_orbit(v, FIB3).period == 0

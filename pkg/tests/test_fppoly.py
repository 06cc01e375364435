"""Arithmetic and factorization over F_p.

Oracles: root/derivative evaluation for the ramified gcd example, direct
repeated multiplication for orders of X, and product reconstruction for the
factorizer (200 seeded random inputs, as well as frozen cases).
"""

import random

import pytest

from recurring.errors import (
    DivisionByZeroPoly,
    ModulusMismatch,
    NotPrime,
    XNotInvertible,
    ZeroPolynomial,
)
from recurring.fppoly import (
    FpPoly,
    factorize,
    gcd,
    is_irreducible,
    is_squarefree,
    order_of_x_mod,
    powmod,
    prime_factors,
    require_prime,
    xgcd,
)
from recurring.intcore import IntPoly, new_core, resultant, derivative

FIB_MOD = lambda p: FpPoly.from_int_poly(IntPoly([-1, -1, 1]), p)  # noqa: E731


def order_by_powering_oracle(f: FpPoly, multiplicity: int) -> int:
    """Multiply X into an accumulator until it returns to 1."""
    modulus = f ** multiplicity
    x = FpPoly.x(f.p)
    one = FpPoly.one(f.p) % modulus
    acc = x % modulus
    n = 1
    while acc != one:
        acc = (acc * x) % modulus
        n += 1
        assert n <= f.p ** modulus.degree(), "order oracle ran away"
    return n


def random_poly(rng: random.Random, p: int, max_deg: int) -> FpPoly:
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
    return FpPoly(p, coeffs)


class TestArithmetic:
    def test_construction_reduces(self):
        f = FpPoly(5, [7, -1, 10])
        assert f.coeffs == (2, 4)

    def test_not_prime_rejected(self):
        with pytest.raises(NotPrime):
            FpPoly(6, [1])
        with pytest.raises(NotPrime):
            require_prime(1)

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatch):
            FpPoly(5, [1]) + FpPoly(7, [1])

    def test_divmod(self):
        a = FpPoly(7, [3, 0, 2, 1])
        b = FpPoly(7, [1, 4])
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree() < b.degree()

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroPoly):
            divmod(FpPoly(5, [1]), FpPoly(5))

    def test_string(self):
        assert str(FpPoly(5, [4, 4, 1])) == "x^2+4x+4"
        assert str(FpPoly(5)) == "0"


class TestGcd:
    def test_ramified_gcd_example(self):
        # 3 is a double root of x^2 - x - 1 mod 5: both f and f' vanish there.
        f = FIB_MOD(5)
        fp = f.derivative()
        assert f.evaluate(3) == 0 and fp.evaluate(3) == 0
        assert gcd(f, fp) == FpPoly(5, [2, 1])  # x + 2 = x - 3, monic

    def test_gcd_with_zero(self):
        a = FpPoly(7, [2, 4])
        assert gcd(a, FpPoly(7)) == a.monic()

    def test_xgcd_split_example(self):
        a = FpPoly(11, [-4, 1])
        b = FpPoly(11, [-8, 1])
        g, u, v = xgcd(a, b)
        assert g.is_one()
        assert u * a + v * b == FpPoly.one(11)

    def test_xgcd_identity_random(self):
        rng = random.Random(3)
        for _ in range(60):
            p = rng.choice([2, 3, 5, 7, 13])
            a = random_poly(rng, p, 4)
            b = random_poly(rng, p, 4)
            g, u, v = xgcd(a, b)
            assert u * a + v * b == g
            assert (a % g).is_zero() and (b % g).is_zero()


class TestFactorize:
    def test_ramified_square(self):
        fac = factorize(FIB_MOD(5))
        assert fac.factors == ((FpPoly(5, [2, 1]), 2),)
        assert not fac.is_squarefree()

    def test_irreducible_mod_2(self):
        f = FIB_MOD(2)
        assert all(f.evaluate(a) != 0 for a in range(2))
        fac = factorize(f)
        assert fac.factors == ((f, 1),)
        assert is_irreducible(f)

    def test_split_mod_11(self):
        f = FIB_MOD(11)
        assert f.evaluate(4) == 0 and f.evaluate(8) == 0
        fac = factorize(f)
        assert fac.factors == ((FpPoly(11, [-4, 1]), 1), (FpPoly(11, [-8, 1]), 1))

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            factorize(FpPoly(5))

    def test_reconstruction_random(self):
        rng = random.Random(2024)
        for _ in range(200):
            p = rng.choice([2, 3, 5, 7, 11, 31])
            f = random_poly(rng, p, 6)
            if f.degree() < 1:
                continue
            fac = factorize(f)
            assert fac.product() == f
            assert sum(e * g.degree() for g, e in fac.factors) == f.degree()
            assert all(g.lc() == 1 for g, _ in fac.factors)
            assert len({g for g, _ in fac.factors}) == len(fac.factors)

    def test_factors_are_irreducible(self):
        rng = random.Random(5)
        for _ in range(40):
            p = rng.choice([2, 3, 5])
            f = random_poly(rng, p, 6)
            if f.degree() < 1:
                continue
            for g, _ in factorize(f).factors:
                assert is_irreducible(g)


class TestSquarefree:
    def test_frozen(self):
        assert not is_squarefree(FIB_MOD(5))
        assert is_squarefree(FIB_MOD(11))
        assert is_squarefree(FpPoly(7, [-1, 1]))

    def test_matches_resultant_route(self):
        rng = random.Random(17)
        for _ in range(80):
            k = rng.randint(1, 4)
            t = [rng.randint(-5, 5) for _ in range(k - 1)] + [rng.choice([1, -1, 2, 3, -4, 5])]
            core = new_core(t)
            p = rng.choice([2, 3, 5, 7, 11, 13])
            c = core.as_poly()
            res = resultant(c, derivative(c)) if k > 1 else 1
            assert is_squarefree(FpPoly.from_int_poly(c, p)) == (res % p != 0)

    def test_derivative_vanishing_means_p_th_power(self):
        # x^2 + 1 mod 2 = (x + 1)^2 has zero derivative
        f = FpPoly(2, [1, 0, 1])
        assert f.derivative().is_zero()
        assert not is_squarefree(f)


class TestOrderOfX:
    def test_ramified_lift(self):
        f = FpPoly(5, [-3, 1])
        assert order_by_powering_oracle(f, 2) == 20
        assert order_of_x_mod(f, 2) == 20

    def test_trivial(self):
        assert order_of_x_mod(FpPoly(7, [-1, 1]), 1) == 1

    def test_quadratic_field(self):
        f = FIB_MOD(2)
        assert order_by_powering_oracle(f, 1) == 3
        assert order_of_x_mod(f, 1) == 3

    def test_oracle_agreement_random(self):
        rng = random.Random(9)
        count = 0
        while count < 30:
            p = rng.choice([2, 3, 5, 7])
            f = random_poly(rng, p, 3).monic()
            if f.degree() < 1 or f.evaluate(0) == 0 or not is_irreducible(f):
                continue
            mult = rng.randint(1, 3)
            assert order_of_x_mod(f, mult) == order_by_powering_oracle(f, mult)
            count += 1

    def test_divides_field_unit_group(self):
        rng = random.Random(21)
        count = 0
        while count < 25:
            p = rng.choice([2, 3, 5, 7, 11])
            f = random_poly(rng, p, 4).monic()
            if f.degree() < 1 or f.evaluate(0) == 0 or not is_irreducible(f):
                continue
            assert (p ** f.degree() - 1) % order_of_x_mod(f, 1) == 0
            count += 1

    def test_x_not_invertible(self):
        with pytest.raises(XNotInvertible):
            order_of_x_mod(FpPoly(5, [0, 1]), 1)


def test_powmod_matches_plain_power():
    rng = random.Random(13)
    for _ in range(30):
        p = rng.choice([3, 5, 7])
        a = random_poly(rng, p, 3)
        m = random_poly(rng, p, 4)
        if m.degree() < 1:
            continue
        e = rng.randint(0, 12)
        assert powmod(a, e, m) == (a ** e) % m


def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(12) == [2, 3]
    assert prime_factors(30) == [2, 3, 5]
    assert prime_factors(31 ** 4 - 1) == [2, 3, 5, 13, 37]

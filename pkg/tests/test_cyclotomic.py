import math
from fractions import Fraction

import pytest

from dtsic import ConductorMismatch, CycNum, cyclotomic_poly, euler_phi

CONDUCTORS = (3, 4, 8, 12)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 8, 12)] == [1, 1, 2, 2, 4, 4]


def test_defining_relations():
    i = CycNum.zeta(4)
    assert i * i == -1
    assert (CycNum.rational(1, 4) + i * 2) * (CycNum.rational(1, 4) - i * 2) == 5
    z3 = CycNum.zeta(3)
    assert z3 + z3 * z3 == -1
    z8 = CycNum.zeta(8)
    assert z8 ** 8 == 1 and z8 ** 4 == -1


def test_conjugation_basics():
    i = CycNum.zeta(4)
    assert i.conj() == -i
    q = CycNum.rational(Fraction(5, 3), 4)
    assert q.conj() == q
    z12 = CycNum.zeta(12)
    assert z12.conj() == CycNum.zeta(12, 11)
    assert z12.conj().conj() == z12


def test_conj_against_norm_oracle(rng):
    # conj must make a*conj(a) a nonnegative real, for random elements
    for n in CONDUCTORS:
        for _ in range(20):
            a = _random_elt(n, rng)
            norm = a * a.conj()
            assert (norm - norm.conj()).is_zero()
            val = norm.to_complex()
            assert abs(val.imag) < 1e-20
            assert val.real >= 0.0


def test_real_part():
    i = CycNum.zeta(4)
    assert i.real() == 0
    assert (CycNum.rational(3, 4) + i * 2).real() == 3
    assert CycNum.zeta(3).real() == Fraction(-1, 2)
    a = CycNum.zeta(12, 5)
    assert a.real().conj() == a.real()


def test_float_evaluation():
    assert CycNum.rational(Fraction(1, 2)).to_complex() == 0.5 + 0j
    i_val = CycNum.zeta(4).to_complex()
    assert abs(i_val - 1j) < 1e-15
    re8 = CycNum.zeta(8).real().to_complex()
    assert abs(re8.real - math.sqrt(2) / 2) < 1e-15
    assert abs(re8.imag) == 0.0


def _random_elt(n, rng, span=9):
    return CycNum(n, [Fraction(rng.randint(-span, span), rng.randint(1, 7))
                      for _ in range(euler_phi(n))])


def test_field_axioms(rng):
    for n in CONDUCTORS:
        for _ in range(200):
            a = _random_elt(n, rng)
            b = _random_elt(n, rng)
            c = _random_elt(n, rng)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert (a * a.inverse()).is_one()
                assert ((b / a) * a) == b


def test_conj_is_ring_homomorphism(rng):
    for n in CONDUCTORS:
        for _ in range(50):
            a = _random_elt(n, rng)
            b = _random_elt(n, rng)
            assert (a * b).conj() == a.conj() * b.conj()
            assert (a + b).conj() == a.conj() + b.conj()


def test_embedding_commutes_with_arithmetic(rng):
    for _ in range(50):
        a = _random_elt(4, rng)
        b = _random_elt(4, rng)
        assert (a * b).embed(12) == a.embed(12) * b.embed(12)
        assert (a + b).embed(12) == a.embed(12) + b.embed(12)
    i = CycNum.zeta(4)
    assert i.embed(12) == CycNum.zeta(12, 3)


def test_cross_conductor_equality():
    assert CycNum.rational(5, 4) == CycNum.rational(5, 12)
    assert CycNum.zeta(4) == CycNum.zeta(12, 3)
    assert CycNum.zeta(4) != CycNum.zeta(12)


def test_errors():
    with pytest.raises(ConductorMismatch):
        CycNum.zeta(4) + CycNum.zeta(3)
    with pytest.raises(ZeroDivisionError):
        CycNum.zeta(4) / CycNum.rational(0, 4)
    with pytest.raises(ZeroDivisionError):
        CycNum.rational(0, 3).inverse()
    with pytest.raises(ValueError):
        CycNum.zeta(4).embed(3)
    with pytest.raises(ValueError):
        CycNum.zeta(4).as_fraction()


def test_real_sign_guard():
    assert CycNum.rational(Fraction(3, 7), 12).real_sign() == 1
    assert CycNum.rational(-2, 3).real_sign() == -1
    assert CycNum.rational(0, 8).real_sign() == 0
    z = CycNum.zeta(12)
    sqrt3 = z * 2 - z ** 3
    assert sqrt3.real_sign() == 1
    assert (sqrt3 - 2).real_sign() == -1
    with pytest.raises(ValueError):
        CycNum.zeta(4).real_sign()


def test_json_serialisation():
    a = CycNum(4, [Fraction(1, 2), Fraction(-3)])
    blob = a.to_json()
    assert blob == {"conductor": 4, "coeffs": [[1, 2], [-3, 1]]}


def test_galois_orbit_fixes_rationals():
    q = CycNum.rational(Fraction(7, 5), 12)
    for j in (1, 5, 7, 11):
        assert q.galois(j) == q
    with pytest.raises(ValueError):
        CycNum.zeta(12).galois(6)

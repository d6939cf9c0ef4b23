from fractions import Fraction

import pytest

from dtsic import CycNum, ExactMatrix, shift_phase
from dtsic.cyclotomic import ConductorMismatch, euler_phi


def _random_matrix(rows, cols, n, rng, span=4):
    deg = euler_phi(n)
    return ExactMatrix(rows, cols, n,
                       [CycNum(n, [Fraction(rng.randint(-span, span))
                                   for _ in range(deg)])
                        for _ in range(rows * cols)])


def test_identity_multiplication(rng):
    m = _random_matrix(8, 8, 4, rng)
    assert ExactMatrix.identity(8, 4) * m == m
    assert m * ExactMatrix.identity(8, 4) == m


def test_weyl_commutation_d3():
    x, z = shift_phase(3)
    w = CycNum.zeta(3)
    assert z * x == (x * z).scale(w)


def test_hoggar_projector_idempotent(hoggar):
    p0 = hoggar.projectors[0]
    assert p0 * p0 == p0
    assert p0.dagger() == p0
    assert p0.trace().is_one()


def test_dagger():
    x, z = shift_phase(2, 4)
    assert x.dagger() == x
    i = CycNum.zeta(4)
    y = (x * z).scale(i)
    assert y.dagger() == y
    x3, z3 = shift_phase(3)
    assert z3.dagger() == z3 * z3
    m = ExactMatrix(1, 2, 4, [i, CycNum.rational(2, 4)])
    assert m.dagger().rows == 2 and m.dagger()[0, 0] == -i


def test_trace():
    assert ExactMatrix.identity(8).trace() == 8
    x, _ = shift_phase(2, 4)
    assert x.trace().is_zero()
    with pytest.raises(ValueError):
        ExactMatrix.zeros(2, 3).trace()


def test_kron():
    i2 = ExactMatrix.identity(2, 4)
    assert i2.kron(i2).kron(i2) == ExactMatrix.identity(8, 4)
    a = ExactMatrix(2, 2, 1, [Fraction(x) for x in (1, 2, 3, 4)])
    b = ExactMatrix(2, 2, 1, [Fraction(x) for x in (0, 5, 6, 7)])
    k = a.kron(b)
    assert (k.rows, k.cols) == (4, 4)
    assert k[0, 1] == 5 and k[2, 0] == 18  # a(1,0)*b(0,0) = 3*6
    assert k[3, 3] == 28


def test_hadamard_cube_row_sums():
    h2 = ExactMatrix(4, 4, 1,
                     [Fraction(-1) if i == j else Fraction(1)
                      for i in range(4) for j in range(4)])
    h6 = h2.kron(h2).kron(h2)
    for i in range(64):
        assert sum(e.as_fraction() for e in h6.row(i)) == 8


def test_rank():
    assert ExactMatrix.identity(8).rank() == 8
    j4 = ExactMatrix(4, 4, 1, [Fraction(1)] * 16)
    assert j4.rank() == 1
    assert ExactMatrix.zeros(5, 3).rank() == 0


def test_rank_nullity(rng):
    for _ in range(20):
        rows, cols = rng.randint(2, 5), rng.randint(2, 5)
        inner = rng.randint(1, min(rows, cols))
        a = _random_matrix(rows, inner, 4, rng, span=2)
        b = _random_matrix(inner, cols, 4, rng, span=2)
        m = a * b
        assert m.rank() + m.nullity() == cols
        assert m.rank() <= inner


def test_trace_cyclic(rng):
    for n in (3, 4, 12):
        for _ in range(10):
            a = _random_matrix(4, 4, n, rng, span=3)
            b = _random_matrix(4, 4, n, rng, span=3)
            assert (a * b).trace() == (b * a).trace()


def test_annihilates():
    assert ExactMatrix.identity(8).annihilates([1])
    x, _ = shift_phase(2, 4)
    assert x.annihilates([1, -1])
    assert not x.annihilates([1])


def test_projector_annihilates_01(hesse, rng):
    # any Hermitian idempotent is annihilated by x(x - 1)
    for k in (0, 4, 8):
        assert hesse.projectors[k].annihilates([0, 1])
    from dtsic.ensembles import random_pure_state
    for e_label in ("hesse",):
        p = random_pure_state(hesse, rng).rho
        assert p.annihilates([0, 1])


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        ExactMatrix.identity(2, 4) * ExactMatrix.identity(2, 3)
    with pytest.raises(ValueError):
        ExactMatrix.zeros(2, 3) * ExactMatrix.zeros(2, 3)


def test_scale_and_neg():
    m = ExactMatrix.identity(3)
    assert m.scale(Fraction(1, 2)) + m.scale(Fraction(1, 2)) == m
    assert -m + m == ExactMatrix.zeros(3, 3)
    assert 2 * m == m.scale(2)


def test_json_and_float_export():
    m = ExactMatrix.identity(2, 4)
    blob = m.to_json()
    assert blob["rows"] == 2 and len(blob["entries"]) == 4
    rows = m.to_complex_rows()
    assert rows[0][0] == 1 + 0j and rows[0][1] == 0j

import itertools
from fractions import Fraction

import pytest

from dtsic import (CycNum, ExactMatrix, PauliIndex, SymplecticForm,
                   displacement, hermitize, is_antisymmetric, odd_parity,
                   shift_phase, symplectic_value, y_count)

ALL64 = [PauliIndex.from_linear(2, 3, t) for t in range(64)]


def test_pauli_index_linear_roundtrip():
    for t in range(64):
        idx = PauliIndex.from_linear(2, 3, t)
        assert idx.linear == t
    idx = PauliIndex(3, (2, 1))
    assert idx.linear == 7
    assert PauliIndex.from_linear(3, 1, 7).exps == (2, 1)


def test_shift_phase_qubit():
    x, z = shift_phase(2, 4)
    assert [[x[i, j].as_fraction() for j in range(2)] for i in range(2)] == [[0, 1], [1, 0]]
    assert [[z[i, j].as_fraction() for j in range(2)] for i in range(2)] == [[1, 0], [0, -1]]


def test_shift_phase_qutrit():
    x, z = shift_phase(3)
    w = CycNum.zeta(3)
    assert z[0, 0].is_one() and z[1, 1] == w and z[2, 2] == w * w
    assert x * x * x == ExactMatrix.identity(3, 3)


def test_weyl_commutation():
    for d in (2, 3):
        conductor = 4 if d == 2 else 3
        x, z = shift_phase(d, conductor)
        if d == 2:
            omega = CycNum.rational(-1, conductor)
        else:
            omega = CycNum.zeta(conductor)
        xa = ExactMatrix.identity(d, conductor)
        for a in range(d):
            zb = ExactMatrix.identity(d, conductor)
            for b in range(d):
                lhs = zb * xa
                rhs = (xa * zb).scale(omega ** (a * b))
                assert lhs == rhs, (d, a, b)
                zb = z * zb
            xa = x * xa


def test_displacement_identity_and_d1():
    assert displacement(ALL64[0], 4) == ExactMatrix.identity(8, 4)
    _, z = shift_phase(2, 4)
    assert displacement(ALL64[1], 4) == ExactMatrix.identity(4, 4).kron(z)


def test_all_displacements_unitary():
    eye = ExactMatrix.identity(8, 4)
    for idx in ALL64:
        d = displacement(idx, 4)
        assert d * d.dagger() == eye


def test_displacement_composition_phase(rng):
    # D_k D_l is a root-of-unity multiple of D_{k (+) l}
    for d, m, conductor in ((2, 3, 4), (3, 1, 3)):
        size = d ** (2 * m)
        for _ in range(20):
            k = PauliIndex.from_linear(d, m, rng.randrange(size))
            l = PauliIndex.from_linear(d, m, rng.randrange(size))
            prod = displacement(k, conductor) * displacement(l, conductor)
            target = displacement(k.add(l), conductor)
            phase = None
            for i in range(prod.rows):
                for j in range(prod.cols):
                    if not target[i, j].is_zero():
                        phase = prod[i, j] / target[i, j]
                        break
                if phase is not None:
                    break
            assert phase is not None
            roots = [CycNum.rational(1, conductor), CycNum.rational(-1, conductor)] \
                if d == 2 else [CycNum.zeta(conductor) ** t for t in range(d)]
            assert any(phase == r for r in roots)
            assert prod == target.scale(phase)


def test_hermitize_no_y_unchanged():
    idx = PauliIndex(2, (1, 0, 0, 1, 0, 0))
    assert y_count(idx) == 0
    assert hermitize(idx, 4) == displacement(idx, 4)


def test_hermitize_single_y():
    idx = PauliIndex(2, (1, 1, 0, 0, 0, 0))
    x, z = shift_phase(2, 4)
    i = CycNum.zeta(4)
    y = (x * z).scale(i)
    expected = y.kron(ExactMatrix.identity(4, 4))
    assert hermitize(idx, 4) == expected


def test_hermitize_all_hermitian():
    for idx in ALL64:
        dh = hermitize(idx, 4)
        assert dh == dh.dagger()


def test_symplectic_form():
    sf = SymplecticForm(3)
    omega = sf.matrix
    assert len(omega) == 6
    for i in range(6):
        for j in range(6):
            assert omega[i][j] == -omega[j][i]
    # Omega^2 = -I, hence invertible
    eye = ExactMatrix.identity(6)
    om = ExactMatrix(6, 6, 1, [Fraction(x) for row in omega for x in row])
    assert om * om == eye.scale(-1)


def test_symplectic_values():
    for idx in ALL64:
        assert symplectic_value(idx, idx) == 0
    k1 = ALL64[1]
    odd = [l for l in ALL64 if symplectic_value(k1, l) == 1]
    assert len(odd) == 32
    sf = SymplecticForm(3)
    for k in ALL64[::7]:
        for l in ALL64[::5]:
            assert symplectic_value(k, l) == sf.value(k, l)
            assert symplectic_value(k, l) == symplectic_value(l, k)


def test_antisymmetry_predicates_agree():
    count = 0
    for idx in ALL64:
        anti = is_antisymmetric(idx)
        assert anti == odd_parity(idx) == (y_count(idx) % 2 == 1)
        count += anti
    assert count == 28
    assert not is_antisymmetric(ALL64[0])
    assert is_antisymmetric(PauliIndex(2, (1, 1, 1, 1, 1, 1)))


def test_bad_index_rejected():
    with pytest.raises(AssertionError):
        PauliIndex(2, (0, 1, 2, 0, 0, 0))
    with pytest.raises(AssertionError):
        PauliIndex(2, (0, 1, 0))

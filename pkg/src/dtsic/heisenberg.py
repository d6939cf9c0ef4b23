"""Weyl-Heisenberg machinery: shift/phase operators, multipartite
displacement operators, Hermitised displacements, the symplectic form over
Z_2, and the antisymmetry predicates for triple-qubit displacements.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycNum
from .linalg import ExactMatrix


@dataclass(frozen=True)
class PauliIndex:
    """Exponent tuple (k_0, ..., k_{2m-1}) indexing one displacement.

    The linear index puts k_0 in the most significant digit:
    linear = sum_i k_i * d^(2m-1-i).
    """

    d: int
    exps: tuple[int, ...]

    def __post_init__(self):
        assert self.d >= 2
        assert len(self.exps) % 2 == 0 and self.exps, "need 2m exponents"
        assert all(0 <= k < self.d for k in self.exps)

    @property
    def m(self) -> int:
        return len(self.exps) // 2

    @property
    def linear(self) -> int:
        acc = 0
        for k in self.exps:
            acc = acc * self.d + k
        return acc

    @classmethod
    def from_linear(cls, d: int, m: int, linear: int) -> "PauliIndex":
        assert 0 <= linear < d ** (2 * m)
        exps = []
        for _ in range(2 * m):
            exps.append(linear % d)
            linear //= d
        return cls(d, tuple(reversed(exps)))

    def add(self, other: "PauliIndex") -> "PauliIndex":
        """Entrywise sum mod d of the exponent tuples."""
        assert self.d == other.d and len(self.exps) == len(other.exps)
        return PauliIndex(self.d, tuple((a + b) % self.d
                                        for a, b in zip(self.exps, other.exps)))


@dataclass(frozen=True)
class SymplecticForm:
    """The form f(k,l) = k Omega l^T with Omega = I_m (x) [[0,-1],[1,0]]."""

    m: int

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        size = 2 * self.m
        rows = [[0] * size for _ in range(size)]
        for b in range(self.m):
            rows[2 * b][2 * b + 1] = -1
            rows[2 * b + 1][2 * b] = 1
        return tuple(tuple(r) for r in rows)

    def value(self, k: PauliIndex, l: PauliIndex) -> int:
        """f(k, l) mod 2."""
        assert k.m == l.m == self.m
        omega = self.matrix
        size = 2 * self.m
        acc = 0
        for i in range(size):
            for j in range(size):
                acc += k.exps[i] * omega[i][j] * l.exps[j]
        return acc % 2


def symplectic_value(k: PauliIndex, l: PauliIndex) -> int:
    """Per-factor symplectic pairing sum_b (k_{2b+1} l_{2b} - k_{2b} l_{2b+1}) mod 2."""
    assert k.d == l.d and len(k.exps) == len(l.exps)
    acc = 0
    for b in range(k.m):
        acc += k.exps[2 * b + 1] * l.exps[2 * b] - k.exps[2 * b] * l.exps[2 * b + 1]
    return acc % 2


@functools.lru_cache(maxsize=None)
def shift_phase(d: int, conductor: int | None = None) -> tuple[ExactMatrix, ExactMatrix]:
    """The shift X|j> = |j+1 mod d> and phase Z|j> = w_d^j |j> operators.

    The conductor must make w_d available: d == 2 works in any field,
    otherwise d must divide the conductor.
    """
    assert d >= 2
    if conductor is None:
        conductor = 1 if d == 2 else d
    if d == 2:
        omega = CycNum.rational(-1, conductor)
    else:
        assert conductor % d == 0, f"w_{d} is not in Q(zeta_{conductor})"
        omega = CycNum.zeta(conductor, conductor // d)
    zero = CycNum.rational(0, conductor)
    one = CycNum.rational(1, conductor)
    x_entries = [one if i == (j + 1) % d else zero
                 for i in range(d) for j in range(d)]
    z_entries = [omega ** i if i == j else zero
                 for i in range(d) for j in range(d)]
    return (ExactMatrix(d, d, conductor, x_entries),
            ExactMatrix(d, d, conductor, z_entries))


@functools.lru_cache(maxsize=None)
def _factor_operator(d: int, a: int, b: int, conductor: int) -> ExactMatrix:
    """X^a Z^b on one factor."""
    x, z = shift_phase(d, conductor)
    acc = ExactMatrix.identity(d, conductor)
    for _ in range(b):
        acc = z * acc
    for _ in range(a):
        acc = x * acc
    return acc


def displacement(idx: PauliIndex, conductor: int | None = None) -> ExactMatrix:
    """D_k = X^{k_0} Z^{k_1} (x) X^{k_2} Z^{k_3} (x) ... , phase-free."""
    if conductor is None:
        conductor = 1 if idx.d == 2 else idx.d
    acc = None
    for b in range(idx.m):
        factor = _factor_operator(idx.d, idx.exps[2 * b], idx.exps[2 * b + 1], conductor)
        acc = factor if acc is None else acc.kron(factor)
    return acc


def y_count(idx: PauliIndex) -> int:
    """Number of tensor factors carrying both an X and a Z (d = 2 only)."""
    assert idx.d == 2
    return sum(1 for b in range(idx.m)
               if idx.exps[2 * b] == 1 and idx.exps[2 * b + 1] == 1)


def hermitize(idx: PauliIndex, conductor: int = 4) -> ExactMatrix:
    """The Hermitian displacement: D_k times a factor of i per XZ block.

    Only qubit factors are supported.  The sign convention (+i per factor,
    giving +Y rather than -Y) is checked at construction: the result must
    equal its own conjugate transpose exactly.
    """
    assert idx.d == 2, "hermitisation is defined for qubit factors"
    assert conductor % 4 == 0, "need i in the field"
    op = displacement(idx, conductor)
    phase = CycNum.zeta(conductor, conductor // 4) ** y_count(idx)
    out = op.scale(phase)
    assert out == out.dagger(), "hermitised displacement must be Hermitian"
    return out


def odd_parity(idx: PauliIndex) -> bool:
    """True iff k_0 k_1 + k_2 k_3 + ... + k_{2m-2} k_{2m-1} is odd."""
    acc = 0
    for b in range(idx.m):
        acc += idx.exps[2 * b] * idx.exps[2 * b + 1]
    return acc % 2 == 1


def is_antisymmetric(idx: PauliIndex, conductor: int = 4) -> bool:
    """True iff transpose(D_k) = -D_k, decided on the exact matrix."""
    op = displacement(idx, conductor)
    return op.transpose() == -op

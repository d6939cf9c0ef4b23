"""Exact arithmetic in cyclotomic fields Q(zeta_n) for small conductors.

Elements are stored in the power basis of Q[x]/Phi_n(x), with Fraction
coefficients, so equality with zero is always decidable exactly.  The
conductors that actually occur here are tiny (n <= 12), which keeps every
operation cheap.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath

# Bits of working precision for float evaluation; relative error of an
# evaluated element is far below the 2**-40 sign guard.
_MP_PREC = 128

# |value| below this must be escalated to an exact zero test.
_SIGN_GUARD = Fraction(1, 2**40)

Rational = Union[int, Fraction]


class ConductorMismatch(ValueError):
    """Arithmetic attempted between elements of different conductors."""


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    assert n >= 1
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    """Exact division of polynomials with Fraction coefficients."""
    num = list(num)
    quot = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    dlead = den[-1]
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        coeff = num[-1] / dlead
        quot[shift] = coeff
        for i, d in enumerate(den):
            num[shift + i] -= coeff * d
        while num and num[-1] == 0:
            num.pop()
    return quot, num


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n(x), low order first, monic."""
    assert n >= 1
    if n == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(0)] * (n + 1)
    num[0] = Fraction(-1)
    num[n] = Fraction(1)
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            phi_d = list(cyclotomic_poly(d))
            den = _poly_mul_lists(den, phi_d)
    quot, rem = _poly_divmod(num, den)
    assert not any(rem), "cyclotomic division must be exact"
    return tuple(quot)


def _poly_mul_lists(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@functools.lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Power basis coordinates of zeta^k for k = 0 .. 2*phi(n)-2."""
    deg = euler_phi(n)
    phi = cyclotomic_poly(n)
    rows: list[tuple[Fraction, ...]] = []
    for k in range(deg):
        row = [Fraction(0)] * deg
        row[k] = Fraction(1)
        rows.append(tuple(row))
    # zeta^deg = -(phi[0] + phi[1] z + ... + phi[deg-1] z^(deg-1)), phi monic
    for k in range(deg, 2 * deg - 1):
        prev = rows[k - 1]
        shifted = [Fraction(0)] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            for i in range(deg):
                shifted[i] -= lead * phi[i]
        rows.append(tuple(shifted))
    return tuple(rows)


@functools.lru_cache(maxsize=None)
def _root_powers(n: int):
    """High precision values of zeta_n^k for k < n."""
    with mpmath.workprec(_MP_PREC):
        base = mpmath.exp(2j * mpmath.pi / n)
        return tuple(base**k for k in range(n))


def _as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational value: {x!r}")


class CycNum:
    """An element of Q(zeta_n) in the power basis of Q[x]/Phi_n(x)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable[Rational]):
        coeffs = tuple(_as_fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(n):
            raise ValueError(
                f"conductor {n} needs {euler_phi(n)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def rational(cls, value: Rational, n: int = 1) -> "CycNum":
        coeffs = [Fraction(0)] * euler_phi(n)
        coeffs[0] = _as_fraction(value)
        return cls(n, coeffs)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        """zeta_n^k reduced into the power basis."""
        k %= n
        deg = euler_phi(n)
        if k < deg:
            coeffs = [Fraction(0)] * deg
            coeffs[k] = Fraction(1)
            return cls(n, coeffs)
        phi = cyclotomic_poly(n)
        acc = [Fraction(0)] * deg
        acc[0] = Fraction(1)
        # multiply by zeta k times; the overflow of the lead coefficient
        # reduces through zeta^deg = -(phi_0 + ... + phi_{deg-1} zeta^{deg-1})
        for _ in range(k):
            lead = acc[-1]
            acc = [Fraction(0)] + acc[:-1]
            if lead:
                for i in range(deg):
                    acc[i] -= lead * phi[i]
        return cls(n, acc)

    # -- helpers -----------------------------------------------------

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.n != self.n:
                raise ConductorMismatch(
                    f"conductor mismatch: {self.n} vs {other.n}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(other, self.n)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycNum(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycNum(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycNum(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        deg = len(a)
        if deg == 1:
            return CycNum(self.n, (a[0] * b[0],))
        # scalar fast path keeps projector normalisation cheap
        if all(c == 0 for c in b[1:]):
            s = b[0]
            return CycNum(self.n, tuple(c * s for c in a))
        if all(c == 0 for c in a[1:]):
            s = a[0]
            return CycNum(self.n, tuple(c * s for c in b))
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y != 0:
                    conv[i + j] += x * y
        rows = _reduction_rows(self.n)
        out = list(conv[:deg])
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c == 0:
                continue
            row = rows[k]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
        return CycNum(self.n, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        deg = euler_phi(self.n)
        if deg == 1 or all(c == 0 for c in self.coeffs[1:]):
            inv = [Fraction(0)] * deg
            inv[0] = 1 / self.coeffs[0]
            return CycNum(self.n, inv)
        # extended Euclid in Q[x] against Phi_n, which is irreducible
        phi = list(cyclotomic_poly(self.n))
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        r0, r1 = phi, a
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not any(r):
                break
            s = [x - y for x, y in zip(_pad(s0, len(_poly_mul_lists(q, s1))),
                                       _poly_mul_lists(q, s1))]
            s = _trim(s)
            r0, r1 = r1, r
            s0, s1 = s1, s
        # r1 is a nonzero constant gcd; s1 / r1 is the inverse mod Phi
        assert len(_trim(r1)) == 1, "Phi_n irreducible, gcd must be constant"
        const = r1[0]
        inv_coeffs = [c / const for c in s1]
        inv_coeffs = (inv_coeffs + [Fraction(0)] * deg)[:deg]
        result = CycNum(self.n, inv_coeffs)
        assert (result * self).is_one()
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if all(c == 0 for c in other.coeffs[1:]):
            if other.coeffs[0] == 0:
                raise ZeroDivisionError("division by zero")
            s = 1 / other.coeffs[0]
            return CycNum(self.n, tuple(c * s for c in self.coeffs))
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        assert k >= 0
        acc = CycNum.rational(1, self.n)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- Galois action -------------------------------------------------

    def galois(self, j: int) -> "CycNum":
        """Apply zeta -> zeta^j, valid when gcd(j, n) = 1."""
        if math.gcd(j, self.n) != 1:
            raise ValueError(f"{j} is not coprime to the conductor {self.n}")
        deg = euler_phi(self.n)
        out = CycNum.rational(0, self.n)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            out = out + CycNum.zeta(self.n, (k * j) % self.n) * c
        return out

    def conj(self) -> "CycNum":
        """Complex conjugation, zeta -> zeta^(-1)."""
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    def real(self) -> "CycNum":
        return (self + self.conj()) * Fraction(1, 2)

    def imag_part_times_i(self) -> "CycNum":
        """a - conj(a), which is 2i * Im(a); zero iff a is real."""
        return self - self.conj()

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_real(self) -> bool:
        return (self - self.conj()).is_zero()

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational value: {self!r}")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        if other.n == self.n:
            return self.coeffs == other.coeffs
        m = math.lcm(self.n, other.n)
        return self.embed(m).coeffs == other.embed(m).coeffs

    __hash__ = None  # exact values are compared, never hashed

    # -- embeddings ------------------------------------------------------

    def embed(self, m: int) -> "CycNum":
        """Embed into Q(zeta_m) via zeta_n -> zeta_m^(m/n); needs n | m."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise ValueError(f"no embedding: {self.n} does not divide {m}")
        step = m // self.n
        out = CycNum.rational(0, m)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            out = out + CycNum.zeta(m, k * step) * c
        return out

    # -- numerics --------------------------------------------------------

    def eval_mp(self):
        """Evaluate at zeta_n = exp(2 pi i / n) with 128-bit precision."""
        with mpmath.workprec(_MP_PREC):
            roots = _root_powers(self.n)
            acc = mpmath.mpc(0)
            for k, c in enumerate(self.coeffs):
                if c != 0:
                    acc += mpmath.mpf(c.numerator) / c.denominator * roots[k]
            return acc

    def to_complex(self) -> complex:
        v = self.eval_mp()
        return complex(float(v.real), float(v.imag))

    def real_sign(self) -> int:
        """Sign of a real element; guarded against float underflow.

        Values with |float| < 2^-40 are escalated to the exact zero test,
        and a genuinely nonzero value in that band is refused rather than
        guessed at.
        """
        if not (self - self.conj()).is_zero():
            raise ValueError("real_sign on a non-real value")
        if self.is_zero():
            return 0
        v = self.eval_mp()
        with mpmath.workprec(_MP_PREC):
            if abs(v.real) < mpmath.mpf(2) ** -40:
                raise ArithmeticError(
                    "nonzero value below the sign guard; refusing to guess"
                )
            return 1 if v.real > 0 else -1

    # -- misc --------------------------------------------------------------

    def to_json(self):
        return {
            "conductor": self.n,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    def __repr__(self):
        if self.is_rational():
            return f"CycNum({self.n}, {self.coeffs[0]})"
        return f"CycNum({self.n}, {list(map(str, self.coeffs))})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*z{self.n}^{k}" if k > 1 else f"{c}*z{self.n}")
        return " + ".join(terms) if terms else "0"


def _pad(xs: list[Fraction], size: int) -> list[Fraction]:
    return xs + [Fraction(0)] * (size - len(xs))


def _trim(xs: list[Fraction]) -> list[Fraction]:
    xs = list(xs)
    while len(xs) > 1 and xs[-1] == 0:
        xs.pop()
    return xs

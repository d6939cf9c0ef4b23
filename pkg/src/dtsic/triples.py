"""Triple products of SIC projectors and the combinatorics they generate:
the S_+/S_-/S_0 classification, the C_01k cube, Hermitised phase signs,
the two-graph axioms, and the Seidel/Gram construction of 64 equiangular
lines in R^36.

For rank-1 projectors the cyclic trace reduces to Gram-matrix data:
tr(Pi_j Pi_k Pi_l) = <j|k><k|l><l|j> / norm^6, which is what makes the
full 41664-triple sweep cheap while staying exact.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycNum
from .ensembles import SicEnsemble, _apply, _inner
from .heisenberg import PauliIndex, hermitize, symplectic_value
from .linalg import ExactMatrix

Triple = tuple[int, int, int]


class ClassificationError(RuntimeError):
    """A Hoggar triple product fell outside {0, 1/27, -1/27}."""


@dataclass(frozen=True)
class TripleClass:
    """Partition of the sorted index triples by the sign of C_jkl."""

    s_plus: frozenset[Triple]
    s_minus: frozenset[Triple]
    s_zero: frozenset[Triple]

    def __post_init__(self):
        total = len(self.s_plus) + len(self.s_minus) + len(self.s_zero)
        assert total == len(self.s_plus | self.s_minus | self.s_zero), "classes overlap"


def triple_product(e: SicEnsemble, j: int, k: int, l: int) -> tuple[CycNum, CycNum]:
    """(T, C) with T = tr(Pi_j Pi_k Pi_l) exact and C = Re T.

    Valid for repeated indices as well, where T collapses to a pair
    overlap.
    """
    g = e.gram
    t = g[j][k] * g[k][l] * g[l][j] * (e.norm_sq ** 3).inverse()
    return t, (t + t.conj()) * Fraction(1, 2)


@functools.lru_cache(maxsize=None)
def _gram_gauss(e: SicEnsemble):
    """Gram entries as (re, im) integer pairs; requires conductor 4 and
    integral coordinates, which the Hoggar-pair vectors satisfy."""
    assert e.conductor == 4
    out = []
    for row in e.gram:
        flat = []
        for g in row:
            a, b = g.coeffs
            assert a.denominator == 1 and b.denominator == 1
            flat.append((a.numerator, b.numerator))
        out.append(flat)
    return out


@functools.lru_cache(maxsize=None)
def classify(e: SicEnsemble) -> TripleClass:
    """Partition all sorted triples of distinct indices by C_jkl.

    The values must be 0 or +-1/27 times unity; anything else aborts with
    the offending triple.
    """
    assert e.d == 8, "the classification is a d = 8 construction"
    gram = _gram_gauss(e)
    # unnormalised: C * norm^6 = Re(G_jk G_kl G_lj); +-1/27 * 12^3 = +-64
    plus, minus, zero = [], [], []
    norm_cubed = e.norm_sq.as_fraction() ** 3
    hi = int(norm_cubed / 27)
    size = e.size
    for j in range(size):
        gj = gram[j]
        for k in range(j + 1, size):
            a, b = gj[k]
            gk = gram[k]
            for l in range(k + 1, size):
                c, d_ = gk[l]
                x, y = gram[l][j]
                # Re[(a+bi)(c+di)(x+yi)]
                re = (a * c - b * d_) * x - (a * d_ + b * c) * y
                if re == 0:
                    zero.append((j, k, l))
                elif re == hi:
                    plus.append((j, k, l))
                elif re == -hi:
                    minus.append((j, k, l))
                else:
                    raise ClassificationError(
                        f"triple ({j},{k},{l}) has Re tr = {Fraction(re, int(norm_cubed))}"
                    )
    return TripleClass(frozenset(plus), frozenset(minus), frozenset(zero))


def per_point_counts(cls: TripleClass, size: int = 64) -> tuple[list[int], list[int]]:
    """(N_k^-, N_k^+): how many S_-/S_+ triples contain each point."""
    n_minus = [0] * size
    n_plus = [0] * size
    for t in cls.s_minus:
        for x in t:
            n_minus[x] += 1
    for t in cls.s_plus:
        for x in t:
            n_plus[x] += 1
    return n_minus, n_plus


def per_pair_counts(cls: TripleClass, size: int = 64):
    """(N_kl^-, N_kl^+) as dicts over unordered pairs."""
    n_minus: dict[tuple[int, int], int] = {}
    n_plus: dict[tuple[int, int], int] = {}
    for pair in itertools.combinations(range(size), 2):
        n_minus[pair] = 0
        n_plus[pair] = 0
    for t in cls.s_minus:
        for pair in itertools.combinations(t, 2):
            n_minus[pair] += 1
    for t in cls.s_plus:
        for pair in itertools.combinations(t, 2):
            n_plus[pair] += 1
    return n_minus, n_plus


def triple_phase(e: SicEnsemble, j: int, k: int, l: int) -> CycNum:
    """T/|T| for distinct Hoggar indices; always one of {1, -1, i, -i}."""
    assert e.d == 8 and len({j, k, l}) == 3
    t, _ = triple_product(e, j, k, l)
    phase = t * 27
    unit = (phase * phase.conj())
    assert unit.is_one(), "distinct Hoggar triple products have modulus 1/27"
    return phase


@dataclass(frozen=True)
class CubeC01:
    """The 64 values C_01k, displayed as a 4x4x4 cube.

    Axis coordinates are sigma indices in the order {I, Z, X, XZ}: the
    coordinate for qubit b is k_{2b+1} + 2 k_{2b}.
    """

    values: tuple[Fraction, ...]

    def value_at(self, a: int, b: int, c: int) -> Fraction:
        k0, k1 = a >> 1, a & 1
        k2, k3 = b >> 1, b & 1
        k4, k5 = c >> 1, c & 1
        linear = k0 * 32 + k1 * 16 + k2 * 8 + k3 * 4 + k4 * 2 + k5
        return self.values[linear]

    def histogram(self) -> dict[Fraction, int]:
        out: dict[Fraction, int] = {}
        for v in self.values:
            out[v] = out.get(v, 0) + 1
        return out

    def render_text(self) -> str:
        """Four 4x4 slices indexed by the first-qubit coordinate.

        Legend: R = 1/9 (trivial), + = 1/27, - = -1/27, 0 = vanishing.
        """
        symbol = {
            Fraction(1, 9): "R",
            Fraction(1, 27): "+",
            Fraction(-1, 27): "-",
            Fraction(0): "0",
        }
        lines = []
        for a in range(4):
            lines.append(f"slice qubit1={a}")
            for b in range(4):
                row = " ".join(symbol[self.value_at(a, b, c)] for c in range(4))
                lines.append(row)
            lines.append("")
        return "\n".join(lines)


def cube_c01(e: SicEnsemble) -> CubeC01:
    """All values C_01k for the d = 8 ensemble, k in linear order."""
    assert e.d == 8
    values = []
    for k in range(64):
        _, c = triple_product(e, 0, 1, k)
        values.append(c.as_fraction())
    return CubeC01(tuple(values))


def phase_sign_after_hermitize(e: SicEnsemble, k: int) -> int:
    """Sign of <psi_0| D-hat_k |psi_0>, which is exactly real."""
    idx = PauliIndex.from_linear(e.factor_d, e.m, k)
    op = hermitize(idx, e.conductor)
    val = _inner(e.fiducial, _apply(op, e.fiducial))
    if not (val - val.conj()).is_zero():
        raise ClassificationError(
            f"expectation of hermitised displacement {k} is not real"
        )
    sign = val.real_sign()
    assert sign in (-1, 1), "fiducial expectation of a Hermitian unitary cannot vanish here"
    return sign


def vanishing_matches_symplectic(e: SicEnsemble) -> bool:
    """C_0kl = 0 exactly when the symplectic pairing f(k,l) is odd.

    Swept over all 64 x 64 index pairs (the cube of C_01k is the k = 1
    row of this table).
    """
    assert e.d == 8
    indices = [PauliIndex.from_linear(2, 3, t) for t in range(64)]
    for k in range(64):
        for l in range(64):
            _, c = triple_product(e, 0, k, l)
            odd = symplectic_value(indices[k], indices[l]) == 1
            if c.is_zero() != odd:
                return False
    return True


# ---------------------------------------------------------------------------
# two-graphs and Seidel matrices
# ---------------------------------------------------------------------------


def two_graph_check(triples, size: int = 64) -> bool:
    """The two-graph axioms for a set of sorted triples.

    For every 4-subset {p,q,r,s}: if three of its triples are in the set
    the fourth must be too, and the same for the complement.  Together the
    two implications say each 4-subset contains an even number of member
    triples, which is how the sweep is coded.
    """
    masks = [[0] * size for _ in range(size)]
    for t in triples:
        a, b, c = sorted(t)
        assert 0 <= a < b < c < size, f"bad triple {t}"
        masks[a][b] |= 1 << c
        masks[a][c] |= 1 << b
        masks[b][c] |= 1 << a
    for p in range(size):
        mp = masks[p]
        for q in range(p + 1, size):
            mpq = mp[q]
            for r in range(q + 1, size):
                span = size - r - 1
                if span == 0:
                    break
                full = (1 << span) - 1
                w = (mpq ^ mp[r] ^ masks[q][r]) >> (r + 1)
                if (mpq >> r) & 1:
                    if (w & full) != full:
                        return False
                elif w & full:
                    return False
    return True


@dataclass(frozen=True)
class SeidelMatrix:
    """Symmetric {0, +-1} matrix with zero diagonal."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        size = len(self.rows)
        for i, row in enumerate(self.rows):
            assert len(row) == size
            assert row[i] == 0, "diagonal must vanish"
            for j in range(size):
                assert row[j] == self.rows[j][i], "must be symmetric"
                if i != j:
                    assert row[j] in (-1, 1), "off-diagonal entries are +-1"

    @property
    def size(self) -> int:
        return len(self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.size))

    def to_exact(self) -> ExactMatrix:
        return ExactMatrix(self.size, self.size, 1,
                           [Fraction(x) for row in self.rows for x in row])


def descendant_seidel(triples, v: int, size: int = 64) -> SeidelMatrix:
    """Seidel matrix of the descendant graph at vertex v.

    u and w are adjacent exactly when {u, v, w} lies in the triple set;
    the selected vertex v itself ends up isolated.
    """
    member = set(tuple(sorted(t)) for t in triples)
    rows = []
    for u in range(size):
        row = []
        for w in range(size):
            if u == w:
                row.append(0)
            elif v in (u, w):
                row.append(1)
            elif tuple(sorted((u, v, w))) in member:
                row.append(-1)
            else:
                row.append(1)
        rows.append(tuple(row))
    return SeidelMatrix(tuple(rows))


def gram_from_seidel(a: SeidelMatrix, lam: Fraction) -> ExactMatrix:
    """M = I - (1/lambda) A, the Gram matrix of unit vectors when lambda
    is the least eigenvalue of A."""
    assert lam != 0
    size = a.size
    entries = []
    for i in range(size):
        for j in range(size):
            base = Fraction(1) if i == j else Fraction(0)
            entries.append(base - Fraction(a.rows[i][j], 1) / lam)
    return ExactMatrix(size, size, 1, entries)


# ---------------------------------------------------------------------------
# distinct triple tables for the small ensembles
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def distinct_triple_table(e: SicEnsemble):
    """((j,k,l), C_jkl) for all sorted triples of distinct indices."""
    out = []
    for j, k, l in itertools.combinations(range(e.size), 3):
        _, c = triple_product(e, j, k, l)
        out.append(((j, k, l), c))
    return tuple(out)

"""The four doubly-transitive SIC ensembles and their probabilistic
representations.

Each catalog ensemble is generated by applying the (multipartite)
Weyl-Heisenberg displacement operators to a fiducial vector, ordered by
the linear index of the generating displacement.  All invariants -- rank-1
projectors, sum to d*identity, the equiangularity constant -- are checked
exactly at construction time.

Conductor choices, fixed per ensemble: the qubit tetrahedra live in
Q(zeta_12) (which contains both i and sqrt(3)), the Hesse SIC in
Q(zeta_3), and the Hoggar pair in Q(zeta_4).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .cyclotomic import CycNum
from .heisenberg import PauliIndex, displacement
from .linalg import ExactMatrix

LABELS = ("tetrahedron", "tetrahedron-dual", "hesse", "hoggar", "hoggar-twin")

# label -> (single-factor dimension, number of factors, conductor)
_SHAPES = {
    "tetrahedron": (2, 1, 12),
    "tetrahedron-dual": (2, 1, 12),
    "hesse": (3, 1, 3),
    "hoggar": (2, 3, 4),
    "hoggar-twin": (2, 3, 4),
}


class EnsembleInvariantError(RuntimeError):
    """A catalog ensemble failed one of its construction-time checks."""


def _fiducial(label: str) -> tuple[CycNum, ...]:
    if label in ("tetrahedron", "tetrahedron-dual"):
        z = CycNum.zeta(12)
        i_unit = CycNum.zeta(12, 3)
        sqrt3 = z * 2 - z ** 3
        one = CycNum.rational(1, 12)
        vec = (one + sqrt3, one + i_unit)
        if label == "tetrahedron-dual":
            vec = tuple(c.conj() for c in vec)
        return vec
    if label == "hesse":
        return (CycNum.rational(0, 3), CycNum.rational(1, 3), CycNum.rational(-1, 3))
    if label in ("hoggar", "hoggar-twin"):
        i_unit = CycNum.zeta(4)
        sign = 2 if label == "hoggar" else -2
        head = CycNum.rational(-1, 4) + i_unit * sign
        tail = [CycNum.rational(1, 4)] * 7
        return (head, *tail)
    raise ValueError(f"unknown ensemble label {label!r}; choose from {LABELS}")


def _inner(u: Sequence[CycNum], v: Sequence[CycNum]) -> CycNum:
    """<u|v> with the physics convention: conjugate-linear in u."""
    acc = None
    for a, b in zip(u, v):
        term = a.conj() * b
        acc = term if acc is None else acc + term
    return acc


def _apply(op: ExactMatrix, v: Sequence[CycNum]) -> tuple[CycNum, ...]:
    out = []
    for i in range(op.rows):
        acc = CycNum.rational(0, op.n)
        for j in range(op.cols):
            e = op[i, j]
            if not e.is_zero():
                acc = acc + e * v[j]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class SicEnsemble:
    """An ordered family of d^2 exact rank-1 projectors."""

    label: str
    factor_d: int
    m: int
    conductor: int
    fiducial: tuple[CycNum, ...]
    vectors: tuple[tuple[CycNum, ...], ...]
    norm_sq: CycNum
    projectors: tuple[ExactMatrix, ...]
    gram: tuple[tuple[CycNum, ...], ...]

    @property
    def d(self) -> int:
        return self.factor_d ** self.m

    @property
    def size(self) -> int:
        return self.d * self.d

    def index(self, t: int) -> PauliIndex:
        return PauliIndex.from_linear(self.factor_d, self.m, t)

    def pair_overlap(self, j: int, k: int) -> CycNum:
        """tr(Pi_j Pi_k), computed from the Gram matrix."""
        g = self.gram[j][k]
        return g * g.conj() / (self.norm_sq * self.norm_sq)

    def __repr__(self):
        return f"SicEnsemble({self.label!r}, d={self.d}, conductor={self.conductor})"


@functools.lru_cache(maxsize=None)
def build_catalog(label: str) -> SicEnsemble:
    """Construct a catalog ensemble and verify every invariant exactly."""
    if label not in _SHAPES:
        raise ValueError(f"unknown ensemble label {label!r}; choose from {LABELS}")
    factor_d, m, conductor = _SHAPES[label]
    d = factor_d ** m
    fiducial = _fiducial(label)
    assert len(fiducial) == d

    norm_sq = _inner(fiducial, fiducial)
    if not (norm_sq - norm_sq.conj()).is_zero():
        raise EnsembleInvariantError(f"{label}: fiducial norm is not real")
    if norm_sq.is_zero():
        raise EnsembleInvariantError(f"{label}: fiducial vector is zero")
    inv_norm = norm_sq.inverse()

    vectors = []
    for t in range(d * d):
        idx = PauliIndex.from_linear(factor_d, m, t)
        vectors.append(_apply(displacement(idx, conductor), fiducial))

    # displacements are unitary, so every orbit vector keeps the norm
    for t, v in enumerate(vectors):
        if _inner(v, v) != norm_sq:
            raise EnsembleInvariantError(
                f"{label}: orbit vector {t} does not preserve the fiducial norm"
            )

    projectors = []
    for v in vectors:
        entries = []
        for i in range(d):
            vi = v[i]
            for j in range(d):
                entries.append(vi * v[j].conj() * inv_norm)
        projectors.append(ExactMatrix(d, d, conductor, entries))

    total = projectors[0]
    for p in projectors[1:]:
        total = total + p
    if total != ExactMatrix.identity(d, conductor).scale(d):
        raise EnsembleInvariantError(
            f"{label}: projectors do not sum to d times the identity"
        )

    gram = tuple(
        tuple(_inner(vectors[j], vectors[k]) for k in range(d * d))
        for j in range(d * d)
    )

    # equiangularity: |<psi_j|psi_k>|^2 = norm^2 * (d delta + 1)/(d + 1)
    same = norm_sq * norm_sq
    cross = same * Fraction(1, d + 1)
    for j in range(d * d):
        for k in range(j, d * d):
            g = gram[j][k]
            val = g * g.conj()
            want = same if j == k else cross
            if val != want:
                raise EnsembleInvariantError(
                    f"{label}: pair overlap constant violated at ({j},{k}): "
                    f"|<psi_j|psi_k>|^2 != (d delta + 1)/(d+1)"
                )

    return SicEnsemble(
        label=label,
        factor_d=factor_d,
        m=m,
        conductor=conductor,
        fiducial=fiducial,
        vectors=tuple(vectors),
        norm_sq=norm_sq,
        projectors=tuple(projectors),
        gram=gram,
    )


# ---------------------------------------------------------------------------
# states and representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuantumState:
    """A Hermitian trace-one operator.

    Positivity is not checked here; the construction routes used in this
    package (projectors of vectors, convex mixtures) guarantee it.
    """

    rho: ExactMatrix

    def __post_init__(self):
        if self.rho.rows != self.rho.cols:
            raise ValueError("state must be square")
        if not self.rho.is_hermitian():
            raise ValueError("state must be Hermitian")
        if not self.rho.trace().is_one():
            raise ValueError("state must have unit trace")

    @property
    def d(self) -> int:
        return self.rho.rows

    @classmethod
    def from_vector(cls, vec: Sequence[CycNum], conductor: int) -> "QuantumState":
        vec = tuple(vec)
        norm = _inner(vec, vec)
        if norm.is_zero():
            raise ValueError("zero vector has no projector")
        inv = norm.inverse()
        d = len(vec)
        entries = [vec[i] * vec[j].conj() * inv for i in range(d) for j in range(d)]
        return cls(ExactMatrix(d, d, conductor, entries))

    @classmethod
    def maximally_mixed(cls, d: int, conductor: int = 1) -> "QuantumState":
        return cls(ExactMatrix.identity(d, conductor).scale(Fraction(1, d)))


@dataclass(frozen=True)
class ProbVector:
    """An exact probability vector over the d^2 outcomes of a SIC."""

    d: int
    p: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.p) == self.d * self.d, "need d^2 outcome probabilities"
        assert all(isinstance(x, Fraction) for x in self.p)
        assert sum(self.p) == 1, "probabilities must sum to one"
        assert all(x >= 0 for x in self.p), "probabilities must be nonnegative"

    def zeros(self) -> int:
        return sum(1 for x in self.p if x == 0)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.p) if x != 0)

    def to_json(self):
        return {"d": self.d, "p": [f"{x.numerator}/{x.denominator}" for x in self.p]}


def state_overlap(a: QuantumState, b: QuantumState) -> CycNum:
    """tr(rho_a rho_b), which is |<a|b>|^2 for pure states."""
    assert a.d == b.d
    acc = CycNum.rational(0, a.rho.n)
    for i in range(a.d):
        row = a.rho.row(i)
        for j in range(a.d):
            x = row[j]
            if not x.is_zero():
                acc = acc + x * b.rho[j, i]
    return acc


def sic_rep_exact(state: QuantumState, e: SicEnsemble) -> tuple[CycNum, ...]:
    """The outcome weights tr(rho Pi_n)/d as exact field elements.

    Every entry is checked to be exactly real.
    """
    if state.d != e.d:
        raise ValueError("dimension mismatch between state and ensemble")
    rho = state.rho
    out = []
    scale = (e.norm_sq * e.d).inverse()
    for v in e.vectors:
        # <psi_n| rho |psi_n> / (norm^2 d)
        acc = CycNum.rational(0, e.conductor)
        for i in range(e.d):
            ci = v[i].conj()
            if ci.is_zero():
                continue
            row = rho.row(i)
            for j in range(e.d):
                if not row[j].is_zero() and not v[j].is_zero():
                    acc = acc + ci * row[j] * v[j]
        val = acc * scale
        if not (val - val.conj()).is_zero():
            raise EnsembleInvariantError("representation entry has a nonzero imaginary part")
        out.append(val)
    return tuple(out)


def sic_rep(state: QuantumState, e: SicEnsemble) -> ProbVector:
    """The SIC representation p(n) = tr(rho Pi_n)/d as exact rationals."""
    vals = sic_rep_exact(state, e)
    fracs = []
    for v in vals:
        if not v.is_rational():
            raise ValueError(
                "representation entry is irrational; use sic_rep_exact for "
                "field-valued representations"
            )
        fracs.append(v.as_fraction())
    return ProbVector(e.d, tuple(fracs))


def rep_of_vector(e: SicEnsemble, vec: Sequence[CycNum]) -> ProbVector:
    """SIC representation of the pure state along vec (not normalised)."""
    vec = tuple(vec)
    vnorm = _inner(vec, vec)
    if vnorm.is_zero():
        raise ValueError("zero vector has no state")
    denom = (e.norm_sq * vnorm * e.d).inverse()
    fracs = []
    for psi in e.vectors:
        g = _inner(psi, vec)
        val = g * g.conj() * denom
        fracs.append(val.as_fraction())
    return ProbVector(e.d, tuple(fracs))


def reconstruct(p: Union[ProbVector, Sequence[CycNum]], e: SicEnsemble) -> QuantumState:
    """Invert the representation: rho = sum_i ((d+1) p(i) - 1/d) Pi_i."""
    d = e.d
    values = _value_list(p)
    acc = ExactMatrix.zeros(d, d, e.conductor)
    for i, proj in enumerate(e.projectors):
        coeff = values[i] * (d + 1) - Fraction(1, d)
        acc = acc + proj.scale(coeff)
    return QuantumState(acc)


def _value_list(p) -> list:
    """Probability entries as Fractions or CycNums, uniformly."""
    if isinstance(p, ProbVector):
        return list(p.p)
    return list(p)


def _sum_power(values, k: int):
    acc = None
    for v in values:
        term = v ** k
        acc = term if acc is None else acc + term
    return acc


def quadratic_check(p, d: int) -> bool:
    """True iff sum_i p(i)^2 = 2/(d(d+1)) exactly."""
    values = _value_list(p)
    return _sum_power(values, 2) == Fraction(2, d * (d + 1))


def _all_rational(values) -> bool:
    return all(isinstance(v, Fraction) or (isinstance(v, CycNum) and v.is_rational())
               for v in values)


def _as_fractions(values) -> list[Fraction]:
    return [v if isinstance(v, Fraction) else v.as_fraction() for v in values]


def _sum_products(values: Sequence[Fraction], triples: Iterable[tuple[int, int, int]]) -> Fraction:
    """sum of p_j p_k p_l over a list of index triples, via integers."""
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    nums = [v.numerator * (lcm // v.denominator) for v in values]
    acc = 0
    for j, k, l in triples:
        acc += nums[j] * nums[k] * nums[l]
    return Fraction(acc, lcm ** 3)


def signed_pm_sum(p, classification) -> Fraction:
    """sum over S_+ of p_j p_k p_l minus the same sum over S_-."""
    values = _as_fractions(_value_list(p))
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    nums = [v.numerator * (lcm // v.denominator) for v in values]
    acc = 0
    for j, k, l in classification.s_plus:
        acc += nums[j] * nums[k] * nums[l]
    for j, k, l in classification.s_minus:
        acc -= nums[j] * nums[k] * nums[l]
    return Fraction(acc, lcm ** 3)


def qbic_check_general(p, e: SicEnsemble) -> bool:
    """The cubic pure-state constraint with the full triple-product tensor.

    sum_{jkl} C_jkl p_j p_k p_l = (d+7)/(d+1)^3, where the sum runs over
    all ordered index triples.  Degenerate triples are folded in through
    C_jjl = tr(Pi_j Pi_l) and the complete symmetry of C.
    """
    d = e.d
    values = _value_list(p)
    sum_p2 = _sum_power(values, 2)
    sum_p3 = _sum_power(values, 3)
    lhs = sum_p3 + (sum_p2 - sum_p3) * Fraction(3, d + 1)
    distinct = _distinct_triple_sum(values, e)
    lhs = lhs + distinct * 6
    rhs = Fraction(d + 7, (d + 1) ** 3)
    return lhs == rhs


def _distinct_triple_sum(values, e: SicEnsemble):
    """sum over j<k<l of C_jkl p_j p_k p_l."""
    from . import triples  # deferred: triples builds on this module

    if e.label in ("hoggar", "hoggar-twin"):
        cls = triples.classify(e)
        if _all_rational(values):
            return signed_pm_sum(values, cls) * Fraction(1, 27)
        acc = None
        for sign, group in ((1, cls.s_plus), (-1, cls.s_minus)):
            for j, k, l in group:
                term = values[j] * values[k] * values[l] * Fraction(sign, 27)
                acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)
    table = triples.distinct_triple_table(e)
    acc = None
    for (j, k, l), c in table:
        if isinstance(c, CycNum) and c.is_zero():
            continue
        term = values[j] * values[k] * values[l] * c
        acc = term if acc is None else acc + term
    if acc is None:
        return Fraction(0)
    return acc


def qbic_check_hoggar(p, classification) -> bool:
    """The simplified d = 8 cubic constraint:
    sum p^3 + (1/3)[sum_{S+} ppp - sum_{S-} ppp] = 11/648.
    """
    values = _as_fractions(_value_list(p))
    lhs = sum(v ** 3 for v in values) + signed_pm_sum(values, classification) / 3
    return lhs == Fraction(11, 648)


def hesse_affine_lines() -> tuple[tuple[int, int, int], ...]:
    """The 12 lines of the nine-point affine plane, as index triples.

    Points are indexed by 3a + b for (a, b) in Z_3 x Z_3; three distinct
    points are collinear iff they sum to zero componentwise.
    """
    lines = []
    for t in itertools.combinations(range(9), 3):
        pts = [(i // 3, i % 3) for i in t]
        if sum(p[0] for p in pts) % 3 == 0 and sum(p[1] for p in pts) % 3 == 0:
            lines.append(t)
    assert len(lines) == 12
    return tuple(lines)


def qbic_check_hesse(p, lines: Sequence[tuple[int, int, int]]) -> bool:
    """The simplified d = 3 cubic constraint:
    sum p^3 - 3 sum_{(ijk) in lines} p_i p_j p_k = 0.
    """
    values = _as_fractions(_value_list(p))
    lhs = sum(v ** 3 for v in values) - 3 * _sum_products(values, lines)
    return lhs == 0


def shannon_entropy(p) -> float:
    """-sum p log2 p, with 0 log 0 = 0; float output from exact input."""
    values = _value_list(p)
    acc = 0.0
    for v in values:
        if isinstance(v, CycNum):
            x = v.to_complex().real
        else:
            x = float(v)
        if x > 0.0:
            acc -= x * math.log2(x)
    return acc


def sic_element_rep(e: SicEnsemble, k: int) -> ProbVector:
    """The representation of the ensemble's own k-th projector:
    e_k(i) = 1/(d(d+1)) + delta_ik/(d+1).
    """
    d = e.d
    base = Fraction(1, d * (d + 1))
    bump = Fraction(1, d + 1)
    return ProbVector(d, tuple(base + (bump if i == k else 0) for i in range(d * d)))


def enumerate_min_entropy(e: SicEnsemble,
                          candidates: Optional[Sequence[ProbVector]] = None) -> list[ProbVector]:
    """All minimum-entropy pure-state representations.

    These are the vectors with N = d(d+1)/2 uniform nonzero entries that
    satisfy the quadratic and cubic constraints.  Exhaustive enumeration is
    supported for d in {2, 3}; for d = 8 the search space is infeasible and
    only a verification mode over supplied candidates is offered.
    """
    d = e.d
    n_support = d * (d + 1) // 2
    weight = Fraction(1, n_support)
    if candidates is not None:
        out = []
        for c in candidates:
            ok = (sorted(c.p, reverse=True)[:n_support] == [weight] * n_support
                  and c.zeros() == d * d - n_support)
            if ok and quadratic_check(c, d) and qbic_check_general(c, e):
                out.append(c)
        return out
    if d > 3:
        raise ValueError(
            f"exhaustive minimiser search is infeasible for d={d}; "
            "pass candidates to run in verification mode"
        )
    out = []
    for support in itertools.combinations(range(d * d), n_support):
        p = ProbVector(d, tuple(weight if i in support else Fraction(0)
                                for i in range(d * d)))
        assert quadratic_check(p, d), "uniform support patterns satisfy the quadratic constraint"
        if qbic_check_general(p, e):
            out.append(p)
    return out


def zero_count_bound(p: ProbVector, d: int) -> bool:
    """True iff the number of exact zeros is at most d(d-1)/2.

    Requires the quadratic constraint to hold (the bound is derived from it).
    """
    assert quadratic_check(p, d), "zero-count bound applies to quadratic-constrained vectors"
    return p.zeros() <= d * (d - 1) // 2


# ---------------------------------------------------------------------------
# randomised exact states for property checks
# ---------------------------------------------------------------------------


def random_field_element(conductor: int, rng, span: int = 3) -> CycNum:
    from .cyclotomic import euler_phi

    deg = euler_phi(conductor)
    return CycNum(conductor, [Fraction(rng.randint(-span, span)) for _ in range(deg)])


def random_pure_state(e: SicEnsemble, rng) -> QuantumState:
    """Projector of a random small vector over the ensemble's field."""
    while True:
        vec = [random_field_element(e.conductor, rng) for _ in range(e.d)]
        if any(not c.is_zero() for c in vec):
            return QuantumState.from_vector(vec, e.conductor)


def random_pure_vector(e: SicEnsemble, rng) -> tuple[CycNum, ...]:
    while True:
        vec = tuple(random_field_element(e.conductor, rng) for _ in range(e.d))
        if any(not c.is_zero() for c in vec):
            return vec


def random_hermitian_state(e: SicEnsemble, rng) -> QuantumState:
    """A random exact Hermitian trace-one matrix (not necessarily positive)."""
    d = e.d
    entries = [[None] * d for _ in range(d)]
    diag = [Fraction(rng.randint(-2, 2)) for _ in range(d)]
    correction = 1 - sum(diag)
    diag[-1] += correction
    for i in range(d):
        entries[i][i] = CycNum.rational(diag[i], e.conductor)
        for j in range(i + 1, d):
            x = random_field_element(e.conductor, rng, span=2)
            entries[i][j] = x
            entries[j][i] = x.conj()
    flat = [entries[i][j] for i in range(d) for j in range(d)]
    return QuantumState(ExactMatrix(d, d, e.conductor, flat))

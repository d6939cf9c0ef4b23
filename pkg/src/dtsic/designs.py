"""Block-design analytics over 64-bit blocks.

The twin-Hoggar bitstrings are stored as integers, so symmetric
differences, intersections and weights are XOR, AND and popcount.  That
makes the full C(64,3) symmetric-difference sweep and the Kantor-value
sweep effectively instantaneous.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .ensembles import SicEnsemble, rep_of_vector
from .linalg import ExactMatrix


class DesignError(RuntimeError):
    """A block failed the twin-representation value contract."""


@dataclass(frozen=True)
class Block:
    """A row of a 0/1 incidence structure, packed into an integer.

    Bit n of ``word`` is the entry in column n; rendering puts column 0
    first, matching the one-string-per-line block file format.
    """

    word: int
    v: int = 64
    origin: Optional[int] = None

    def __post_init__(self):
        assert 0 <= self.word < (1 << self.v)

    @property
    def weight(self) -> int:
        return self.word.bit_count()

    def bit(self, n: int) -> int:
        return (self.word >> n) & 1

    def bits(self) -> str:
        return "".join(str(self.bit(n)) for n in range(self.v))

    def complement(self) -> "Block":
        mask = (1 << self.v) - 1
        return Block(self.word ^ mask, self.v, self.origin)

    @classmethod
    def from_bits(cls, bits: str, origin: Optional[int] = None) -> "Block":
        word = 0
        for n, ch in enumerate(bits):
            assert ch in "01"
            if ch == "1":
                word |= 1 << n
        return cls(word, len(bits), origin)


@dataclass(frozen=True)
class Design:
    """A family of equal-length blocks over v points."""

    v: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        assert all(b.v == self.v for b in self.blocks), "mixed block lengths"

    @property
    def b(self) -> int:
        return len(self.blocks)

    def words(self) -> tuple[int, ...]:
        return tuple(b.word for b in self.blocks)


@dataclass(frozen=True)
class BibdParams:
    v: int
    b: int
    k: int
    r: int
    lam: int

    def as_tuple(self):
        return (self.v, self.b, self.k, self.r, self.lam)


@dataclass(frozen=True)
class BibdViolation:
    reason: str


def design_from_twin(hoggar: SicEnsemble, twin: SicEnsemble) -> Design:
    """Blocks of twin-state representations: bit n set iff tr(Pi_n pi_i) != 0.

    Every representation entry must be exactly 0 or exactly 1/36.
    """
    assert hoggar.d == twin.d == 8
    blocks = []
    expected = Fraction(1, 36)
    for i in range(64):
        rep = rep_of_vector(hoggar, twin.vectors[i])
        word = 0
        for n, value in enumerate(rep.p):
            if value == expected:
                word |= 1 << n
            elif value != 0:
                raise DesignError(
                    f"twin state {i}, outcome {n}: entry {value} is neither 0 nor 1/36"
                )
        blocks.append(Block(word, 64, origin=i))
    design = Design(64, tuple(blocks))
    if len(set(design.words())) != 64:
        raise DesignError("twin blocks are not distinct")
    return design


def design_from_triples(v: int, triples) -> Design:
    """Triple systems (such as S_+ and S_-) viewed as 3-element blocks."""
    blocks = []
    for t in sorted(triples):
        word = 0
        for x in t:
            word |= 1 << x
        blocks.append(Block(word, v))
    return Design(v, tuple(blocks))


def bibd_params(design: Design) -> Union[BibdParams, BibdViolation]:
    """Certify constant block size, replication and pair coverage.

    Returns the parameter tuple, or the first violated condition.
    """
    v, b = design.v, design.b
    if b == 0:
        return BibdViolation("design has no blocks")
    weights = {blk.weight for blk in design.blocks}
    if len(weights) != 1:
        return BibdViolation(f"block sizes are not constant: {sorted(weights)}")
    k = weights.pop()
    replication = [0] * v
    pair_counts: dict[tuple[int, int], int] = {}
    for blk in design.blocks:
        points = [n for n in range(v) if blk.bit(n)]
        for n in points:
            replication[n] += 1
        for pair in itertools.combinations(points, 2):
            pair_counts[pair] = pair_counts.get(pair, 0) + 1
    r_set = set(replication)
    if len(r_set) != 1:
        return BibdViolation(f"replication is not constant: {sorted(r_set)}")
    r = r_set.pop()
    all_pairs = v * (v - 1) // 2
    lam_set = set(pair_counts.values())
    if len(pair_counts) < all_pairs:
        lam_set.add(0)
    if len(lam_set) != 1:
        return BibdViolation(f"pair coverage is not constant: {sorted(lam_set)}")
    lam = lam_set.pop()
    if b * k != v * r:
        return BibdViolation(f"bk != vr: {b * k} != {v * r}")
    if lam * (v - 1) != r * (k - 1):
        return BibdViolation(f"lambda(v-1) != r(k-1): {lam * (v - 1)} != {r * (k - 1)}")
    return BibdParams(v, b, k, r, lam)


def complement(design: Design) -> Design:
    return Design(design.v, tuple(b.complement() for b in design.blocks))


def sdp_parameter_condition(design: Design) -> bool:
    """The design or its complement has parameters
    (2^{2m}, 2^{2m-1} - 2^{m-1}, 2^{2m-2} - 2^{m-1})."""
    v = design.v
    m = 0
    while 4 ** (m + 1) <= v:
        m += 1
    if 4 ** m != v:
        return False
    want = (v, 2 ** (2 * m - 1) - 2 ** (m - 1), 2 ** (2 * m - 2) - 2 ** (m - 1))
    for d in (design, complement(design)):
        params = bibd_params(d)
        if isinstance(params, BibdParams) and (params.v, params.k, params.lam) == want:
            return True
    return False


def sdp_check(design: Design) -> bool:
    """The symmetric difference property, swept over all block triples.

    The XOR of any three blocks must be a block or the complement of a
    block; the parameter condition the property forces is checked too.
    """
    words = design.words()
    mask = (1 << design.v) - 1
    block_set = set(words)
    ok_set = block_set | {w ^ mask for w in words}
    for wi, wj, wk in itertools.combinations(words, 3):
        if wi ^ wj ^ wk not in ok_set:
            return False
    return sdp_parameter_condition(design)


def hadamard_construction(m: int) -> tuple[ExactMatrix, Design]:
    """H_2^(tensor m) and the incidence design (H + 1)/2.

    H_2 is the 4x4 matrix with -1 on the diagonal and +1 elsewhere.
    """
    assert m >= 1
    h2 = ExactMatrix(4, 4, 1,
                     [Fraction(-1) if i == j else Fraction(1)
                      for i in range(4) for j in range(4)])
    h = h2
    for _ in range(m - 1):
        h = h.kron(h2)
    size = 4 ** m
    blocks = []
    for i in range(size):
        word = 0
        for j in range(size):
            e = h[i, j].as_fraction()
            assert e in (1, -1)
            if e == 1:
                word |= 1 << j
        blocks.append(Block(word, size, origin=i))
    return h, Design(size, tuple(blocks))


def hyperplanes(design: Design) -> tuple[frozenset[int], dict[int, int]]:
    """Distinct pairwise symmetric differences with their multiplicities.

    For the twin design (and the symplectic family generally) these are
    affine hyperplanes: 2(v-1) distinct values of weight v/2, each arising
    from exactly v/4 unordered block pairs.  Violations raise.
    """
    words = design.words()
    counts: dict[int, int] = {}
    for wi, wj in itertools.combinations(words, 2):
        w = wi ^ wj
        counts[w] = counts.get(w, 0) + 1
    v = design.v
    if len(counts) != 2 * (v - 1):
        raise DesignError(f"{len(counts)} distinct differences, wanted {2 * (v - 1)}")
    for w, mult in counts.items():
        if w.bit_count() != v // 2:
            raise DesignError(f"difference {w:0{v}b} has weight {w.bit_count()}")
        if mult != v // 4:
            raise DesignError(f"difference realised by {mult} pairs, wanted {v // 4}")
    return frozenset(counts), counts


def kantor_value(design: Design, i: int, j: int, k: int) -> int:
    """|(B_i xor B_j) intersect B_k| for i != j and k outside {i, j}."""
    assert i != j and k not in (i, j)
    words = design.words()
    return ((words[i] ^ words[j]) & words[k]).bit_count()

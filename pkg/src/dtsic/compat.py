"""Post-Peierls compatibility machinery.

A set of hypotheses is PP incompatible with respect to a measurement when
every outcome is assigned exactly zero probability by at least one of
them.  Everything here works on exact representations; a probability that
merely evaluates to something small is never treated as zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .designs import Design
from .ensembles import ProbVector, QuantumState, state_overlap
from .triples import TripleClass


@dataclass(frozen=True)
class HypothesisSet:
    """States an agent entertains, given by their SIC representations."""

    reps: tuple[ProbVector, ...]

    def __post_init__(self):
        assert len(self.reps) >= 1
        assert len({r.d for r in self.reps}) == 1, "mixed dimensions"


def pp_incompatible(h: HypothesisSet | Sequence[ProbVector]) -> bool:
    """True iff every outcome gets exact probability zero from some member."""
    reps = h.reps if isinstance(h, HypothesisSet) else tuple(h)
    assert len(reps) >= 2, "compatibility concerns two or more hypotheses"
    size = reps[0].d ** 2
    for n in range(size):
        if all(r.p[n] != 0 for r in reps):
            return False
    return True


def column_zero_counts(reps: Sequence[ProbVector]) -> list[int]:
    size = reps[0].d ** 2
    return [sum(1 for r in reps if r.p[n] == 0) for n in range(size)]


def pp_odop_criterion(psi: QuantumState, psi2: QuantumState, psi3: QuantumState) -> bool:
    """PP incompatibility of three d = 3 pure states under some von
    Neumann measurement.

    Both overlap inequalities must hold: the squared overlaps sum below 1
    (strictly), and the squared gap dominates four times their product
    (equality allowed; the SIC triple sits exactly on this boundary).
    """
    assert psi.d == psi2.d == psi3.d == 3
    o12 = state_overlap(psi, psi2)
    o23 = state_overlap(psi2, psi3)
    o31 = state_overlap(psi3, psi)
    total = o12 + o23 + o31
    first = (1 - total).real_sign() > 0
    gap = (total - 1)
    second = (gap * gap - o12 * o23 * o31 * 4).real_sign() >= 0
    return first and second


def sic_triple_inequalities(d: int) -> tuple[bool, bool]:
    """The two PP-ODOP inequalities at equal squared overlaps 1/(d+1)."""
    assert d >= 2
    first = Fraction(3, d + 1) < 1
    second = Fraction((d - 2) ** 2) >= Fraction(4, d + 1)
    return first, second


def pph_quartets(design: Design) -> frozenset[frozenset[int]]:
    """All 4-sets of twin states that the reference SIC measurement rules
    jointly impossible.

    A quartet is PP-H incompatible exactly when one block is the
    complement of the symmetric difference of the other three, i.e. when
    the four blocks XOR to the all-ones word.
    """
    words = design.words()
    mask = (1 << design.v) - 1
    index = {w: i for i, w in enumerate(words)}
    out = set()
    for i, j, k in itertools.combinations(range(len(words)), 3):
        l = index.get(words[i] ^ words[j] ^ words[k] ^ mask)
        if l is not None and l > k:
            out.add(frozenset((i, j, k, l)))
    return frozenset(out)


def pph_incompatible_by_scan(design: Design, quartet: Iterable[int]) -> bool:
    """Direct column scan: no outcome may be possible under all four."""
    rows = [design.blocks[i] for i in quartet]
    for n in range(design.v):
        if all(row.bit(n) for row in rows):
            return False
    return True


def quartet_triple_product_bridge(quartets: frozenset[frozenset[int]],
                                  cls: TripleClass,
                                  design: Design) -> bool:
    """Both directions of the vanishing-triple-product correspondence.

    Forward: every triple inside a PP-H quartet has C_jkl = 0.  Reverse:
    every triple with C_jkl = 0 extends (by the complement of its
    symmetric difference) to a PP-H quartet.
    """
    for quartet in quartets:
        for t in itertools.combinations(sorted(quartet), 3):
            if t not in cls.s_zero:
                return False
    words = design.words()
    mask = (1 << design.v) - 1
    index = {w: i for i, w in enumerate(words)}
    for i, j, k in cls.s_zero:
        l = index.get(words[i] ^ words[j] ^ words[k] ^ mask)
        if l is None:
            return False
        if frozenset((i, j, k, l)) not in quartets:
            return False
    return True


def venn_region_counts(design: Design, members: Sequence[int]) -> dict[frozenset[int], int]:
    """How many outcomes fall in each overlap region of the given blocks.

    Keys are the subsets of ``members`` whose blocks contain the outcome.
    """
    rows = [(i, design.blocks[i]) for i in members]
    out: dict[frozenset[int], int] = {}
    for n in range(design.v):
        region = frozenset(i for i, row in rows if row.bit(n))
        out[region] = out.get(region, 0) + 1
    return out

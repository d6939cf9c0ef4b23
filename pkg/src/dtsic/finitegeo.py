"""Finite-geometry correspondences: the Fano plane behind the twin
bitstrings, and the Gosset polytope's 28 equiangular lines.

All arithmetic is over Z_2 or plain integers; no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .designs import Block
from .heisenberg import PauliIndex, is_antisymmetric, odd_parity


@dataclass(frozen=True)
class FanoElement:
    """A point or line of the Fano plane, labelled by a nonzero Z_2 triple."""

    coords: tuple[int, int, int]
    kind: str

    def __post_init__(self):
        assert self.kind in ("point", "line")
        assert self.coords != (0, 0, 0), "labels are the nonzero triples"
        assert all(c in (0, 1) for c in self.coords)


def fano_points() -> tuple[FanoElement, ...]:
    return tuple(FanoElement(c, "point")
                 for c in itertools.product((0, 1), repeat=3) if c != (0, 0, 0))


def fano_lines() -> tuple[FanoElement, ...]:
    return tuple(FanoElement(c, "line")
                 for c in itertools.product((0, 1), repeat=3) if c != (0, 0, 0))


def fano_incident(point: FanoElement, line: FanoElement) -> bool:
    """Incidence: the Z_2 dot product of the two labels vanishes."""
    assert {point.kind, line.kind} == {"point", "line"}
    dot = sum(a * b for a, b in zip(point.coords, line.coords))
    return dot % 2 == 0


def incidence_table() -> dict[tuple[int, int, int], tuple[tuple[int, int, int], ...]]:
    """line label -> the labels of its three incident points."""
    table = {}
    for line in fano_lines():
        pts = tuple(p.coords for p in fano_points() if fano_incident(p, line))
        table[line.coords] = pts
    return table


def flag_counts() -> tuple[int, int]:
    """(number of flags, number of anti-flags)."""
    flags = 0
    antiflags = 0
    for p in fano_points():
        for l in fano_lines():
            if fano_incident(p, l):
                flags += 1
            else:
                antiflags += 1
    return flags, antiflags


def index_antiflag(idx: PauliIndex):
    """The (point, line) reading of a displacement index: the X exponents
    label a point, the Z exponents a line.  Returns the pair when it is an
    anti-flag, else None."""
    k = idx.exps
    point = (k[0], k[2], k[4])
    line = (k[1], k[3], k[5])
    if point == (0, 0, 0) or line == (0, 0, 0):
        return None
    if sum(a * b for a, b in zip(point, line)) % 2 == 1:
        return (FanoElement(point, "point"), FanoElement(line, "line"))
    return None


def zero_pattern_correspondence(block: Block) -> bool:
    """Three readings of the twin-fiducial block's zeros, index by index:
    a zero bit, odd exponent parity, and an antisymmetric displacement
    must coincide for every n; the zeros are exactly the anti-flags."""
    assert block.v == 64
    for n in range(64):
        idx = PauliIndex.from_linear(2, 3, n)
        zero_bit = block.bit(n) == 0
        parity = odd_parity(idx)
        anti = is_antisymmetric(idx)
        if not (zero_bit == parity == anti):
            return False
        if zero_bit != (index_antiflag(idx) is not None):
            return False
    return True


# ---------------------------------------------------------------------------
# the Gosset polytope
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GossetVertex:
    """A vertex: a permutation of (3,3,-1,...,-1) or its negation."""

    v: tuple[int, ...]

    def __post_init__(self):
        assert len(self.v) == 8
        counts = sorted(self.v)
        assert counts in ([-1] * 6 + [3, 3], [-3, -3] + [1] * 6), "not a seed permutation"
        assert sum(self.v) == 0, "vertices are orthogonal to the all-ones vector"

    def dot(self, other: "GossetVertex") -> int:
        return sum(a * b for a, b in zip(self.v, other.v))

    def neg(self) -> "GossetVertex":
        return GossetVertex(tuple(-x for x in self.v))


@dataclass(frozen=True)
class GossetPolytope:
    vertices: tuple[GossetVertex, ...]
    lines: tuple[tuple[int, int], ...]  # antipodal vertex-index pairs


def gosset_polytope() -> GossetPolytope:
    """All 56 vertices and the 28 antipodal lines."""
    ups = set()
    for i, j in itertools.combinations(range(8), 2):
        v = [-1] * 8
        v[i] = v[j] = 3
        ups.add(tuple(v))
    vertices = [GossetVertex(v) for v in sorted(ups)]
    vertices += [x.neg() for x in vertices]
    index = {x.v: i for i, x in enumerate(vertices)}
    lines = []
    for i, x in enumerate(vertices):
        j = index[x.neg().v]
        if i < j:
            lines.append((i, j))
    poly = GossetPolytope(tuple(vertices), tuple(lines))
    assert len(poly.vertices) == 56 and len(poly.lines) == 28
    return poly


def gosset_line_cosine_squared(poly: GossetPolytope) -> Fraction:
    """The common squared cosine between distinct lines, exactly.

    Raises if the line set fails to be equiangular.
    """
    norms = {v.dot(v) for v in poly.vertices}
    assert norms == {24}
    values = set()
    for (i, _), (j, _) in itertools.combinations(poly.lines, 2):
        d = abs(poly.vertices[i].dot(poly.vertices[j]))
        values.add(Fraction(d * d, 24 * 24))
    if len(values) != 1:
        raise ValueError(f"line set is not equiangular: cosines^2 {sorted(values)}")
    return values.pop()

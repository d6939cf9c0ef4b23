"""Closed-form group-order bookkeeping.

These are arithmetic identities tying the Clifford-group order to the
triple classification sizes.  No group is ever constructed here; the
checks are kept separate so they cannot be mistaken for one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triples import TripleClass


class IdentityError(RuntimeError):
    """An order identity failed; the message carries both sides."""


def clifford_order(p: int, n: int) -> int:
    """p^(n^2 + 2n) * prod_{j=1}^{n} (p^(2j) - 1)."""
    assert n >= 1 and p >= 2
    acc = p ** (n * n + 2 * n)
    for j in range(1, n + 1):
        acc *= p ** (2 * j) - 1
    return acc


@dataclass(frozen=True)
class OrderReport:
    clifford_order: int
    hoggar_symmetry_order: int
    stabilizer_order: int

    def __post_init__(self):
        assert self.hoggar_symmetry_order == 64 * self.stabilizer_order


def order_identities(cls: TripleClass) -> OrderReport:
    """Verify the displayed order identities from the classification sizes."""
    sp = len(cls.s_plus)
    sm = len(cls.s_minus)
    if 24 * sp != 96 * sm:
        raise IdentityError(f"24|S+| != 96|S-|: {24 * sp} != {96 * sm}")
    sym_order = 24 * sp
    if sym_order % 64 != 0:
        raise IdentityError(f"symmetry order {sym_order} is not a multiple of 64")
    cliff = clifford_order(2, 3)
    if cliff != 2 ** 9 * 3 ** 2 * (sp + sm):
        raise IdentityError(
            f"Clifford order identity: {cliff} != {2 ** 9 * 3 ** 2 * (sp + sm)}"
        )
    # b = 672 lambda for both signs, with lambda from the BIBD relations
    for size, name in ((sp, "S+"), (sm, "S-")):
        r = 3 * size // 64
        if 3 * size % 64 or r * 2 % 63:
            raise IdentityError(f"{name}: replication is not integral")
        lam = r * 2 // 63
        if 672 * lam != size:
            raise IdentityError(f"{name}: 672*lambda != b: {672 * lam} != {size}")
    return OrderReport(
        clifford_order=cliff,
        hoggar_symmetry_order=sym_order,
        stabilizer_order=sym_order // 64,
    )

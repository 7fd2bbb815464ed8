"""Left orbits of a shelf, the orbit quotient, and classification flags.

The left orbits are the classes of the smallest equivalence relation with
x ~ y*x for all x, y; they are computed by union-find closure over those
pairs.  Racks are left connected, and for x*y = g(y) the orbits biject with
the image of g.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .tables import BinaryOpTable, Shelf, right_trivial_op, validate_shelf


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            x, parent[x] = parent[x], parent[parent[x]]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]

    def blocks(self):
        groups = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(tuple(sorted(g)) for g in groups.values())


@dataclass(frozen=True)
class OrbitPartition:
    """Disjoint blocks covering {0..n-1}, ordered by smallest member."""

    size: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    @cached_property
    def _block_index(self):
        idx = {}
        for b, members in enumerate(self.blocks):
            for x in members:
                idx[x] = b
        return idx

    def block_of(self, x: int) -> int:
        return self._block_index[x]


def left_orbits(shelf: Shelf) -> OrbitPartition:
    """Union-find closure over the pairs (x, y*x)."""
    n = shelf.size
    t = shelf.table.entries
    uf = UnionFind(n)
    for x in range(n):
        for y in range(n):
            uf.union(x, t[y][x])
    return OrbitPartition(n, tuple(uf.blocks()))


def orbit_quotient(shelf: Shelf):
    """The induced shelf on the orbit set with the quotient map.

    Returns ``(quotient, pi)`` where pi maps each element to its block
    index.  The induced product is always [x]*[y] = [y]; both the
    homomorphism property and that shape are re-checked here.
    """
    part = left_orbits(shelf)
    n = shelf.size
    t = shelf.table.entries
    pi = tuple(part.block_of(x) for x in range(n))
    r = part.count
    reps = part.representatives
    q_rows = [[pi[t[reps[a]][reps[b]]] for b in range(r)] for a in range(r)]
    quotient_table = BinaryOpTable.from_rows(q_rows)
    # internal consistency: pi must be a homomorphism onto the quotient
    for x in range(n):
        for y in range(n):
            assert pi[t[x][y]] == q_rows[pi[x]][pi[y]], (
                "orbit quotient is not a homomorphism"
            )
    assert quotient_table == right_trivial_op(r), (
        "induced orbit product is not [x]*[y] = [y]"
    )
    return validate_shelf(quotient_table), pi


@dataclass(frozen=True)
class ShelfFlags:
    is_spindle: bool
    is_rack: bool
    is_left_connected: bool
    is_invertible: bool


def is_spindle(table: BinaryOpTable) -> bool:
    return all(table.entries[x][x] == x for x in range(table.size))


def is_invertible(table: BinaryOpTable) -> bool:
    """Every right translation x -> x*y is a bijection."""
    n = table.size
    t = table.entries
    for y in range(n):
        if len({t[x][y] for x in range(n)}) != n:
            return False
    return True


def classify(shelf: Shelf) -> ShelfFlags:
    inv = is_invertible(shelf.table)
    return ShelfFlags(
        is_spindle=is_spindle(shelf.table),
        is_rack=inv,
        is_left_connected=left_orbits(shelf).count == 1,
        is_invertible=inv,
    )


def has_left_absorbing_element(table: BinaryOpTable) -> bool:
    """True when some y satisfies y*x = y for all x (a vanishing hypothesis)."""
    n = table.size
    return any(all(v == y for v in table.entries[y]) for y in range(n))


__all__ = [
    "OrbitPartition",
    "ShelfFlags",
    "UnionFind",
    "classify",
    "has_left_absorbing_element",
    "is_invertible",
    "is_spindle",
    "left_orbits",
    "orbit_quotient",
]

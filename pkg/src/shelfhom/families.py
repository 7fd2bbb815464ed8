"""Constructors for the standard shelf and multi-shelf families.

Each family is described by a small frozen dataclass; ``construct_family``
checks the family's preconditions eagerly, builds the table(s), and runs the
result back through the validators, so a returned structure is always
certified.

Subsets of a finite ground set Omega are encoded as bitmasks, with subset i
of the carrier being ``family[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import EmptyList, RetractionNotIdentityOnA, SpecPreconditionFailed
from .tables import (
    BinaryOpTable,
    Shelf,
    identity_op,
    right_trivial_op,
    validate_multishelf,
    validate_shelf,
)


@dataclass(frozen=True)
class ConstLeft:
    """x*y = f(x) for an arbitrary map f."""

    f: tuple[int, ...]


@dataclass(frozen=True)
class IdempotentRight:
    """x*y = g(y) for g with g(g(x)) = g(x)."""

    g: tuple[int, ...]


@dataclass(frozen=True)
class SubsetSwitch:
    """x*y = x if y is in A, else y."""

    size: int
    members: frozenset


@dataclass(frozen=True)
class PointedMap:
    """x*y = g(y) if x = b, else y; requires g^{-1}(b) = {b}."""

    b: int
    g: tuple[int, ...]


@dataclass(frozen=True)
class PartitionFamily:
    """x*y = g_i(y) for x in block A_i.

    Requires g_i(A_j) within A_j and g_i = g_j o g_i on A_j for all i, j.
    """

    blocks: tuple[tuple[int, ...], ...]
    maps: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntersectionShelf:
    """Carrier = a family of subsets closed under intersection, op = meet."""

    omega_size: int
    family: tuple[int, ...]


@dataclass(frozen=True)
class SubtractionShelf:
    """Carrier = a family of subsets closed under set subtraction."""

    omega_size: int
    family: tuple[int, ...]


@dataclass(frozen=True)
class BooleanMultiShelf:
    """All subsets of Omega with the four operations (x*0 y, meet, join, y)."""

    omega_size: int


@dataclass(frozen=True)
class IdentityOp:
    """x*y = x."""

    size: int


@dataclass(frozen=True)
class RightTrivialOp:
    """x*y = y."""

    size: int


def _check_map(name, f, n):
    if len(f) != n:
        raise SpecPreconditionFailed(f"{name} must have length {n}, got {len(f)}")
    for v in f:
        if not 0 <= v < n:
            raise SpecPreconditionFailed(f"{name} value {v} outside 0..{n - 1}")


def construct_family(spec):
    """Build the structure a family spec describes; see the spec classes.

    Returns a certified Shelf or MultiShelf; raises SpecPreconditionFailed
    when the family's hypotheses do not hold.
    """
    if isinstance(spec, ConstLeft):
        n = len(spec.f)
        _check_map("f", spec.f, n)
        return validate_shelf(
            BinaryOpTable(tuple((spec.f[x],) * n for x in range(n)))
        )

    if isinstance(spec, IdempotentRight):
        n = len(spec.g)
        _check_map("g", spec.g, n)
        for x in range(n):
            if spec.g[spec.g[x]] != spec.g[x]:
                raise SpecPreconditionFailed(
                    f"g is not idempotent: g(g({x})) = {spec.g[spec.g[x]]} != g({x}) = {spec.g[x]}"
                )
        row = tuple(spec.g)
        return validate_shelf(BinaryOpTable((row,) * n))

    if isinstance(spec, SubsetSwitch):
        n = spec.size
        members = set(spec.members)
        if not members <= set(range(n)):
            raise SpecPreconditionFailed("A is not a subset of the carrier")
        return validate_shelf(
            BinaryOpTable.from_function(
                n, lambda x, y: x if y in members else y
            )
        )

    if isinstance(spec, PointedMap):
        n = len(spec.g)
        _check_map("g", spec.g, n)
        if not 0 <= spec.b < n:
            raise SpecPreconditionFailed(f"base point {spec.b} outside carrier")
        preimage = {x for x in range(n) if spec.g[x] == spec.b}
        if preimage != {spec.b}:
            raise SpecPreconditionFailed(
                f"g^-1({spec.b}) = {sorted(preimage)}, must be exactly {{{spec.b}}}"
            )
        return validate_shelf(
            BinaryOpTable.from_function(
                n, lambda x, y: spec.g[y] if x == spec.b else y
            )
        )

    if isinstance(spec, PartitionFamily):
        elements = [x for block in spec.blocks for x in block]
        n = len(elements)
        if sorted(elements) != list(range(n)):
            raise SpecPreconditionFailed("blocks do not partition the carrier")
        if len(spec.maps) != len(spec.blocks):
            raise SpecPreconditionFailed("one map per block is required")
        for g in spec.maps:
            _check_map("g_i", g, n)
        block_of = {}
        for i, block in enumerate(spec.blocks):
            for x in block:
                block_of[x] = i
        for i, gi in enumerate(spec.maps):
            for j, block in enumerate(spec.blocks):
                gj = spec.maps[j]
                for x in block:
                    if block_of[gi[x]] != j:
                        raise SpecPreconditionFailed(
                            f"g_{i} does not preserve block {j}: g_{i}({x}) = {gi[x]}"
                        )
                    if gi[x] != gj[gi[x]]:
                        raise SpecPreconditionFailed(
                            f"g_{i} != g_{j} o g_{i} at {x} in block {j}"
                        )
        return validate_shelf(
            BinaryOpTable.from_function(
                n, lambda x, y: spec.maps[block_of[x]][y]
            )
        )

    if isinstance(spec, IntersectionShelf):
        idx = _subset_carrier(spec.omega_size, spec.family)
        _require_closed(spec.family, idx, lambda a, b: a & b, "intersection")
        return validate_shelf(
            BinaryOpTable.from_function(
                len(spec.family),
                lambda i, j: idx[spec.family[i] & spec.family[j]],
            )
        )

    if isinstance(spec, SubtractionShelf):
        idx = _subset_carrier(spec.omega_size, spec.family)
        _require_closed(spec.family, idx, lambda a, b: a & ~b, "subtraction")
        return validate_shelf(
            BinaryOpTable.from_function(
                len(spec.family),
                lambda i, j: idx[spec.family[i] & ~spec.family[j]],
            )
        )

    if isinstance(spec, BooleanMultiShelf):
        m = spec.omega_size
        if m < 0:
            raise SpecPreconditionFailed("omega_size must be nonnegative")
        n = 1 << m
        meet = BinaryOpTable.from_function(n, lambda a, b: a & b)
        join = BinaryOpTable.from_function(n, lambda a, b: a | b)
        return validate_multishelf(
            (identity_op(n), meet, join, right_trivial_op(n))
        )

    if isinstance(spec, IdentityOp):
        return validate_shelf(identity_op(spec.size))

    if isinstance(spec, RightTrivialOp):
        return validate_shelf(right_trivial_op(spec.size))

    raise SpecPreconditionFailed(f"unknown family spec {type(spec).__name__}")


def _subset_carrier(omega_size, family):
    if omega_size < 0:
        raise SpecPreconditionFailed("omega_size must be nonnegative")
    full = (1 << omega_size) - 1
    if len(set(family)) != len(family):
        raise SpecPreconditionFailed("family members must be distinct")
    if not family:
        raise SpecPreconditionFailed("family must be nonempty")
    for mask in family:
        if not 0 <= mask <= full:
            raise SpecPreconditionFailed(
                f"mask {mask} is not a subset of a {omega_size}-element ground set"
            )
    return {mask: i for i, mask in enumerate(family)}


def _require_closed(family, idx, op, name):
    for a in family:
        for b in family:
            if op(a, b) not in idx:
                raise SpecPreconditionFailed(
                    f"family not closed under {name}: "
                    f"{a:#b} {name} {b:#b} = {op(a, b):#b} missing"
                )


def combine(mode: str, shelves) -> Shelf:
    """Disjoint union or direct product of shelves (both stay shelves)."""
    shelves = list(shelves)
    if not shelves:
        raise EmptyList(f"{mode} of an empty list of shelves")
    if mode == "disjoint_union":
        offsets = []
        total = 0
        for s in shelves:
            offsets.append(total)
            total += s.size
        rows = [[0] * total for _ in range(total)]
        for x in range(total):
            for y in range(total):
                rows[x][y] = x
        for s, off in zip(shelves, offsets):
            for a in range(s.size):
                for b in range(s.size):
                    rows[off + a][off + b] = off + s.apply(a, b)
        return validate_shelf(BinaryOpTable.from_rows(rows))
    if mode == "direct_product":
        sizes = [s.size for s in shelves]
        points = list(product(*[range(m) for m in sizes]))
        idx = {p: i for i, p in enumerate(points)}
        n = len(points)
        rows = [
            [
                idx[tuple(s.apply(p[i], q[i]) for i, s in enumerate(shelves))]
                for q in points
            ]
            for p in points
        ]
        return validate_shelf(BinaryOpTable.from_rows(rows))
    raise ValueError(f"unknown combine mode {mode!r}")


def strong_retract_extend(base: Shelf, carrier_size: int, retraction) -> Shelf:
    """Extend a shelf on A = {0..|A|-1} to {0..n-1} along x*y = r(x)*r(y).

    The retraction must restrict to the identity on A; the result retracts
    onto the base through a shelf homomorphism (re-checked here).
    """
    a_size = base.size
    r = tuple(retraction)
    if carrier_size < a_size:
        raise SpecPreconditionFailed(
            f"carrier size {carrier_size} smaller than base size {a_size}"
        )
    if len(r) != carrier_size:
        raise SpecPreconditionFailed(
            f"retraction must have length {carrier_size}, got {len(r)}"
        )
    for x, v in enumerate(r):
        if not 0 <= v < a_size:
            raise SpecPreconditionFailed(
                f"retraction value r({x}) = {v} lands outside the base"
            )
    for a in range(a_size):
        if r[a] != a:
            raise RetractionNotIdentityOnA(f"r({a}) = {r[a]} != {a}")
    bt = base.table.entries
    table = BinaryOpTable.from_function(
        carrier_size, lambda x, y: bt[r[x]][r[y]]
    )
    result = validate_shelf(table)
    t = table.entries
    for x in range(carrier_size):
        for y in range(carrier_size):
            assert r[t[x][y]] == bt[r[x]][r[y]], "retraction is not a homomorphism"
    return result

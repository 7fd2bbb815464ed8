import pytest
from hypothesis import given, settings, strategies as st

import oracles
from shelfhom.census import (
    IsoClassKey,
    canonical_form,
    enumerate_shelf_tables,
    enumerate_shelves,
    relabel,
)
from shelfhom.errors import PracticalSizeLimit
from shelfhom.families import (
    ConstLeft,
    IdentityOp,
    IntersectionShelf,
    RightTrivialOp,
    SubtractionShelf,
    construct_family,
)
from shelfhom.tables import BinaryOpTable, identity_op, right_trivial_op


def test_relabelled_copies_share_a_key():
    swap_left = construct_family(ConstLeft(f=(1, 0))).table
    moved = relabel(swap_left, (1, 0))
    assert canonical_form(swap_left) == canonical_form(moved)


def test_projections_are_not_isomorphic():
    assert canonical_form(identity_op(2)) != canonical_form(right_trivial_op(2))


def test_canonical_form_size_guard():
    with pytest.raises(PracticalSizeLimit):
        canonical_form(identity_op(9))


def test_key_table_round_trip():
    key = canonical_form(identity_op(3))
    assert key.size == 3
    assert canonical_form(key.table()) == key


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_canonical_form_is_relabelling_invariant(data):
    n = data.draw(st.integers(1, 4))
    flat = [data.draw(st.integers(0, n - 1)) for _ in range(n * n)]
    table = BinaryOpTable.from_rows(
        [flat[i * n:(i + 1) * n] for i in range(n)]
    )
    perm = tuple(data.draw(st.permutations(range(n))))
    assert canonical_form(table) == canonical_form(relabel(table, perm))


def test_two_element_shelves_is_the_paper_list():
    keys = enumerate_shelves(2)
    assert len(keys) == 6
    named = {
        "constant-left": construct_family(ConstLeft(f=(0, 0))).table,
        "identity-product": construct_family(IdentityOp(2)).table,
        "swap-left": construct_family(ConstLeft(f=(1, 0))).table,
        "right-trivial": construct_family(RightTrivialOp(2)).table,
        "meet": construct_family(IntersectionShelf(1, (0, 1))).table,
        "subtract": construct_family(SubtractionShelf(1, (0, 1))).table,
    }
    assert {canonical_form(t) for t in named.values()} == set(keys)


def test_one_element_enumeration():
    assert len(enumerate_shelves(1)) == 1
    assert enumerate_shelves(1)[0] == IsoClassKey((0,))


def test_enumeration_size_guard():
    with pytest.raises(PracticalSizeLimit):
        enumerate_shelf_tables(6)
    with pytest.raises(PracticalSizeLimit):
        enumerate_shelves(6)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_backtracker_matches_exhaustive_filter(n, labelled_by_size):
    expected = oracles.all_shelf_tables_by_filter(n)
    got = [t.flat() for t in labelled_by_size[n]]
    assert got == sorted(expected)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classes_match_orbit_partition_oracle(n, labelled_by_size):
    flats = [t.flat() for t in labelled_by_size[n]]
    reps = oracles.iso_classes_by_orbit(flats, n)
    assert [k.flat for k in enumerate_shelves(n)] == reps


def test_every_enumerated_table_is_a_shelf(labelled_by_size):
    for n, tables in labelled_by_size.items():
        for t in tables:
            assert oracles.brute_force_is_shelf([list(r) for r in t.entries])


def test_enumeration_is_deterministic():
    assert enumerate_shelves(3) == enumerate_shelves(3)

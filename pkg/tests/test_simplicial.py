import logging

import pytest

from shelfhom.errors import CapExceeded, DegreeOutOfRange
from shelfhom.families import RightTrivialOp, construct_family
from shelfhom.orbits import left_orbits
from shelfhom.simplicial import (
    ShelfComplex,
    build_shelf_complex,
    components,
    simplicial_boundary_matrix,
    simplicial_homology,
)
from shelfhom.tables import BinaryOpTable, Shelf, validate_shelf

PAPER_4x4 = validate_shelf(
    BinaryOpTable.from_rows(
        [[0, 2, 2, 3], [0, 1, 2, 3], [0, 2, 2, 3], [2, 0, 2, 3]]
    )
)


def test_paper_example_complex_shape():
    scx = build_shelf_complex(PAPER_4x4)
    # a hollow triangle on {0,1,2} plus the isolated vertex 3
    assert scx.simplices[0] == ((0,), (1,), (2,), (3,))
    assert scx.simplices[1] == ((0, 1), (0, 2), (1, 2))
    assert scx.count(2) == 0
    assert scx.count(3) == 0
    assert scx.maximal_simplices() == [(3,), (0, 1), (0, 2), (1, 2)]


def test_paper_example_components_and_h1():
    scx = build_shelf_complex(PAPER_4x4)
    count, labels = components(scx)
    assert count == 2
    assert labels == (0, 0, 0, 1)
    h1 = simplicial_homology(scx, 1)
    assert (h1.rank, h1.torsion) == (1, ())
    h0 = simplicial_homology(scx, 0)
    assert (h0.rank, h0.torsion) == (2, ())


def test_right_trivial_has_no_edges():
    scx = build_shelf_complex(construct_family(RightTrivialOp(4)))
    assert scx.count(0) == 4
    for d in range(1, 4):
        assert scx.count(d) == 0
    assert components(scx)[0] == 4


def test_single_point_complex():
    scx = build_shelf_complex(validate_shelf(BinaryOpTable.from_rows([[0]])))
    assert scx.simplices[0] == ((0,),)
    h0 = simplicial_homology(scx, 0)
    assert (h0.rank, h0.torsion) == (1, ())


def test_full_triangle_is_contractible():
    # machinery check on a hand-built complex with its 2-cell present
    scx = ShelfComplex(
        size=3,
        maxdim=2,
        simplices=(
            ((0,), (1,), (2,)),
            ((0, 1), (0, 2), (1, 2)),
            ((0, 1, 2),),
        ),
    )
    assert simplicial_homology(scx, 1).is_trivial()
    assert simplicial_homology(scx, 0).rank == 1


def test_meet_shelf_has_a_two_cell():
    # chains of three nested distinct subsets generate 2-simplices
    from shelfhom.families import IntersectionShelf

    shelf = construct_family(
        IntersectionShelf(omega_size=2, family=(0, 1, 2, 3))
    )
    scx = build_shelf_complex(shelf)
    assert scx.count(2) > 0
    assert components(scx)[0] == 1


def test_boundary_matrix_signs():
    scx = ShelfComplex(
        size=3,
        maxdim=1,
        simplices=(((0,), (1,), (2,)), ((0, 1), (1, 2))),
    )
    d1 = simplicial_boundary_matrix(scx, 1)
    assert d1.to_dense() == [[-1, 0], [1, -1], [0, 1]]
    d0 = simplicial_boundary_matrix(scx, 0)
    assert d0.shape == (0, 3)


def test_component_count_equals_orbit_count(classes4, labelled_by_size):
    small = [Shelf(t) for tables in labelled_by_size.values() for t in tables]
    big = [Shelf(k.table()) for k in classes4]
    for shelf in small + big:
        scx = build_shelf_complex(shelf, maxdim=1)
        assert components(scx)[0] == left_orbits(shelf).count


def test_face_closure_never_warns_on_small_shelves(classes4, caplog):
    with caplog.at_level(logging.WARNING, logger="shelfhom.simplicial"):
        for key in classes4:
            build_shelf_complex(Shelf(key.table()), maxdim=3)
    assert not caplog.records


def test_missing_face_triggers_warning_and_insertion(caplog):
    # exercise the closure path directly on a synthetic gap
    from shelfhom.simplicial import _close_faces

    found = [{(0,), (1,)}, {(0, 1), (1, 2)}]
    with caplog.at_level(logging.WARNING, logger="shelfhom.simplicial"):
        _close_faces(found)
    assert (2,) in found[0]
    assert caplog.records


def test_degree_window_guard():
    scx = build_shelf_complex(PAPER_4x4, maxdim=1)
    simplicial_homology(scx, 0)
    with pytest.raises(DegreeOutOfRange):
        simplicial_homology(scx, 1)  # needs dimension 2 but built to 1 < n-1


def test_tuple_cap():
    with pytest.raises(CapExceeded):
        build_shelf_complex(PAPER_4x4, maxdim=3, cap=10)

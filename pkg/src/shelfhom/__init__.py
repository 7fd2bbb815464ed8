"""Exact integer homology of finite shelves, racks, quandles, multi-shelves."""

from .census import IsoClassKey, canonical_form, enumerate_shelf_tables, enumerate_shelves
from .chain import (
    ChainComplex,
    F_chain_map,
    basis_index,
    boundary_matrix,
    build_complex,
    homology,
    homology_groups,
    index_tuple,
    preset_homology,
    quandle_quotient_complex,
    simplicial_projection_map,
)
from .families import (
    BooleanMultiShelf,
    ConstLeft,
    IdempotentRight,
    IdentityOp,
    IntersectionShelf,
    PartitionFamily,
    PointedMap,
    RightTrivialOp,
    SubsetSwitch,
    SubtractionShelf,
    combine,
    construct_family,
    strong_retract_extend,
)
from .intmat import SparseIntMatrix
from .orbits import OrbitPartition, classify, left_orbits, orbit_quotient
from .simplicial import ShelfComplex, build_shelf_complex, components, simplicial_homology
from .snf import HomologyGroup, SmithForm, smith_normal_form
from .tables import (
    BinaryOpTable,
    MultiShelf,
    Shelf,
    compose_ops,
    distributive_closure,
    identity_op,
    inverse_op,
    left_normed_product,
    right_trivial_op,
    validate_multishelf,
    validate_shelf,
)

__version__ = "0.1.0"

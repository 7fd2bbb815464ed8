"""Chain complexes of shelves and multi-shelves over the integers.

The degree-d chain group has the tuples of length d+1 as basis, indexed
lexicographically with the leftmost coordinate most significant.  For a
family of operations with integer coefficients c_k the differential is

    d = sum_k c_k d^k,
    d^k(x_0,...,x_d) = sum_i (-1)^i (x_0 *_k x_i, ..., x_{i-1} *_k x_i,
                                     x_{i+1}, ..., x_d),

which squares to zero because the single-operation partial differentials
anticommute pairwise.  With the augmentation, C_{-1} = Z and every (x) maps
to 1; degree 0 then contributes the all-ones row.

Grading note: for a single operation this is the complex whose degree-0
homology counts left orbits (rank = orbits - 1 when augmented).  For the
coefficient pair (1, -1) on (op, identity) the degree-n group here is what
the knot-theory literature calls the (n+1)-st rack homology.
"""

from __future__ import annotations

from itertools import product

from .errors import (
    ChainMapViolation,
    DDNotZero,
    DegenerateNotSubcomplex,
    DegreeNegative,
    DegreeOutOfRange,
    MemoryCapExceeded,
    NotASpindle,
    OutOfRange,
    SizeMismatch,
)
from .intmat import SparseIntMatrix
from .orbits import is_spindle
from .snf import HomologyGroup, SmithForm, smith_normal_form
from .tables import (
    BinaryOpTable,
    MultiShelf,
    Shelf,
    compose_ops,
    identity_op,
    suffix_products,
    validate_multishelf,
)

DEFAULT_MEMORY_CAP = 1 << 26


def basis_index(tup, size: int) -> int:
    """Lexicographic index of a tuple in {0..n-1}^len, leftmost major."""
    idx = 0
    for v in tup:
        if not 0 <= v < size:
            raise OutOfRange(f"tuple entry {v} outside 0..{size - 1}")
        idx = idx * size + v
    return idx


def index_tuple(index: int, length: int, size: int) -> tuple[int, ...]:
    """Inverse of :func:`basis_index` for tuples of the given length."""
    if not 0 <= index < size ** length:
        raise OutOfRange(f"index {index} outside the rank-{length} basis")
    out = []
    for _ in range(length):
        index, r = divmod(index, size)
        out.append(r)
    return tuple(reversed(out))


def _as_multishelf(structure) -> MultiShelf:
    if isinstance(structure, MultiShelf):
        return structure
    if isinstance(structure, Shelf):
        return MultiShelf((structure.table,))
    raise SizeMismatch(f"expected Shelf or MultiShelf, got {type(structure).__name__}")


def boundary_matrix(ms, coefficients, degree: int, augmented: bool = True) -> SparseIntMatrix:
    """Matrix of sum_k c_k d^k in the tuple bases.

    Degree d maps C_d (n^(d+1) columns) to C_{d-1} (n^d rows); degree 0 is
    the augmentation row when ``augmented`` and the empty 0 x n matrix
    otherwise.
    """
    ms = _as_multishelf(ms)
    n = ms.size
    coefficients = tuple(coefficients)
    if len(coefficients) != len(ms.ops):
        raise SizeMismatch(
            f"{len(coefficients)} coefficients for {len(ms.ops)} operations"
        )
    if degree < 0:
        raise DegreeNegative(f"degree {degree} < 0")
    if degree == 0:
        if not augmented:
            return SparseIntMatrix(0, n, {})
        return SparseIntMatrix._raw(1, n, {(0, j): 1 for j in range(n)})
    d = degree
    data: dict[tuple[int, int], int] = {}
    active = [(k, c) for k, c in enumerate(coefficients) if c]
    tables = [op.entries for op in ms.ops]
    for col, tup in enumerate(product(range(n), repeat=d + 1)):
        for k, c in active:
            t = tables[k]
            for i in range(d + 1):
                xi = tup[i]
                row = 0
                for j in range(i):
                    row = row * n + t[tup[j]][xi]
                for j in range(i + 1, d + 1):
                    row = row * n + tup[j]
                key = (row, col)
                s = data.get(key, 0) + (c if i % 2 == 0 else -c)
                if s:
                    data[key] = s
                else:
                    del data[key]
    return SparseIntMatrix._raw(n ** d, n ** (d + 1), data)


class ChainComplex:
    """A built complex: boundary matrices d_0..d_maxdeg plus cached SNFs.

    ``dims[d]`` is the rank of C_d.  For the full tuple complex ``bases`` is
    None; the degenerate quotient stores its explicit per-degree bases.
    Instances are immutable apart from the Smith-form cache.
    """

    def __init__(self, size, ops, coefficients, maxdeg, augmented,
                 dims, boundaries, bases=None, kind="tuple"):
        self.size = size
        self.ops = tuple(ops)
        self.coefficients = tuple(coefficients)
        self.maxdeg = maxdeg
        self.augmented = augmented
        self.dims = tuple(dims)
        self.boundaries = tuple(boundaries)
        self.bases = bases
        self.kind = kind
        self._snf_cache: dict[int, SmithForm] = {}

    def dim(self, degree: int) -> int:
        if not 0 <= degree <= self.maxdeg:
            raise DegreeOutOfRange(f"degree {degree} outside 0..{self.maxdeg}")
        return self.dims[degree]

    def boundary(self, degree: int) -> SparseIntMatrix:
        if not 0 <= degree <= self.maxdeg:
            raise DegreeOutOfRange(f"degree {degree} outside 0..{self.maxdeg}")
        return self.boundaries[degree]

    def snf(self, degree: int) -> SmithForm:
        got = self._snf_cache.get(degree)
        if got is None:
            got = smith_normal_form(self.boundary(degree))
            self._snf_cache[degree] = got
        return got

    def __repr__(self):
        return (
            f"ChainComplex(kind={self.kind!r}, n={self.size}, "
            f"ops={len(self.ops)}, maxdeg={self.maxdeg}, "
            f"augmented={self.augmented})"
        )


def check_memory_cap(size, maxdeg, cap):
    if size ** (maxdeg + 2) > cap:
        raise MemoryCapExceeded(
            f"n^(maxdeg+2) = {size}^{maxdeg + 2} exceeds the cap {cap}; "
            "raise the cap to force the computation"
        )


def build_complex(ms, coefficients, maxdeg: int, augmented: bool = True,
                  cap: int = DEFAULT_MEMORY_CAP) -> ChainComplex:
    """Build d_0..d_maxdeg and verify d o d = 0 before returning."""
    ms = _as_multishelf(ms)
    if maxdeg < 0:
        raise DegreeNegative(f"maxdeg {maxdeg} < 0")
    check_memory_cap(ms.size, maxdeg, cap)
    boundaries = [
        boundary_matrix(ms, coefficients, d, augmented)
        for d in range(maxdeg + 1)
    ]
    for d in range(1, maxdeg + 1):
        if not boundaries[d - 1].matmul(boundaries[d]).is_zero():
            raise DDNotZero(f"d_{d - 1} o d_{d} != 0")
    n = ms.size
    return ChainComplex(
        size=n,
        ops=ms.ops,
        coefficients=tuple(coefficients),
        maxdeg=maxdeg,
        augmented=augmented,
        dims=[n ** (d + 1) for d in range(maxdeg + 1)],
        boundaries=boundaries,
    )


def homology(cx: ChainComplex, degree: int) -> HomologyGroup:
    """Free rank and torsion of H_degree.

    Needs d_{degree+1}, so the complex must be built at least one degree
    past the one requested.
    """
    if degree < 0 or degree + 1 > cx.maxdeg:
        raise DegreeOutOfRange(
            f"homology at degree {degree} needs boundaries through "
            f"{degree + 1}, but the complex stops at {cx.maxdeg}"
        )
    upper = cx.snf(degree + 1)
    rank = cx.dim(degree) - cx.snf(degree).rank - upper.rank
    return HomologyGroup(degree, rank, upper.torsion())


def homology_groups(cx: ChainComplex, through_degree: int) -> list[HomologyGroup]:
    return [homology(cx, d) for d in range(through_degree + 1)]


def preset_homology(shelf: Shelf, kind: str, maxdeg: int,
                    augmented: bool | None = None,
                    cap: int = DEFAULT_MEMORY_CAP) -> list[HomologyGroup]:
    """Homology in degrees 0..maxdeg for the three standard presets.

    shelf:   single operation, coefficients (1,), augmented by default;
    rack:    operations (op, identity), coefficients (1, -1), unaugmented;
    quandle: the rack differential on the quotient by degenerate chains
             (spindles only), unaugmented by default.
    """
    n = shelf.size
    if kind == "shelf":
        aug = True if augmented is None else augmented
        cx = build_complex(shelf, (1,), maxdeg + 1, aug, cap)
    elif kind == "rack":
        aug = False if augmented is None else augmented
        ms = MultiShelf((shelf.table, identity_op(n)))
        cx = build_complex(ms, (1, -1), maxdeg + 1, aug, cap)
    elif kind == "quandle":
        aug = False if augmented is None else augmented
        cx = quandle_quotient_complex(shelf, (1, -1), maxdeg + 1, aug, cap)
    else:
        raise ValueError(f"unknown preset kind {kind!r}")
    return homology_groups(cx, maxdeg)


def degenerate_free_tuples(n: int, degree: int):
    """Tuples of length degree+1 with no two equal adjacent entries."""
    if degree == 0:
        return [(x,) for x in range(n)]
    out = []
    for tup in product(range(n), repeat=degree + 1):
        if all(tup[i] != tup[i + 1] for i in range(degree)):
            out.append(tup)
    return out


def quandle_quotient_complex(shelf: Shelf, coefficients=(1, -1),
                             maxdeg: int = 3, augmented: bool = False,
                             cap: int = DEFAULT_MEMORY_CAP) -> ChainComplex:
    """The quotient of the tuple complex by degenerate chains.

    Degenerate chains (some x_i = x_{i+1}) form a subcomplex for spindles
    under the (op, identity) differentials; this is verified columnwise
    before the quotient is assembled, and a structured error is raised for
    a coefficient vector that fails to preserve them.
    """
    if not is_spindle(shelf.table):
        raise NotASpindle("degenerate chains only form a subcomplex for spindles")
    if maxdeg < 0:
        raise DegreeNegative(f"maxdeg {maxdeg} < 0")
    n = shelf.size
    check_memory_cap(n, maxdeg, cap)
    ms = MultiShelf((shelf.table, identity_op(n)))
    coefficients = tuple(coefficients)
    if len(coefficients) != 2:
        raise SizeMismatch("the degenerate quotient uses the (op, identity) pair")

    full = [boundary_matrix(ms, coefficients, d, augmented) for d in range(maxdeg + 1)]
    bases = [degenerate_free_tuples(n, d) for d in range(maxdeg + 1)]
    base_index = [
        {tup: i for i, tup in enumerate(bs)} for bs in bases
    ]

    boundaries = []
    for d in range(maxdeg + 1):
        if d == 0:
            if augmented:
                boundaries.append(
                    SparseIntMatrix._raw(1, n, {(0, j): 1 for j in range(n)})
                )
            else:
                boundaries.append(SparseIntMatrix(0, n, {}))
            continue
        cols_of: dict[int, list] = {}
        for (i, j), v in full[d].data.items():
            cols_of.setdefault(j, []).append((i, v))
        good_rows = base_index[d - 1]
        # d(D) must live in D: check every degenerate generator's column.
        for col, tup in enumerate(product(range(n), repeat=d + 1)):
            if tup in base_index[d]:
                continue
            for i, _ in cols_of.get(col, ()):
                if index_tuple(i, d, n) in good_rows:
                    raise DegenerateNotSubcomplex(
                        f"d({tup}) has a nondegenerate term at degree {d} "
                        f"for coefficients {coefficients}"
                    )
        # project the surviving columns onto the nondegenerate basis
        data = {}
        for new_col, tup in enumerate(bases[d]):
            for i, v in cols_of.get(basis_index(tup, n), ()):
                row = good_rows.get(index_tuple(i, d, n))
                if row is not None:
                    data[(row, new_col)] = v
        boundaries.append(
            SparseIntMatrix._raw(len(bases[d - 1]), len(bases[d]), data)
        )
    for d in range(1, maxdeg + 1):
        if not boundaries[d - 1].matmul(boundaries[d]).is_zero():
            raise DDNotZero(f"quotient d_{d - 1} o d_{d} != 0")
    return ChainComplex(
        size=n,
        ops=ms.ops,
        coefficients=coefficients,
        maxdeg=maxdeg,
        augmented=augmented,
        dims=[len(bs) for bs in bases],
        boundaries=boundaries,
        bases=tuple(tuple(bs) for bs in bases),
        kind="quandle-quotient",
    )


def left_normed_tuple_map(op: BinaryOpTable, degree: int, size: int) -> SparseIntMatrix:
    """Basis map (x_0..x_d) -> (x_0*..*x_d, x_1*..*x_d, ..., x_d) as a matrix."""
    n = size
    data = {}
    for col, tup in enumerate(product(range(n), repeat=degree + 1)):
        data[(basis_index(suffix_products(op, tup), n), col)] = 1
    m = n ** (degree + 1)
    return SparseIntMatrix._raw(m, m, data)


def F_chain_map(star1: BinaryOpTable, source_cx: ChainComplex,
                target_cx: ChainComplex, degree: int) -> SparseIntMatrix:
    """The chain map built from left-normed star1 suffix products.

    Preconditions (raised as ChainMapViolation): both complexes are full
    tuple complexes on the same carrier with the same coefficients and
    augmentation, star1 is mutually distributive with every operation in
    play, and each source operation is star1 composed with the matching
    target operation.  The matrix is verified to commute with the
    boundaries at the requested degree.
    """
    if source_cx.kind != "tuple" or target_cx.kind != "tuple":
        raise ChainMapViolation("chain map needs full tuple complexes")
    n = target_cx.size
    if star1.size != n or source_cx.size != n:
        raise ChainMapViolation("carrier sizes differ")
    if source_cx.coefficients != target_cx.coefficients:
        raise ChainMapViolation("coefficient vectors differ")
    if source_cx.augmented != target_cx.augmented:
        raise ChainMapViolation("augmentation flags differ")
    if len(source_cx.ops) != len(target_cx.ops):
        raise ChainMapViolation("operation counts differ")
    for s_op, t_op in zip(source_cx.ops, target_cx.ops):
        if s_op != compose_ops(star1, t_op):
            raise ChainMapViolation(
                "source operations must be star1 composed with target ones"
            )
    try:
        validate_multishelf((star1,) + target_cx.ops + source_cx.ops)
    except Exception as exc:
        raise ChainMapViolation(
            f"star1 is not mutually distributive with the complex operations: {exc}"
        ) from exc
    if degree < 0 or degree > min(source_cx.maxdeg, target_cx.maxdeg):
        raise DegreeOutOfRange(f"degree {degree} not covered by both complexes")

    fd = left_normed_tuple_map(star1, degree, n)
    if degree >= 1:
        f_prev = left_normed_tuple_map(star1, degree - 1, n)
        lhs = target_cx.boundary(degree).matmul(fd)
        rhs = f_prev.matmul(source_cx.boundary(degree))
        if lhs != rhs:
            raise ChainMapViolation(
                f"matrix fails to commute with the boundaries at degree {degree}"
            )
    return fd


def simplicial_projection_map(shelf: Shelf, complex_, degree: int) -> SparseIntMatrix:
    """Chain map from the tuple complex onto the oriented simplicial chains.

    A tuple goes to its suffix-product vertex tuple: zero if a vertex
    repeats, otherwise +-(sorted simplex) with the sign of the sorting
    permutation.  Commutation with the boundaries is verified for
    degree >= 1.
    """
    from .simplicial import simplicial_boundary_matrix  # local to avoid cycle

    mat = _projection_matrix(shelf, complex_, degree)
    if degree >= 1:
        prev = _projection_matrix(shelf, complex_, degree - 1)
        d_alg = boundary_matrix(
            MultiShelf((shelf.table,)), (1,), degree, augmented=False
        )
        d_simp = simplicial_boundary_matrix(complex_, degree)
        if d_simp.matmul(mat) != prev.matmul(d_alg):
            raise ChainMapViolation(
                f"projection fails to commute with boundaries at degree {degree}"
            )
    return mat


def _projection_matrix(shelf: Shelf, complex_, degree: int) -> SparseIntMatrix:
    n = shelf.size
    if degree > complex_.maxdim:
        raise DegreeOutOfRange(
            f"complex built to dimension {complex_.maxdim}, need {degree}"
        )
    simplex_rows = {s: i for i, s in enumerate(complex_.simplices[degree])}
    data = {}
    for col, tup in enumerate(product(range(n), repeat=degree + 1)):
        verts = suffix_products(shelf.table, tup)
        if len(set(verts)) != len(verts):
            continue
        sign = _sort_sign(verts)
        key = tuple(sorted(verts))
        data[(simplex_rows[key], col)] = sign
    return SparseIntMatrix._raw(
        len(simplex_rows), n ** (degree + 1), data
    )


def _sort_sign(seq) -> int:
    inversions = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inversions += 1
    return -1 if inversions % 2 else 1

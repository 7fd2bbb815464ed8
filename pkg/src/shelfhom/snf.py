"""Smith normal form of sparse integer matrices, exactly over Z.

The boundary matrices this package produces are large but very sparse with
almost all entries +-1, so the computation is staged:

1. compress: drop zero rows/columns and duplicates up to sign (unimodular
   row/column operations make such lines zero, so rank and invariant factors
   are unchanged);
2. peel: repeatedly eliminate unit entries that are alone in their row or
   alone in their column -- those pivots cause no fill-in at all and account
   for the bulk of every boundary matrix;
3. general elimination on the small remainder: fraction-free row/column
   reduction choosing the pivot of minimal absolute value, with divisibility
   of the whole remaining submatrix enforced before a pivot is committed, so
   the committed pivots form the invariant-factor chain directly.

Only the factors are produced; the unimodular transforms are never needed
here.  All arithmetic is on Python ints, so nothing overflows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .intmat import SparseIntMatrix


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors s1 | s2 | ... | sr of an integer matrix."""

    factors: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for f in self.factors:
            if f <= 0:
                raise ValueError(f"invariant factor {f} must be positive")
            if prev is not None and f % prev:
                raise ValueError(
                    f"factors {prev}, {f} break the divisibility chain"
                )
            prev = f

    @property
    def rank(self) -> int:
        return len(self.factors)

    def torsion(self) -> tuple[int, ...]:
        return tuple(f for f in self.factors if f > 1)


@dataclass(frozen=True)
class HomologyGroup:
    """Free rank plus torsion invariant factors in one degree."""

    degree: int
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError(f"negative free rank {self.rank}")
        prev = None
        for f in self.torsion:
            if f <= 1:
                raise ValueError(f"torsion coefficient {f} must exceed 1")
            if prev is not None and f % prev:
                raise ValueError("torsion breaks the divisibility chain")
            prev = f

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def describe(self) -> str:
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}" if self.rank > 1 else "Z")
        parts.extend(f"Z/{f}" for f in self.torsion)
        return " + ".join(parts) if parts else "0"


def smith_normal_form(mat: SparseIntMatrix) -> SmithForm:
    rows: dict[int, dict[int, int]] = {}
    for (i, j), v in mat.data.items():
        rows.setdefault(i, {})[j] = v
    _compress(rows)
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    ones = _peel(rows, cols)
    pivots = _eliminate(rows, cols)
    return SmithForm((1,) * ones + tuple(pivots))


def _sign_normalized(items):
    items = sorted(items)
    if items and items[0][1] < 0:
        items = [(j, -v) for j, v in items]
    return tuple(items)


def _compress(rows):
    """Drop duplicate (up to sign) rows and columns; repeat to a fixpoint."""
    while True:
        changed = False
        seen = {}
        for i in sorted(rows):
            fp = _sign_normalized(rows[i].items())
            if fp in seen:
                del rows[i]
                changed = True
            else:
                seen[fp] = i
        col_items: dict[int, list] = {}
        for i, r in rows.items():
            for j, v in r.items():
                col_items.setdefault(j, []).append((i, v))
        seen = {}
        drop = []
        for j in sorted(col_items):
            fp = _sign_normalized(col_items[j])
            if fp in seen:
                drop.append(j)
                changed = True
            else:
                seen[fp] = j
        for j in drop:
            for i, _ in col_items[j]:
                r = rows[i]
                del r[j]
                if not r:
                    del rows[i]
        if not changed:
            return


def _peel(rows, cols):
    """Eliminate unit pivots alone in their row or column (no fill-in)."""
    ones = 0
    rowq = deque(i for i in sorted(rows) if len(rows[i]) == 1)
    colq = deque(j for j in sorted(cols) if len(cols[j]) == 1)
    while rowq or colq:
        if rowq:
            i = rowq.popleft()
            r = rows.get(i)
            if r is None or len(r) != 1:
                continue
            j, v = next(iter(r.items()))
            if abs(v) != 1:
                continue
            # clearing the column touches other rows only at column j
            for k in cols[j]:
                if k == i:
                    continue
                rk = rows[k]
                del rk[j]
                if not rk:
                    del rows[k]
                elif len(rk) == 1:
                    rowq.append(k)
            del cols[j]
            del rows[i]
            ones += 1
            continue
        j = colq.popleft()
        members = cols.get(j)
        if members is None or len(members) != 1:
            continue
        (i,) = members
        v = rows[i][j]
        if abs(v) != 1:
            continue
        # clearing the row touches other columns only at row i
        for k in rows[i]:
            if k == j:
                continue
            ck = cols[k]
            ck.discard(i)
            if not ck:
                del cols[k]
            elif len(ck) == 1:
                colq.append(k)
        del rows[i]
        del cols[j]
        ones += 1
        # deleting the row may have created singleton rows? no: only columns
    return ones


def _row_axpy(rows, cols, dst, src, c, units):
    """rows[dst] += c * rows[src]; drops dst entirely if it becomes zero.

    Entries that become +-1 are queued as future pivot candidates."""
    rdst = rows[dst]
    for j, v in rows[src].items():
        old = rdst.get(j)
        nv = (old or 0) + c * v
        if nv:
            if old is None:
                cols[j].add(dst)
            rdst[j] = nv
            if nv == 1 or nv == -1:
                units.append((dst, j))
        elif old is not None:
            del rdst[j]
            cols[j].discard(dst)
    if not rdst:
        del rows[dst]


def _eliminate(rows, cols):
    """Fraction-free elimination preferring unit pivots; returns the pivots.

    A pivot of +-1 divides everything, so any one of them can be committed
    next without breaking the invariant-factor chain; they are pulled from a
    queue instead of a full scan.  Once no units remain, the pivot of
    minimal absolute value (ties: lowest row, then column) is located by
    scanning, and divisibility of the whole remaining submatrix is enforced
    before it is committed.
    """
    pivots = []
    units = deque(sorted(
        (i, j)
        for i, r in rows.items()
        for j, v in r.items()
        if v == 1 or v == -1
    ))
    while rows:
        pi = None
        while units:
            i, j = units.popleft()
            r = rows.get(i)
            if r is None:
                continue
            v = r.get(j)
            if v == 1 or v == -1:
                pi, pj = i, j
                break
        if pi is None:
            best = None
            for i, r in rows.items():
                for j, v in r.items():
                    cand = (v if v > 0 else -v, i, j)
                    if best is None or cand < best:
                        best = cand
            if best is None:
                break
            _, pi, pj = best
        while True:
            rp = rows[pi]
            pv = rp[pj]
            if pv < 0:
                for j in rp:
                    rp[j] = -rp[j]
                pv = -pv
            # column pass: clear column pj with row operations
            smallest = None
            for k in sorted(cols[pj]):
                if k == pi:
                    continue
                q = rows[k][pj] // pv
                if q:
                    _row_axpy(rows, cols, k, pi, -q, units)
                res = rows.get(k, {}).get(pj, 0)
                if res and (smallest is None or (res, k) < smallest):
                    smallest = (res, k)
            if smallest is not None:
                pi = smallest[1]
                continue
            # row pass: column pj is now the pivot alone, so column
            # operations only touch row pi
            rp = rows[pi]
            smallest = None
            for j in [j for j in rp if j != pj]:
                q = rp[j] // pv
                if q:
                    nb = rp[j] - q * pv
                    if nb:
                        rp[j] = nb
                        if nb == 1:
                            units.append((pi, j))
                    else:
                        del rp[j]
                        cols[j].discard(pi)
                        if not cols[j]:
                            del cols[j]
                nb = rp.get(j, 0)
                if nb and (smallest is None or (nb, j) < smallest):
                    smallest = (nb, j)
            if smallest is not None:
                pj = smallest[1]
                continue
            if pv != 1:
                offender = None
                for i2 in sorted(rows):
                    if i2 == pi:
                        continue
                    if any(v % pv for v in rows[i2].values()):
                        offender = i2
                        break
                if offender is not None:
                    _row_axpy(rows, cols, pi, offender, 1, units)
                    continue
            break
        pivots.append(rows[pi][pj])
        del rows[pi]
        del cols[pj]
    return pivots

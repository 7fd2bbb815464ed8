"""Conjecture scans and the torsion hunt.

Scans only ever produce verdicts ("consistent" / "inconsistent" /
"not-computed" per grid point): the statements being probed are conjectures,
so a failed point is a reportable observation, never an assertion failure.
Only theorem-backed checks elsewhere in the package may fail a run.

Independent (structure, coefficient, degree) jobs can fan out to a process
pool; reports are assembled in grid order, so results do not depend on
completion order.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .census import canonical_form, enumerate_shelves
from .chain import build_complex, homology_groups, preset_homology
from .errors import CapExceeded
from .families import BooleanMultiShelf, PointedMap, construct_family
from .orbits import left_orbits
from .tables import BinaryOpTable, Shelf, validate_multishelf

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
NOT_COMPUTED = "not-computed"


@dataclass(frozen=True)
class ScanPoint:
    params: dict
    observed: object
    conjectured: object
    verdict: str

    def to_doc(self) -> dict:
        return {
            "params": self.params,
            "observed": self.observed,
            "conjectured": self.conjectured,
            "verdict": self.verdict,
        }


@dataclass
class ScanReport:
    conjecture: str
    params: dict
    points: list[ScanPoint] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def finish(self):
        counts = Counter(p.verdict for p in self.points)
        self.summary.setdefault("points", len(self.points))
        for verdict in (CONSISTENT, INCONSISTENT, NOT_COMPUTED):
            self.summary.setdefault(verdict, counts.get(verdict, 0))
        self.summary.setdefault(
            "all_consistent", counts.get(INCONSISTENT, 0) == 0
        )
        return self

    def to_doc(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "params": self.params,
            "points": [p.to_doc() for p in self.points],
            "summary": self.summary,
        }


def _pool_map(fn, items, jobs):
    if jobs <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _shelf_ranks(args):
    flat, size, maxdeg = args
    table = BinaryOpTable(tuple(flat[i * size:(i + 1) * size] for i in range(size)))
    groups = preset_homology(Shelf(table), "shelf", maxdeg)
    return [g.rank for g in groups]


def scan_growth(size: int, maxdeg: int = 4, jobs: int = 1) -> ScanReport:
    """rank H_{d+1} = |X| * rank H_d for d >= |X| - 2, over all iso classes.

    The summary also records how rank H_1 of each shelf compares with
    rank H_1 of its orbit quotient (the r-element x*y = y shelf, whose
    degree-1 rank is (r-1)*r): an excess in either direction witnesses the
    induced map on homology failing to be injective resp. surjective.
    """
    if size > 4:
        raise CapExceeded(f"growth scan capped at size 4, got {size}")
    keys = enumerate_shelves(size)
    report = ScanReport("growth", {"size": size, "maxdeg": maxdeg})
    rank_lists = _pool_map(
        _shelf_ranks, [(k.flat, size, maxdeg) for k in keys], jobs
    )
    start = max(size - 2, 0)
    quotient_cmp = {"greater": 0, "equal": 0, "less": 0}
    witnesses = {}
    for key, ranks in zip(keys, rank_lists):
        for d in range(start, maxdeg):
            expected = size * ranks[d]
            report.points.append(ScanPoint(
                params={"class": list(key.flat), "degree": d},
                observed={"rank": ranks[d], "rank_next": ranks[d + 1]},
                conjectured={"rank_next": expected},
                verdict=CONSISTENT if ranks[d + 1] == expected else INCONSISTENT,
            ))
        if maxdeg >= 1:
            r = left_orbits(Shelf(key.table())).count
            quotient_h1 = (r - 1) * r
            side = (
                "greater" if ranks[1] > quotient_h1
                else "less" if ranks[1] < quotient_h1
                else "equal"
            )
            quotient_cmp[side] += 1
            witnesses.setdefault(side, list(key.flat))
    if maxdeg >= 1:
        report.summary["quotient_h1_comparison"] = quotient_cmp
        report.summary["quotient_h1_witnesses"] = witnesses
    return report.finish()


def pointed_map_shelves(size: int):
    """One shelf per iso class of the pointed-map family on the carrier."""
    out = {}
    for b in range(size):
        candidates = [
            [v for v in range(size) if v != b] for _ in range(size)
        ]
        candidates[b] = [b]
        for g in product(*candidates):
            shelf = construct_family(PointedMap(b=b, g=tuple(g)))
            key = canonical_form(shelf.table)
            out.setdefault(key, shelf)
    return [out[k] for k in sorted(out)]


def is_pointed_map_type(table: BinaryOpTable) -> bool:
    """Does the table have the x*y = (g(y) if x=b else y) shape for some b?

    The shape test is isomorphism-invariant, so it can be applied to any
    class representative directly.
    """
    n = table.size
    ident = tuple(range(n))
    for b in range(n):
        if any(table.entries[x] != ident for x in range(n) if x != b):
            continue
        g = table.entries[b]
        if all((g[x] == b) == (x == b) for x in range(n)):
            return True
    return False


def scan_example4(size: int, maxdeg: int = 3, jobs: int = 1) -> ScanReport:
    """Pointed-map family rank formula |X|^(d-1)*(2+(|X|+1)*(r-2)), d >= 1."""
    if size > 4:
        raise CapExceeded(f"example4 scan capped at size 4, got {size}")
    shelves = pointed_map_shelves(size)
    report = ScanReport("example4", {"size": size, "maxdeg": maxdeg})
    rank_lists = _pool_map(
        _shelf_ranks,
        [(s.table.flat(), size, maxdeg) for s in shelves],
        jobs,
    )
    for shelf, ranks in zip(shelves, rank_lists):
        r = left_orbits(shelf).count
        for d in range(1, maxdeg + 1):
            expected = size ** (d - 1) * (2 + (size + 1) * (r - 2))
            report.points.append(ScanPoint(
                params={"class": list(shelf.table.flat()), "orbits": r, "degree": d},
                observed={"rank": ranks[d]},
                conjectured={"rank": expected},
                verdict=CONSISTENT if ranks[d] == expected else INCONSISTENT,
            ))
    return report.finish()


def _boolean_conjectured(omega: int, coeffs, degree: int):
    a0, a1, a2 = coeffs
    is_zero = coeffs == (0, 0, 0)
    is_ray = a0 != 0 and a1 == -a0 and a2 == -a0
    if degree == 0:
        if is_zero:
            return 2 ** omega - 1
        if is_ray:
            return omega
        return 0
    if is_zero:
        return 2 ** (omega * (degree + 1))
    if is_ray:
        return omega * 2 ** degree
    if a0 + a1 + a2 == 0:
        return 1
    return 0


def scan_boolean(omega: int, radius: int = 1, maxdeg: int = 3,
                 augmented: bool = True, jobs: int = 1) -> ScanReport:
    """The subset multi-shelf (identity, meet, join) over a coefficient grid."""
    if omega > 2:
        raise CapExceeded(f"boolean scan capped at |Omega| = 2, got {omega}")
    four = construct_family(BooleanMultiShelf(omega))
    ms = validate_multishelf(four.ops[:3])
    grid = list(product(range(-radius, radius + 1), repeat=3))
    report = ScanReport(
        "boolean",
        {"omega": omega, "radius": radius, "maxdeg": maxdeg, "augmented": augmented},
    )
    rank_lists = _pool_map(
        _multi_ranks,
        [(ms, coeffs, maxdeg, augmented) for coeffs in grid],
        jobs,
    )
    for coeffs, ranks in zip(grid, rank_lists):
        conjectured = [
            _boolean_conjectured(omega, coeffs, d) for d in range(maxdeg + 1)
        ]
        report.points.append(ScanPoint(
            params={"coefficients": list(coeffs)},
            observed={"ranks": ranks},
            conjectured={"ranks": conjectured},
            verdict=CONSISTENT if ranks == conjectured else INCONSISTENT,
        ))
    return report.finish()


def _multi_ranks(args):
    ms, coeffs, maxdeg, augmented = args
    cx = build_complex(ms, coeffs, maxdeg + 1, augmented)
    return [g.rank for g in homology_groups(cx, maxdeg)]


def scan_hyperplane(ms, samples: int = 25, bound: int = 2, maxdeg: int = 2,
                    seed: int = 0, augmented: bool = True,
                    jobs: int = 1) -> ScanReport:
    """Probe whether the rank sequence is generically coefficient-independent.

    Draws nonzero integer coefficient vectors from a box, computes the rank
    sequence for each, takes the most common sequence as the generic one,
    and flags the samples that deviate ("inconsistent" = exceptional; such
    points do not refute anything, they are the conjectured thin set).
    """
    if samples > 200:
        raise CapExceeded(f"sample count {samples} exceeds the cap 200")
    nops = len(ms.ops)
    rng = random.Random(seed)
    vectors = []
    seen = set()
    while len(vectors) < samples:
        vec = tuple(rng.randint(-bound, bound) for _ in range(nops))
        if any(vec) and vec not in seen:
            seen.add(vec)
            vectors.append(vec)
        if len(seen) >= (2 * bound + 1) ** nops - 1:
            break
    rank_lists = _pool_map(
        _multi_ranks,
        [(ms, vec, maxdeg, augmented) for vec in vectors],
        jobs,
    )
    counts = Counter(tuple(r) for r in rank_lists)
    top = max(counts.values())
    generic = sorted(seq for seq, c in counts.items() if c == top)[0]
    report = ScanReport(
        "hyperplane",
        {
            "size": ms.size,
            "operations": nops,
            "samples": len(vectors),
            "bound": bound,
            "maxdeg": maxdeg,
            "seed": seed,
            "augmented": augmented,
        },
    )
    exceptional = 0
    for vec, ranks in zip(vectors, rank_lists):
        is_generic = tuple(ranks) == generic
        if not is_generic:
            exceptional += 1
        report.points.append(ScanPoint(
            params={"coefficients": list(vec)},
            observed={"ranks": ranks},
            conjectured={"ranks": list(generic)},
            verdict=CONSISTENT if is_generic else INCONSISTENT,
        ))
    report.summary["generic_ranks"] = list(generic)
    report.summary["exceptional_fraction"] = (
        exceptional / len(vectors) if vectors else 0.0
    )
    return report.finish()


def _class_torsion(args):
    flat, size, maxdeg = args
    table = BinaryOpTable(tuple(flat[i * size:(i + 1) * size] for i in range(size)))
    groups = preset_homology(Shelf(table), "shelf", maxdeg)
    return [list(g.torsion) for g in groups]


def torsion_hunt(size: int, maxdeg: int = 1, jobs: int = 1) -> ScanReport:
    """List every iso class with torsion in degrees <= maxdeg.

    Each find is flagged when the class has the pointed-map shape of the
    known torsion examples.
    """
    if size > 4:
        raise CapExceeded(f"torsion hunt capped at size 4, got {size}")
    keys = enumerate_shelves(size)
    report = ScanReport("torsion-hunt", {"size": size, "maxdeg": maxdeg})
    torsion_lists = _pool_map(
        _class_torsion, [(k.flat, size, maxdeg) for k in keys], jobs
    )
    found = 0
    for key, torsions in zip(keys, torsion_lists):
        if not any(torsions):
            continue
        found += 1
        report.points.append(ScanPoint(
            params={"class": list(key.flat)},
            observed={
                "torsion_by_degree": {
                    str(d): t for d, t in enumerate(torsions) if t
                },
                "pointed_map_type": is_pointed_map_type(key.table()),
            },
            conjectured=None,
            verdict=CONSISTENT,
        ))
    report.summary["classes_scanned"] = len(keys)
    report.summary["classes_with_torsion"] = found
    return report.finish()

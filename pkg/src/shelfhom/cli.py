"""Command-line front end.

Subcommands: validate, orbits, homology, simplicial, enumerate, scan,
torsion-hunt.  Reports are JSON with sorted keys; pass --no-timestamp for
byte-identical reruns of the same computation.

Exit codes: 0 success, 2 input error, 3 resource cap, 4 internal assertion
(the d o d != 0 class, which indicates a bug rather than bad input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import errors
from .census import canonical_form, enumerate_shelves
from .chain import (
    DEFAULT_MEMORY_CAP,
    build_complex,
    homology_groups,
    quandle_quotient_complex,
)
from .io import dump_report, finish_report, load_structure, structure_to_doc
from .orbits import classify, left_orbits, orbit_quotient
from .scans import scan_boolean, scan_example4, scan_growth, scan_hyperplane, torsion_hunt
from .simplicial import build_shelf_complex, components, simplicial_homology
from .tables import MultiShelf, Shelf, identity_op

INPUT_ERRORS = (
    errors.ParseError,
    errors.SizeMismatch,
    errors.OutOfRange,
    errors.EmptyList,
    errors.DistributivityViolation,
    errors.MutualDistributivityViolation,
    errors.SpecPreconditionFailed,
    errors.RetractionNotIdentityOnA,
    errors.NotASpindle,
    errors.NotInvertible,
    errors.DegreeNegative,
    errors.DegreeOutOfRange,
    errors.DegenerateNotSubcomplex,
    errors.ChainMapViolation,
)
CAP_ERRORS = (
    errors.PracticalSizeLimit,
    errors.MemoryCapExceeded,
    errors.CapExceeded,
    errors.BoundExceeded,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shelfhom",
        description="Exact integer homology of finite shelves and multi-shelves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="structure JSON document")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--maxdeg", metavar="K", type=int, default=None,
                        help="top degree to compute (top dimension for simplicial)")
    common.add_argument("--augmented", choices=["on", "off", "default"], default="default",
                        help="augmentation override; default depends on the kind")
    common.add_argument("--cap", metavar="BYTES", type=int, default=DEFAULT_MEMORY_CAP,
                        help="basis-element cap guarding complex construction")
    common.add_argument("--jobs", metavar="K", type=int, default=1,
                        help="worker processes for independent scan jobs")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit generated_at for byte-identical reruns")

    p = sub.add_parser("validate", parents=[common],
                       help="check the distributivity laws of an input document")

    p = sub.add_parser("orbits", parents=[common],
                       help="left orbits and the orbit quotient of a shelf")

    p = sub.add_parser("homology", parents=[common],
                       help="shelf/rack/quandle/multi-shelf homology groups")
    p.add_argument("--kind", choices=["shelf", "rack", "quandle", "multi"],
                   default="shelf")
    p.add_argument("--coefficients", metavar="C1,C2,...",
                   help="integer coefficients, one per operation (kind=multi)")
    p.add_argument("--export-matrices", metavar="DIR",
                   help="also write boundary matrices as triplet CSV files")

    p = sub.add_parser("simplicial", parents=[common],
                       help="the shelf complex, its components and homology")

    p = sub.add_parser("enumerate", parents=[common],
                       help="isomorphism classes of shelves of a given size")
    p.add_argument("--size", type=int, required=True)

    p = sub.add_parser("scan", parents=[common],
                       help="conjecture scans (report-only, never assertions)")
    p.add_argument("--which", choices=["growth", "example4", "boolean", "hyperplane"],
                   required=True)
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--omega", type=int, default=1)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("torsion-hunt", parents=[common],
                       help="list iso classes with torsion in low degrees")
    p.add_argument("--size", type=int, required=True)

    return parser


def _need_input(args):
    if not args.input:
        raise errors.ParseError("this command needs --input PATH")
    return load_structure(args.input)


def _need_shelf(args) -> Shelf:
    structure = _need_input(args)
    if isinstance(structure, MultiShelf):
        if len(structure.ops) != 1:
            raise errors.ParseError(
                "this command needs a single-operation document"
            )
        structure = Shelf(structure.ops[0])
    return structure


def _augmented_flag(args, default: bool) -> bool:
    if args.augmented == "on":
        return True
    if args.augmented == "off":
        return False
    return default


def _structure_key(structure) -> list:
    if isinstance(structure, Shelf):
        if structure.size <= 8:
            return list(canonical_form(structure.table).flat)
        return list(structure.table.flat())
    flat = []
    for op in structure.ops:
        flat.extend(op.flat())
    return flat


def cmd_validate(args):
    structure = _need_input(args)
    doc = structure_to_doc(structure)
    payload = {
        "valid": True,
        "kind": "shelf" if isinstance(structure, Shelf) else "multi-shelf",
        "size": doc["size"],
        "operations": len(doc["ops"]),
    }
    if isinstance(structure, Shelf):
        flags = classify(structure)
        payload["flags"] = {
            "spindle": flags.is_spindle,
            "rack": flags.is_rack,
            "left_connected": flags.is_left_connected,
            "invertible": flags.is_invertible,
        }
        payload["orbits"] = left_orbits(structure).count
    return payload


def cmd_orbits(args):
    shelf = _need_shelf(args)
    part = left_orbits(shelf)
    quotient, pi = orbit_quotient(shelf)
    return {
        "size": shelf.size,
        "orbits": part.count,
        "blocks": [list(b) for b in part.blocks],
        "representatives": list(part.representatives),
        "quotient_map": list(pi),
        "quotient": structure_to_doc(quotient),
    }


def _parse_coefficients(text, count):
    try:
        coeffs = tuple(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise errors.ParseError(f"bad coefficient list {text!r}") from exc
    if len(coeffs) != count:
        raise errors.ParseError(
            f"{len(coeffs)} coefficients for {count} operations"
        )
    return coeffs


def cmd_homology(args):
    structure = _need_input(args)
    maxdeg = 3 if args.maxdeg is None else args.maxdeg
    if args.kind == "multi":
        if isinstance(structure, Shelf):
            structure = MultiShelf((structure.table,))
        if not args.coefficients:
            raise errors.ParseError("kind=multi needs --coefficients")
        coeffs = _parse_coefficients(args.coefficients, len(structure.ops))
        augmented = _augmented_flag(args, True)
        cx = build_complex(structure, coeffs, maxdeg + 1, augmented, cap=args.cap)
        groups = homology_groups(cx, maxdeg)
        kind_label = "multi"
    else:
        if args.coefficients:
            raise errors.ParseError(
                "--coefficients only applies to kind=multi"
            )
        shelf = structure
        if isinstance(shelf, MultiShelf):
            if len(shelf.ops) != 1:
                raise errors.ParseError(
                    f"kind={args.kind} needs a single-operation document"
                )
            shelf = Shelf(shelf.ops[0])
        augmented = _augmented_flag(args, args.kind == "shelf")
        if args.kind == "shelf":
            coeffs = (1,)
            cx = build_complex(shelf, coeffs, maxdeg + 1, augmented, cap=args.cap)
        elif args.kind == "rack":
            coeffs = (1, -1)
            ms = MultiShelf((shelf.table, identity_op(shelf.size)))
            cx = build_complex(ms, coeffs, maxdeg + 1, augmented, cap=args.cap)
        else:
            coeffs = (1, -1)
            cx = quandle_quotient_complex(
                shelf, coeffs, maxdeg + 1, augmented, cap=args.cap
            )
        groups = homology_groups(cx, maxdeg)
        kind_label = args.kind
        structure = shelf
    if args.export_matrices:
        os.makedirs(args.export_matrices, exist_ok=True)
        for d in range(cx.maxdeg + 1):
            path = os.path.join(args.export_matrices, f"d{d}.csv")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(cx.boundary(d).to_csv_text())
    return {
        "shelf": _structure_key(structure),
        "kind": kind_label,
        "coefficients": list(coeffs),
        "augmented": augmented,
        "groups": [
            {"degree": g.degree, "rank": g.rank, "torsion": list(g.torsion)}
            for g in groups
        ],
    }


def cmd_simplicial(args):
    shelf = _need_shelf(args)
    maxdim = (shelf.size - 1) if args.maxdeg is None else args.maxdeg
    cx = build_shelf_complex(shelf, maxdim)
    count, labels = components(cx)
    if cx.maxdim >= shelf.size - 1:
        top = cx.maxdim
    else:
        top = cx.maxdim - 1
    groups = [simplicial_homology(cx, d) for d in range(top + 1)]
    return {
        "size": shelf.size,
        "maxdim": cx.maxdim,
        "simplex_counts": [cx.count(d) for d in range(cx.maxdim + 1)],
        "maximal_simplices": [list(s) for s in cx.maximal_simplices()],
        "components": count,
        "component_labels": list(labels),
        "groups": [
            {"degree": g.degree, "rank": g.rank, "torsion": list(g.torsion)}
            for g in groups
        ],
    }


def cmd_enumerate(args):
    keys = enumerate_shelves(args.size)
    classes = []
    for key in keys:
        shelf = Shelf(key.table())
        flags = classify(shelf)
        classes.append({
            "key": list(key.flat),
            "table": [list(row) for row in key.table().entries],
            "orbits": left_orbits(shelf).count,
            "flags": {
                "spindle": flags.is_spindle,
                "rack": flags.is_rack,
                "left_connected": flags.is_left_connected,
                "invertible": flags.is_invertible,
            },
        })
    return {"size": args.size, "count": len(classes), "classes": classes}


def cmd_scan(args):
    maxdeg = args.maxdeg
    if args.which == "growth":
        report = scan_growth(args.size, 4 if maxdeg is None else maxdeg,
                             jobs=args.jobs)
    elif args.which == "example4":
        report = scan_example4(args.size, 3 if maxdeg is None else maxdeg,
                               jobs=args.jobs)
    elif args.which == "boolean":
        report = scan_boolean(
            args.omega, radius=args.radius,
            maxdeg=3 if maxdeg is None else maxdeg,
            augmented=_augmented_flag(args, True), jobs=args.jobs,
        )
    else:
        structure = _need_input(args)
        if isinstance(structure, Shelf):
            structure = MultiShelf((structure.table,))
        report = scan_hyperplane(
            structure, samples=args.samples, bound=args.bound,
            maxdeg=2 if maxdeg is None else maxdeg, seed=args.seed,
            augmented=_augmented_flag(args, True), jobs=args.jobs,
        )
    return report.to_doc()


def cmd_torsion_hunt(args):
    report = torsion_hunt(
        args.size, 1 if args.maxdeg is None else args.maxdeg, jobs=args.jobs
    )
    return report.to_doc()


COMMANDS = {
    "validate": cmd_validate,
    "orbits": cmd_orbits,
    "homology": cmd_homology,
    "simplicial": cmd_simplicial,
    "enumerate": cmd_enumerate,
    "scan": cmd_scan,
    "torsion-hunt": cmd_torsion_hunt,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = COMMANDS[args.command](args)
    except INPUT_ERRORS as exc:
        _print_error(exc)
        return 2
    except CAP_ERRORS as exc:
        _print_error(exc)
        return 3
    except (errors.DDNotZero, AssertionError) as exc:
        _print_error(exc)
        return 4
    report = finish_report(
        {"command": args.command, **payload}, no_timestamp=args.no_timestamp
    )
    text = dump_report(report, args.output)
    if not args.output:
        sys.stdout.write(text)
    return 0


def _print_error(exc):
    sys.stderr.write(json.dumps(
        {"error": type(exc).__name__, "message": str(exc)}
    ) + "\n")


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Subcommands: verify, chi, example, enumerate, bounds.  Exit status reflects
the worst outcome of the invocation: 0 all requested checks passed, 1 a check
failed or a finding was produced, 2 usage or input error, 3 resource limit.

Input documents use the schema {"dim": <int>, "fixed_points": [{"weights":
[<int>...]}...]}; all output is deterministic (stable field order, stable
datum order) so invocations can be diffed and golden-filed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .enumeration import (
    EnumerationQuery,
    ResourceLimitError,
    bound_table,
    enumerate_admissible,
    open_question_violators,
)
from .fpdata import (
    DataError,
    datum_from_document,
    disjoint_union,
    gen_cpn,
    gen_s2,
    gen_s6,
    n_vector,
    product,
    to_document,
)
from .verify import NotConstantError, chi_vector, run_all_checks

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class _UsageError(Exception):
    """Input problem attributable to the caller; maps to exit 2."""


def _fail_usage(message: str) -> None:
    raise _UsageError(message)


def _load_datum(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as err:
        _fail_usage(f"cannot read {path}: {err}")
    except json.JSONDecodeError as err:
        _fail_usage(f"{path}: invalid JSON at line {err.lineno} column {err.colno}: {err.msg}")
    try:
        return datum_from_document(doc)
    except DataError as err:
        _fail_usage(f"{path}: {type(err).__name__}: {err}")


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    datum = _load_datum(args.file)
    reports = run_all_checks(datum, strict_pairing=args.strict_pairing)
    if args.format == "json":
        _emit(json.dumps([r.to_json_dict() for r in reports], indent=2))
    else:
        for r in reports:
            line = f"[{r.status().upper():4}] {r.check_name}"
            if r.witness is not None and (not r.passed or r.skipped):
                line += f"  {json.dumps(r.witness, sort_keys=True)}"
            _emit(line)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FINDING


# -- chi ----------------------------------------------------------------------


def cmd_chi(args) -> int:
    datum = _load_datum(args.file)
    if not datum.points:
        _fail_usage(f"{args.file}: datum has no fixed points")
    nvec = n_vector(datum)
    try:
        chi = chi_vector(datum)
    except NotConstantError as err:
        witness = {
            "error": "NotConstant",
            "index": err.index,
            "residual": str(err.residual),
        }
        _emit(json.dumps(witness, indent=2))
        return EXIT_FINDING
    if args.format == "json":
        _emit(
            json.dumps(
                {"dim": datum.dim, "chi": list(chi), "n_vector": list(nvec)},
                indent=2,
            )
        )
    else:
        _emit(",".join(str(c) for c in chi))
        _emit(",".join(str(c) for c in nvec))
    return EXIT_OK


# -- example ------------------------------------------------------------------


def _parse_exps(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        _fail_usage(f"--exps expects comma-separated integers, got {text!r}")


def cmd_example(args) -> int:
    try:
        if args.family == "s2":
            datum = gen_s2(args.w)
        elif args.family == "s6":
            datum = gen_s6(args.a, args.b)
        elif args.family == "cpn":
            if args.exps is None:
                _fail_usage("example cpn requires --exps")
            datum = gen_cpn(_parse_exps(args.exps))
        else:  # product | union
            if args.files is None or len(args.files) < 2:
                _fail_usage(f"example {args.family} requires --files A.json B.json [...]")
            data = [_load_datum(path) for path in args.files]
            combine = product if args.family == "product" else disjoint_union
            datum = data[0]
            for other in data[1:]:
                datum = combine(datum, other)
    except (DataError, ValueError) as err:
        _fail_usage(f"invalid parameters: {type(err).__name__}: {err}")
    _emit(json.dumps(to_document(datum), indent=2))
    return EXIT_OK


# -- enumerate ----------------------------------------------------------------


def _enumeration_csv(report, bound_flags) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(
        [
            "dim",
            "points",
            "weight_types",
            "n_vector",
            "chi",
            "rigidity",
            "weight_pairing",
            "smallest_weight_pairing",
            "crowded",
            "middle_range",
            "point_bound",
        ]
    )
    selected = set(report.query.checks)
    for diag, meets_bound in zip(report.diagnostics, bound_flags):
        chi = diag["chi"]
        writer.writerow(
            [
                diag["datum"]["dim"],
                len(diag["datum"]["fixed_points"]),
                ";".join(str(t) for t in diag["weight_types"]),
                ";".join(str(c) for c in diag["n_vector"]),
                ";".join(str(c) for c in chi) if chi is not None else "",
                int("rigidity" in selected),
                int("weight_pairing" in selected),
                int("smallest_weight_pairing" in selected),
                int(diag["crowded"]),
                int(diag["middle_range"]),
                int(meets_bound),
            ]
        )
    return out.getvalue()


def cmd_enumerate(args) -> int:
    try:
        query = EnumerationQuery(
            half_dim=args.n,
            point_count=args.points,
            max_weight=args.max_weight,
            effective_only=args.effective,
            dedup_sign_flip=args.dedup_flip,
            worker_count=args.jobs,
        )
    except ValueError as err:
        _fail_usage(str(err))
    try:
        report = enumerate_admissible(query)
    except ResourceLimitError as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE

    bound_flags = [diag["meets_point_bound"] for diag in report.diagnostics]
    bound_violations = [
        diag["datum"] for diag, ok in zip(report.diagnostics, bound_flags) if not ok
    ]
    violators = open_question_violators(report.admissible) if args.experiments else []

    if args.format == "json":
        doc = report.to_json_dict()
        doc["findings"] = {"point_bound_violations": bound_violations}
        if args.experiments:
            doc["findings"]["open_question_violators"] = violators
        _emit(json.dumps(doc, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_enumeration_csv(report, bound_flags))
    else:
        c = report.counters
        _emit(
            f"candidate space {c['candidate_space']} over "
            f"{c['point_alphabet']} points; admissible {c['admissible']}"
        )
        for key, count in c["pruned"].items():
            _emit(f"  pruned by {key}: {count}")
        if c["sign_flip_removed"]:
            _emit(f"  sign-flip duplicates removed: {c['sign_flip_removed']}")
        for d in report.admissible:
            _emit("  " + " | ".join(str(list(p.weights)) for p in d.points))
        for doc in bound_violations:
            _emit(f"finding: below point-count bound: {doc}")
        for v in violators:
            _emit(f"finding: open-question violator: {json.dumps(v)}")

    return EXIT_FINDING if bound_violations or violators else EXIT_OK


# -- bounds -------------------------------------------------------------------


def cmd_bounds(args) -> int:
    if args.max_dim < 2 or args.max_dim % 2:
        _fail_usage(f"--max-dim must be an even integer >= 2, got {args.max_dim}")
    rows = bound_table(args.max_dim // 2)
    if args.format == "json":
        _emit(json.dumps(rows, indent=2))
    else:
        for row in rows:
            _emit(f"{row['dim']}, {row['kosniowski_bound']}, {row['known_minimum']}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlefp",
        description="Verify, generate, and enumerate fixed point data of circle actions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run every check on a datum document")
    p.add_argument("file", help="path to a datum JSON document")
    p.add_argument("--strict-pairing", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chi", help="print the chi-vector and N-vector of a datum")
    p.add_argument("file", help="path to a datum JSON document")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("example", help="emit a generator-family datum as JSON")
    p.add_argument("family", choices=("s2", "s6", "cpn", "product", "union"))
    p.add_argument("--w", type=int, default=1, help="rotation speed for s2")
    p.add_argument("--a", type=int, default=1, help="first s6 parameter")
    p.add_argument("--b", type=int, default=1, help="second s6 parameter")
    p.add_argument("--exps", help="comma-separated exponents for cpn, e.g. 0,1,3")
    p.add_argument("--files", nargs="+", help="input documents for product/union")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("enumerate", help="search for admissible data")
    p.add_argument("--n", type=int, required=True, help="half-dimension")
    p.add_argument("--points", type=int, required=True, help="number of fixed points")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--effective", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--dedup-flip", action="store_true")
    p.add_argument("--jobs", type=int, default=None, help="worker count (default: all cores)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument(
        "--experiments",
        action="store_true",
        help="also evaluate the open-question checks on every admissible datum",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bounds", help="print the fixed-point lower bound table")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

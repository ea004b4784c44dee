"""Command-line surface: construct / verify / search / table / suspend / insert.

Exit codes: 0 success, 1 validation or degree failure, 2 usage error.
Commands that produce a document write it to --out when given; otherwise
the document goes to stdout and the human-readable summary to stderr, so
output stays pipeable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import is_sphere
from .constructions import (
    construct,
    insertion_step,
    one_point_suspension,
    vertex_bound,
)
from .degree import degree
from .documents import load_certificate, parse_with_metadata, serialize
from .errors import SpheremapError
from .search import lambda_search, lambda_table


def _facet_arg(text: str) -> tuple:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated vertex ids, got {text!r}"
        ) from None
    if len(parts) < 2:
        raise argparse.ArgumentTypeError("a facet needs at least 2 vertices")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spheremap",
        description="Build, verify, and search labeled sphere triangulations "
        "with prescribed map degree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a degree-d n-sphere certificate")
    p.add_argument("--n", type=int, required=True, help="sphere dimension")
    p.add_argument("--d", type=int, required=True, help="target degree")
    p.add_argument("--out", help="write the certificate document here")

    p = sub.add_parser("verify", help="re-validate a document end to end")
    p.add_argument("file", help="document to verify")

    p = sub.add_parser("search", help="exhaustive minimal vertex count search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the witness document here")

    p = sub.add_parser("table", help="tabulate minimal vertex counts")
    p.add_argument("--spec", required=True, help='JSON file: {"rows": [{"n":..,"d":..,"v_max":..}]}')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSON table here (default: stdout)")

    p = sub.add_parser("suspend", help="one-point suspension of a document")
    p.add_argument("file")
    p.add_argument("--pivot", type=int, help="pivot vertex (default: smallest id)")
    p.add_argument("--out", help="write the result document here")

    p = sub.add_parser("insert", help="apply one insertion step to a document")
    p.add_argument("file")
    p.add_argument("--facet", type=_facet_arg, required=True,
                   help="comma-separated vertex ids, e.g. 1,2,3")
    p.add_argument("--out", help="write the result document here")
    return parser


def _emit_document(text: str, out: str | None) -> None:
    """Document to --out (summary then goes to stdout) or to stdout
    (summary to stderr)."""
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary(lines, to_stderr: bool) -> None:
    stream = sys.stderr if to_stderr else sys.stdout
    for line in lines:
        print(line, file=stream)


def _cmd_construct(args) -> int:
    cert = construct(args.n, args.d)
    bound = vertex_bound(args.n, args.d)
    text = serialize(cert)
    _emit_document(text, args.out)
    lines = [
        f"vertices: {cert.vertex_count}",
        f"degree: {cert.claimed_degree}",
        f"vertex bound ((n+2)/n*|d| + 2n+2): {bound}",
        f"bound met: {'yes' if cert.vertex_count <= bound else 'no'}",
    ]
    if args.out:
        lines.append(f"wrote: {args.out}")
    _summary(lines, to_stderr=not args.out)
    return 0


def _cmd_verify(args) -> int:
    with open(args.file) as fh:
        text = fh.read()
    ls, metadata = parse_with_metadata(text)
    rep = degree(ls)
    verdict = is_sphere(ls.complex)
    print(f"dimension: {ls.dimension}")
    print(f"vertices: {len(ls.oriented.vertices)}")
    print(f"facets: {len(ls.complex.facets)}")
    print(f"sphere checks ({verdict.status.value}):")
    for name, ok in verdict.checks:
        print(f"  {name}: {'pass' if ok else 'FAIL'}")
    print("per-target signed preimage sums:")
    for color in sorted(rep.per_target_sums):
        entries = rep.per_target_facet[color]
        print(
            f"  omitting color {color}: sum {rep.per_target_sums[color]:+d} "
            f"over {len(entries)} preimage facet(s)"
        )
    print(f"consistent: {rep.consistent}")
    print(f"degree: {rep.degree}")
    claimed = metadata.get("claimed_degree")
    if claimed is not None:
        print(f"claimed degree: {claimed} (matches)")
    print("PASS")
    return 0


def _cmd_search(args) -> int:
    result = lambda_search(args.n, args.d, args.max_vertices, jobs=args.jobs)
    print(f"n: {result.n}")
    print(f"d: {result.d}")
    print(f"max vertices: {result.v_max}")
    print(f"triangulations examined: {result.triangulations_examined}")
    print(f"partial colorings examined: {result.labelings_examined}")
    if result.found:
        print(f"lambda: {result.lambda_value}")
        text = serialize(result.witness)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
            print(f"witness written to: {args.out}")
        else:
            print("witness document:")
            sys.stdout.write(text)
    else:
        print("lambda: NotFoundWithinBudget")
    return 0


def _cmd_table(args) -> int:
    with open(args.spec) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as e:
            raise SpheremapError(f"table spec is not valid JSON: {e}") from None
    rows = spec.get("rows") if isinstance(spec, dict) else None
    if not isinstance(rows, list):
        raise SpheremapError('table spec must be {"rows": [{"n":..,"d":..}, ...]}')
    table = lambda_table(rows, jobs=args.jobs)

    header = f"{'n':>3} {'d':>4} {'lambda':>7} {'status':<24} {'l/|d|':>7} {'l/n':>7}  note"
    print(header)
    print("-" * len(header))
    for row in table.rows:
        lam = "-" if row.lambda_value is None else str(row.lambda_value)
        rd = "-" if row.ratio_over_d is None else str(row.ratio_over_d)
        rn = "-" if row.ratio_over_n is None else str(row.ratio_over_n)
        print(
            f"{row.n:>3} {row.d:>4} {lam:>7} {row.status:<24} {rd:>7} {rn:>7}  {row.note}"
        )
    print("(ratios are finite-sample values from the rows above, not limits)")

    payload = {
        "rows": [
            {
                "n": row.n,
                "d": row.d,
                "lambda": row.lambda_value,
                "status": row.status,
                "note": row.note,
                "ratio_lambda_over_abs_d": None
                if row.ratio_over_d is None
                else str(row.ratio_over_d),
                "ratio_lambda_over_n": None
                if row.ratio_over_n is None
                else str(row.ratio_over_n),
            }
            for row in table.rows
        ]
    }
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"json written to: {args.out}")
    else:
        print()
        sys.stdout.write(text)
    return 0


def _cmd_suspend(args) -> int:
    with open(args.file) as fh:
        cert = load_certificate(fh.read())
    new = one_point_suspension(cert, args.pivot)
    _emit_document(serialize(new), args.out)
    _summary(
        [
            f"dimension: {new.dimension}",
            f"vertices: {new.vertex_count}",
            f"degree: {new.claimed_degree}",
        ]
        + ([f"wrote: {args.out}"] if args.out else []),
        to_stderr=not args.out,
    )
    return 0


def _cmd_insert(args) -> int:
    with open(args.file) as fh:
        cert = load_certificate(fh.read())
    new = insertion_step(cert, args.facet)
    _emit_document(serialize(new), args.out)
    _summary(
        [
            f"dimension: {new.dimension}",
            f"vertices: {new.vertex_count}",
            f"degree: {new.claimed_degree}",
        ]
        + ([f"wrote: {args.out}"] if args.out else []),
        to_stderr=not args.out,
    )
    return 0


_COMMANDS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "table": _cmd_table,
    "suspend": _cmd_suspend,
    "insert": _cmd_insert,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SpheremapError as e:
        print(f"FAIL: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"FAIL: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 all checks passed, 1 a check failed, 2 bad input,
3 internal invariant violated.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .chain_complex import ClosedOnly, KhovanovComplex
from .diagram import DiagramError, TangleDiagram, parse_diagram
from .homology import NotAComplex, homology
from .states import enhanced_states
from .verify import METHODS, FileRecord, RunReport, bracket, check_diagram

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def load(path: str, max_crossings: int) -> TangleDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        d = parse_diagram(text)
    except DiagramError as e:
        raise InputError(f"{path}: {e}") from None
    if d.n_crossings > max_crossings:
        raise InputError(
            f"{path}: {d.n_crossings} crossings exceeds --max-crossings {max_crossings}"
        )
    return d


def _markers_str(markers) -> str:
    return "".join("+" if m > 0 else "-" for m in markers)


def cmd_bracket(args, out) -> int:
    d = load(args.file, args.max_crossings)
    try:
        value = bracket(d, args.method)
    except ClosedOnly as e:
        raise InputError(f"{args.file}: {e}") from None
    if args.json:
        print(json.dumps({"method": args.method, "bracket": str(value), "terms": value.to_json()}), file=out)
    else:
        print(value, file=out)
        print(json.dumps(value.to_json()), file=out)
    return EXIT_OK


def cmd_states(args, out) -> int:
    d = load(args.file, args.max_crossings)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["markers", "components", "sigma", "tau2", "p2", "q"])
    for s in enhanced_states(d):
        w.writerow([
            _markers_str(s.markers), len(s.state.components), s.sigma, s.tau.twice, s.p.twice, s.q,
        ])
    return EXIT_OK


def cmd_complex(args, out) -> int:
    d = load(args.file, args.max_crossings)
    cx = KhovanovComplex(d)
    w = csv.writer(out, lineterminator="\n")
    if args.matrices:
        w.writerow(["p2", "q", "row", "col", "value"])
        for (p, q) in cx.groups:
            for r, c, v in cx.matrix(p, q).triples():
                w.writerow([p.twice, q, r, c, v])
    else:
        w.writerow(["p2", "q", "rank"])
        for (p, q), g in cx.groups.items():
            w.writerow([p.twice, q, g.rank])
    return EXIT_OK


def cmd_homology(args, out) -> int:
    d = load(args.file, args.max_crossings)
    print(json.dumps(homology(d).to_json()), file=out)
    return EXIT_OK


def _check_file(path: str, max_crossings: int):
    d = load(path, max_crossings)
    rec, h = check_diagram(d, Path(path).name)
    return rec, h


def cmd_verify(args, out) -> int:
    report = RunReport()
    tables = []
    paths = list(args.files)
    jobs = max(1, args.jobs)
    results = []
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            futures = [pool.submit(_safe_check, p, args.max_crossings) for p in paths]
            results = [f.result() for f in futures]
    else:
        results = [_safe_check(p, args.max_crossings) for p in paths]

    status = EXIT_OK
    for path, (rec, h, err, code) in zip(paths, results):
        if err is not None:
            rec = FileRecord(Path(path).name, 0, False, error=err)
            status = max(status, code)
        report.records.append(rec)
        tables.append((Path(path).name, h))
    if args.compare:
        base_name, base = tables[0]
        for name, h in tables[1:]:
            report.comparisons.append({"a": base_name, "b": name, "equal": base is not None and base == h})

    if args.json:
        print(json.dumps(report.to_json(with_time=not args.no_time), indent=2), file=out)
    else:
        print(report.render(), file=out)
    if status:
        return status
    return EXIT_OK if report.ok else EXIT_FAIL


def _safe_check(path: str, max_crossings: int):
    try:
        rec, h = _check_file(path, max_crossings)
        return rec, h, None, EXIT_OK
    except InputError as e:
        return None, None, str(e), EXIT_INPUT
    except NotAComplex as e:
        return None, None, str(e), EXIT_INTERNAL


def cmd_compare(args, out) -> int:
    d1 = load(args.file1, args.max_crossings)
    d2 = load(args.file2, args.max_crossings)
    h1, h2 = homology(d1), homology(d2)
    equal = h1 == h2
    if args.json:
        print(json.dumps({"equal": equal, "a": h1.to_json(), "b": h2.to_json()}), file=out)
    else:
        print("equal" if equal else "different", file=out)
    return EXIT_OK if equal else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framedkh",
        description="Framed Khovanov homology of the Kauffman bracket for .tang diagrams.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--max-crossings", type=int, default=12, metavar="N")
    # repeated on every subcommand; SUPPRESS keeps a flag given before the
    # subcommand from being reset by the subparser default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--max-crossings", type=int, default=argparse.SUPPRESS, metavar="N")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", parents=[common], help="Kauffman bracket")
    p.add_argument("--method", choices=sorted(METHODS), default="statesum")
    p.add_argument("file")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("states", parents=[common], help="enhanced-state table as CSV")
    p.add_argument("file")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("complex", parents=[common], help="chain-group ranks or matrices as CSV")
    p.add_argument("--matrices", action="store_true", help="emit (row, col, value) triples")
    p.add_argument("file")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("homology", parents=[common], help="bigraded homology as JSON")
    p.add_argument("file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", parents=[common], help="run every check on each file")
    p.add_argument("--compare", action="store_true", help="compare homology of all files with the first")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-time", action="store_true", help="omit wall times from JSON")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", parents=[common], help="compare homology of two diagrams")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except NotAComplex as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

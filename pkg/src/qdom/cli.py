"""Command-line front end.

Exit codes: 0 every check passed, 1 a counterexample was found, 2 some check
was inconclusive, 64 usage error.  Reports are JSON lines with sorted keys so
identical runs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence, TextIO

from .domination import closed_form_gamma, domination_number, NOT_COVERED
from .enumeration import (
    KINDS as UNIVERSE_KINDS,
    MeasurementCache,
    UniverseSpec,
    explore_conjecture,
    extremal_search,
    known_theorems,
    verify_theorem,
)
from .errors import QdomError
from .families import FamilySpec, make
from .graph import Graph, from_dot, from_graph6, profile, to_dot, to_graph6
from .perturbations import VerificationReport
from .spectra import DEFAULT_TOL, Status, q_spectrum

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

DEFAULT_MARGIN = 1e-8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


def parse_n_range(text: str) -> list[int]:
    """'8' -> [8]; '6..10' -> [6..10]; '5,7,9' -> [5,7,9]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
            if a > b:
                raise UsageError(f"empty range {text!r}")
            return list(range(a, b + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --n value {text!r}") from exc


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _status_code(status: Status) -> int:
    return {Status.PASS: EXIT_OK, Status.FAIL: EXIT_COUNTEREXAMPLE, Status.INCONCLUSIVE: EXIT_INCONCLUSIVE}[status]


def _measurement(g: Graph, tol: float) -> dict:
    dom = domination_number(g)
    spec = q_spectrum(g, tol)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "profile": profile(g).to_json(),
        "gamma": dom.to_json(),
        "q_min": spec.to_json()["q_min"],
        "residual": spec.to_json()["residual"],
        "simple": spec.simple,
    }


def _emit_graph(out: TextIO, g: Graph, record: dict, fmt: str, labels=None) -> None:
    if fmt == "json":
        out.write(_dumps(record) + "\n")
    elif fmt == "graph6":
        out.write(to_graph6(g) + "\n")
    elif fmt == "dot":
        out.write(to_dot(g, labels))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([record["graph6"], record["n"], record["m"], record["gamma"]["gamma"], record["q_min"], record["profile"]["girth"]])
        out.write(buf.getvalue())


def _cmd_family(args, out: TextIO) -> int:
    spec = FamilySpec.from_json(args.spec)
    g, labels = make(spec)
    record = _measurement(g, args.tol)
    record["family"] = json.loads(spec.to_json())
    record["labels"] = labels.as_dict()
    closed = closed_form_gamma(spec)
    record["closed_form_gamma"] = None if closed is NOT_COVERED else closed
    names = {idx: name for name, idx in labels.as_dict().items()}
    _emit_graph(out, g, record, args.format, names)
    if record["closed_form_gamma"] is not None and record["closed_form_gamma"] != record["gamma"]["gamma"]:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _read_graphs(args, stdin: TextIO) -> list[str]:
    items = list(args.graph6) if getattr(args, "graph6", None) else [line.strip() for line in stdin]
    return [s for s in items if s]


def _cmd_measure(args, out: TextIO, stdin: TextIO) -> int:
    lines = _read_graphs(args, stdin)
    if not lines:
        raise UsageError("measure needs graph6 strings as arguments or on stdin")
    for text in lines:
        g = from_graph6(text)
        _emit_graph(out, g, _measurement(g, args.tol), args.format)
    return EXIT_OK


def _write_report(out: TextIO, report: VerificationReport, fmt: str) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["lemma", "status", "graph6", "gamma", "q_min", "params"])
        for r in report.records:
            w.writerow([r.lemma, r.status.value, r.graph6, _dumps(r.gamma), _dumps(r.q_min), _dumps(r.params)])
        return
    if fmt == "graph6":
        for r in report.counterexamples:
            if r.graph6:
                out.write(r.graph6 + "\n")
        return
    for r in report.records:
        out.write(_dumps(r.to_json()) + "\n")
    out.write(_dumps({"summary": report.summary()}) + "\n")


def _cache(args) -> MeasurementCache:
    return MeasurementCache(args.cache, args.tol)


def _cmd_verify(args, out: TextIO) -> int:
    n_range = parse_n_range(args.n) if args.n else None
    options = {"cache": _cache(args), "workers": args.workers, "margin": args.margin}
    report = verify_theorem(args.theorem, n_range, **options)
    _write_report(out, report, args.format)
    return _status_code(report.status)


def _cmd_search(args, out: TextIO) -> int:
    code = EXIT_OK
    for n in parse_n_range(args.n):
        spec = UniverseSpec(
            args.kind,
            n,
            girth=args.girth,
            max_girth=args.max_girth,
            max_odd_girth=args.max_odd_girth,
            gamma=args.gamma,
            gamma_in_band=args.band,
        )
        res = extremal_search(spec, args.margin, _cache(args), args.workers)
        if args.format == "graph6":
            for g in res.minimizers:
                out.write(to_graph6(g) + "\n")
        else:
            out.write(_dumps({"universe": spec.to_json(), **res.to_json()}) + "\n")
        if not res.unique:
            code = max(code, EXIT_INCONCLUSIVE)
    return code


def _cmd_conjecture(args, out: TextIO) -> int:
    n_range = parse_n_range(args.n) if args.n else None
    report = explore_conjecture(n_range, args.unicyclic, args.margin, _cache(args), args.workers)
    _write_report(out, report, args.format)
    return _status_code(report.status)


def _cmd_convert(args, out: TextIO, stdin: TextIO) -> int:
    text = args.input if args.input is not None else stdin.read()
    stripped = text.strip()
    if not stripped:
        raise UsageError("convert needs a graph6 string or a DOT graph")
    if args.to == "graph6" or stripped.lstrip().startswith(("graph", "strict", "digraph")):
        g = from_dot(stripped)
        out.write(to_graph6(g) + "\n")
    else:
        for line in stripped.splitlines():
            if line.strip():
                out.write(to_dot(from_graph6(line.strip())))
    return EXIT_OK


def _cmd_list(args, out: TextIO) -> int:
    for name in known_theorems():
        out.write(name + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigen residual tolerance (default 1e-10)")
    common.add_argument("--margin", type=float, default=DEFAULT_MARGIN, help="strict-inequality / uniqueness margin (default 1e-8)")
    common.add_argument("--workers", type=int, default=1, help="worker processes for measurement sweeps")
    common.add_argument("--cache", default=None, help="JSON-lines measurement cache (resumable)")
    common.add_argument("--format", choices=("json", "csv", "dot", "graph6"), default="json")

    parser = _Parser(prog="qdom", description="Signless Laplacian q_min versus domination number toolkit.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("family", parents=[common], help="build a named family member and measure it")
    p.add_argument("spec", help='JSON such as {"kind":"ScriptH3","params":{"n":4,"alpha":1}}')

    p = sub.add_parser("measure", parents=[common], help="measure graph6 inputs (arguments or stdin)")
    p.add_argument("graph6", nargs="*")

    p = sub.add_parser("verify", parents=[common], help="run a theorem or lemma sweep")
    p.add_argument("theorem", help="identifier, see `qdom list`")
    p.add_argument("--n", default=None, help="orders, e.g. 8, 6..10 or 5,7,9")

    p = sub.add_parser("search", parents=[common], help="least q_min over a graph universe")
    p.add_argument("--kind", choices=UNIVERSE_KINDS, default="ConnectedNonbipartite")
    p.add_argument("--n", required=True)
    p.add_argument("--girth", type=int)
    p.add_argument("--max-girth", type=int)
    p.add_argument("--max-odd-girth", type=int)
    p.add_argument("--gamma", type=int)
    p.add_argument("--band", action="store_true", help="keep only (n+1)/3 < γ <= n/2")

    p = sub.add_parser("conjecture", parents=[common], help="compare every graph against the 𝓗_{3,α} candidate")
    p.add_argument("--n", default=None)
    p.add_argument("--unicyclic", action="store_true")

    p = sub.add_parser("convert", parents=[common], help="graph6 <-> DOT")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--to", choices=("dot", "graph6"), default="dot")

    sub.add_parser("list", parents=[common], help="list verifiable theorem identifiers")
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stdin: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    inp = stdin or sys.stdin
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if not args.tol < args.margin:
            raise UsageError("--tol must be smaller than --margin")
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        if args.command == "family":
            return _cmd_family(args, out)
        if args.command == "measure":
            return _cmd_measure(args, out, inp)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "search":
            return _cmd_search(args, out)
        if args.command == "conjecture":
            return _cmd_conjecture(args, out)
        if args.command == "convert":
            return _cmd_convert(args, out, inp)
        return _cmd_list(args, out)
    except UsageError as exc:
        err.write(f"qdom: {exc}\n")
        return EXIT_USAGE
    except QdomError as exc:
        err.write(f"qdom: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        err.write(f"qdom: invalid JSON: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line entry point.

Exit codes: 0 yes / success, 1 no, 2 undecided or guard exceeded, 64 usage
error, 65 malformed input, 66 unreadable input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import detectors
from .artemis import artemis_color
from .gadgets import REDUCTIONS, build_pi_instance, parse_dimacs, reduce_pi
from .graph import Graph, parse_edgelist, parse_graph6, serialize_graph6
from .oracles import GuardExceeded
from .recognizers import CENSUS_CLASSES, EXTRA_CLASSES, RECOGNIZERS, census, recognize

EX_USAGE, EX_DATAERR, EX_NOINPUT = 64, 65, 66

DETECTORS = {
    "min-long-hole": detectors.detect_min_long_hole,
    "prism-or-pyramid": detectors.detect_prism_or_pyramid,
    "long-prism": detectors.detect_long_prism,
    "even-prism": detectors.detect_even_prism,
    "odd-prism": detectors.detect_odd_prism,
    "lgs-ntk4": detectors.detect_lgs_ntk4,
    "lgsb-k4": detectors.detect_lgsb_k4,
}
# prism detection alone is NP-complete; "prism" runs the prism-or-pyramid search
ALIASES = {"prism": "prism-or-pyramid", "hole": "min-long-hole"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str, fmt: str | None) -> tuple[Graph, bytes]:
    data = _read_bytes(path)
    if fmt is None:
        fmt = "edgelist" if path.endswith((".txt", ".edges", ".el")) else "g6"
    if fmt == "g6":
        lines = [ln for ln in data.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ValueError(f"expected one graph6 record, found {len(lines)}")
        return parse_graph6(lines[0]), data
    return parse_edgelist(data.decode()), data


def _input_info(g: Graph, data: bytes) -> dict:
    return {"sha256": hashlib.sha256(data).hexdigest(), "n": g.n, "m": g.m}


def _emit(report: dict, args, started: float) -> None:
    if args.timing:
        report["seconds"] = round(time.perf_counter() - started, 6)
    print(json.dumps(report, sort_keys=True))


def _say(args, text: str) -> None:
    if args.verbose:
        print(text, file=sys.stderr)


# -- commands ---------------------------------------------------------------------

def cmd_recognize(args) -> int:
    started = time.perf_counter()
    g, data = load_graph(args.input, args.format)
    verdict = recognize(args.cls, g, guard=args.guard)
    _emit({"command": "recognize", "input": _input_info(g, data), "result": verdict.to_dict(),
           "assumed_preconditions": []}, args, started)
    _say(args, f"{args.cls}: {verdict.status}"
         + (f" ({verdict.witness.kind} on {list(verdict.witness.vertices)})" if verdict.witness else ""))
    return {True: 0, False: 1, None: 2}[verdict.member]


def cmd_color(args) -> int:
    started = time.perf_counter()
    g, data = load_graph(args.input, args.format)
    res = artemis_color(g, verify_pairs=not args.no_verify, guard=args.guard)
    payload = res.to_dict()
    payload["palette"] = res.palette
    _emit({"command": "color", "input": _input_info(g, data), "result": payload,
           "assumed_preconditions": ["artemis"]}, args, started)
    _say(args, f"{res.palette} colors, clique {res.clique}, "
         + ("certified optimal" if res.optimal_certified else "not certified"))
    return 0 if res.optimal_certified else 1


def cmd_detect(args) -> int:
    started = time.perf_counter()
    kind = ALIASES.get(args.kind, args.kind)
    g, data = load_graph(args.input, args.format)
    det = DETECTORS[kind](g)
    _emit({"command": "detect", "kind": kind, "input": _input_info(g, data),
           "result": det.to_dict(), "assumed_preconditions": list(det.assumed_preconditions)},
          args, started)
    _say(args, f"{kind}: " + (f"found {det.witness.vertices}" if det else "absent"))
    return 0 if det else 1


def cmd_census(args) -> int:
    started = time.perf_counter()
    classes = args.classes or list(CENSUS_CLASSES)
    table = census(args.n, classes=classes, n_min=args.n_min, workers=args.workers)
    if args.json:
        _emit({"command": "census", "result": table.to_dict(), "assumed_preconditions": []},
              args, started)
    else:
        sys.stdout.write(table.to_csv())
    if args.figure:
        from .report import census_figure
        census_figure(table, args.figure)
        _say(args, f"figure written to {args.figure}")
    return 0


def cmd_smoke(args) -> int:
    from .report import complexity_smoke, smoke_figure
    rows = complexity_smoke(args.sizes, seed=args.seed)
    if args.json:
        print(json.dumps({"command": "smoke", "result": rows}, sort_keys=True))
    else:
        print("n,m,seconds,ratio,growth,certified")
        for r in rows:
            print(f"{r['n']},{r['m']},{r['seconds']:.6f},{r['ratio']:.3e},{r['growth']:.3f},"
                  f"{int(r['certified'])}")
    if args.figure:
        smoke_figure(rows, args.figure)
    return 0


def cmd_gadget(args) -> int:
    try:
        formula = parse_dimacs(_read_bytes(args.cnf).decode())
    except ValueError as exc:
        raise ValueError(f"{args.cnf}: {exc}") from None
    inst = build_pi_instance(formula)
    if args.action == "pi":
        graph, sidecar = inst.graph, inst.sidecar()
    else:
        red = reduce_pi(args.kind, inst)
        graph, sidecar = red.graph, red.sidecar()
    g6 = serialize_graph6(graph).decode()
    if args.out:
        with open(args.out + ".g6", "w") as fh:
            fh.write(g6 + "\n")
        with open(args.out + ".json", "w") as fh:
            fh.write(json.dumps(sidecar, sort_keys=True) + "\n")
    if args.json:
        print(json.dumps({"command": "gadget", "graph6": g6, "sidecar": sidecar}, sort_keys=True))
    else:
        print(g6)
        print(json.dumps(sidecar, sort_keys=True))
    return 0


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("g6", "edgelist"),
                        help="input format (default: by extension, graph6 otherwise)")
    common.add_argument("--json", action="store_true", help="JSON instead of CSV / plain lines")
    common.add_argument("--guard", type=int, default=None,
                        help="size cap for exhaustive searches (env PERFGRAPH_GUARD)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--timing", action="store_true", help="add wall time to the report")
    common.add_argument("-v", "--verbose", action="store_true", help="human summary on stderr")

    p = _Parser(prog="perfgraph", description="Perfect graph recognition, detection and coloring.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("recognize", parents=[common], help="class membership with a witness")
    s.add_argument("cls", choices=sorted(RECOGNIZERS), metavar="CLASS")
    s.add_argument("input")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("color", parents=[common], help="even-pair contraction coloring")
    s.add_argument("input")
    s.add_argument("--no-verify", action="store_true", help="skip the exhaustive even-pair check")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("detect", parents=[common], help="run one induced-structure detector")
    s.add_argument("kind", choices=sorted(DETECTORS) + sorted(ALIASES), metavar="KIND")
    s.add_argument("input")
    s.set_defaults(func=cmd_detect)

    s = sub.add_parser("census", parents=[common], help="count small graphs by class")
    s.add_argument("n", type=int)
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--classes", nargs="+", choices=CENSUS_CLASSES + EXTRA_CLASSES)
    s.add_argument("--figure", help="also write a PNG plot here")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("smoke", parents=[common], help="timing run of the coloring")
    s.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--figure", help="also write a PNG plot here")
    s.set_defaults(func=cmd_smoke)

    s = sub.add_parser("gadget", help="3-SAT hardness gadgets")
    gsub = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    g = gsub.add_parser("pi", parents=[common], help="hole-through-(a,b) instance")
    g.add_argument("cnf")
    g.add_argument("--out", help="write OUT.g6 and OUT.json")
    g = gsub.add_parser("reduce", parents=[common], help="instance turned into a detection question")
    g.add_argument("kind", choices=REDUCTIONS)
    g.add_argument("cnf")
    g.add_argument("--out", help="write OUT.g6 and OUT.json")
    s.set_defaults(func=cmd_gadget)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"perfgraph: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"perfgraph: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except (ValueError, UnicodeDecodeError) as exc:
        print(f"perfgraph: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())

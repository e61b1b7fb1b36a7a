"""Command line interface.

Verbs:

* ``count``     exhaustive counts of coloured diagrams, optionally refined
* ``gf``        exact rational generating function from a transfer graph
* ``series``    counting series by object size
* ``graph``     emit a transfer multigraph (DOT by default)
* ``bijection`` apply the crossing/nesting involution to one diagram
* ``selftest``  built-in consistency checks

Exit codes: 0 success, 1 usage or input error, 2 a resource cap refused
the computation, 3 a consistency check failed.

Resource caps resolve flag > environment variable > default.  The
variables are CROSSNEST_MAX_STATES (graph construction),
CROSSNEST_MAX_GF_STATES (determinant size) and CROSSNEST_MAX_ORACLE
(enumeration workload).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import replace as _dc_replace
from math import comb
from typing import Optional

from . import __version__, automata, diagrams, involution, oracle, published, ratfunc, tableaux
from .errors import CapExceeded, ConsistencyError
from .oracle import EnumSpec

FAMILIES = ("setpartition", "permutation")


class _Usage(Exception):
    """Raised instead of argparse's SystemExit so main() can map it to 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage("%s%s: error: %s" % (self.format_usage(), self.prog, message))


def _cap(flag_value: Optional[int], env_name: str) -> Optional[int]:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(env_name)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError("%s must be an integer, got %r" % (env_name, raw)) from None


def _vertex_set(text: Optional[str]) -> Optional[frozenset[int]]:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(part) for part in text.split(","))


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _build_graph(args) -> automata.Multigraph:
    if args.colours < 1:
        raise ValueError("need at least one colour")
    max_states = _cap(args.max_states, "CROSSNEST_MAX_STATES")
    if (args.j, args.k) == (2, 2) and not args.general:
        cap = automata.DEFAULT_MAX_STATES if max_states is None else max_states
        if args.family == "setpartition":
            estimate = 2**args.colours
        else:
            estimate = comb(2 * args.colours, args.colours)
        if estimate > cap:
            raise CapExceeded(
                "graph needs %d states (cap %d); raise the cap to attempt it"
                % (estimate, cap)
            )
        if args.family == "setpartition":
            return automata.build_setpartition_22(args.colours)
        return automata.build_permutation_22(args.colours)
    return automata.build_general(
        args.family, args.j, args.k, args.colours, max_states=max_states
    )


# ---------------------------------------------------------------------------
# count


def cmd_count(args) -> int:
    spec = EnumSpec(
        family=args.family,
        n=args.n,
        colours=args.colours,
        j=args.j,
        k=args.k,
        openers=_vertex_set(args.openers),
        closers=_vertex_set(args.closers),
        max_objects=_cap(args.max_objects, "CROSSNEST_MAX_ORACLE"),
    )
    base = {
        "family": spec.family,
        "n": spec.n,
        "colours": spec.colours,
        "j": spec.j,
        "k": spec.k,
        "openers": None if spec.openers is None else sorted(spec.openers),
        "closers": None if spec.closers is None else sorted(spec.closers),
    }
    if args.histogram:
        hist = oracle.joint_histogram(spec)
        rows = hist.rows()
        if args.json:
            base["symmetric"] = hist.is_symmetric()
            base["histogram"] = [
                {"cr": c, "ne": e, "count": m} for c, e, m in rows
            ]
            _emit_json(base)
        elif args.csv:
            print("cr,ne,count")
            for c, e, m in rows:
                print("%d,%d,%d" % (c, e, m))
        else:
            for c, e, m in rows:
                print("cr=%d ne=%d: %d" % (c, e, m))
            print("total: %d" % hist.total())
            print("symmetric: %s" % ("yes" if hist.is_symmetric() else "no"))
        return 0
    total = oracle.count(spec, threads=args.threads)
    if args.json:
        base["count"] = total
        _emit_json(base)
    elif args.csv:
        print("count")
        print(total)
    else:
        print("count: %d" % total)
    return 0


# ---------------------------------------------------------------------------
# gf / series / graph


def _factor_text(constant: int, slopes) -> str:
    parts = ["(%s)" % ratfunc.IntPoly([1, -m]).to_text() for m in slopes]
    if not parts:
        return str(constant)
    text = "*".join(parts)
    if constant != 1:
        text = "%d * %s" % (constant, text)
    return text


def cmd_gf(args) -> int:
    g = _build_graph(args)
    rf = ratfunc.gf_from_graph(
        g, max_states=_cap(args.max_gf_states, "CROSSNEST_MAX_GF_STATES")
    )
    factors = ratfunc.split_linear_factors(rf.den)
    if args.json:
        _emit_json(
            {
                "family": args.family,
                "colours": args.colours,
                "j": args.j,
                "k": args.k,
                "numerator": list(rf.num.coeffs),
                "denominator": list(rf.den.coeffs),
                "denominator_factors": None
                if factors is None
                else {"constant": factors[0], "slopes": list(factors[1])},
            }
        )
    else:
        print("numerator: %s" % rf.num.to_text())
        print("denominator: %s" % rf.den.to_text())
        if factors is not None and rf.den.degree() > 0:
            print("denominator factors: %s" % _factor_text(*factors))
    return 0


def _size_counts(args, g: automata.Multigraph) -> list[int]:
    """Counts of objects of size 0 .. terms, from walks in the graph.

    Walk length m corresponds to size m for permutations and size m + 1
    for set partitions, whose moves live in the n + 1 gaps of a diagram.
    """
    shift = 1 if args.family == "setpartition" else 0
    needed = args.terms + 1 - shift
    if args.method == "power":
        coeffs = ratfunc.series_by_power(g, needed, offset=shift).coeffs
    else:
        rf = ratfunc.gf_from_graph(
            g, max_states=_cap(args.max_gf_states, "CROSSNEST_MAX_GF_STATES")
        )
        coeffs = ratfunc.series(rf, needed, offset=shift).coeffs
    return [1] * shift + list(coeffs)


def cmd_series(args) -> int:
    if args.terms < 0:
        raise ValueError("--terms must be nonnegative")
    g = _build_graph(args)
    counts = _size_counts(args, g)
    if args.json:
        _emit_json(
            {
                "family": args.family,
                "colours": args.colours,
                "j": args.j,
                "k": args.k,
                "first_size": 0,
                "counts": counts,
            }
        )
    elif args.csv:
        print("size,count")
        for size, value in enumerate(counts):
            print("%d,%d" % (size, value))
    else:
        print(",".join(str(value) for value in counts))
    return 0


def cmd_graph(args) -> int:
    g = _build_graph(args)
    if args.json:
        _emit_json(g.to_json_dict())
    else:
        print(automata.export_dot(g))
    return 0


# ---------------------------------------------------------------------------
# bijection


def _trace_entries(obj) -> list[dict]:
    if isinstance(obj, diagrams.ColouredSetPartition):
        per: dict[int, list[tuple[int, int]]] = {
            c: [] for c in range(1, obj.num_colours + 1)
        }
        for arc in obj.arcs():
            per[arc.colour].append(arc.pair)
        return [
            {
                "colour": c,
                "diagram": tableaux.encode_vacillating(pairs, len(obj)).to_json_dict(),
            }
            for c, pairs in sorted(per.items())
        ]
    return [
        {
            "colour": s.colour,
            "upper": tableaux.encode_hesitating(s.upper, s.n).to_json_dict(),
            "lower": tableaux.encode_vacillating(s.lower, s.n).to_json_dict(),
        }
        for s in involution.slice_by_colour(obj)
    ]


def cmd_bijection(args) -> int:
    obj = diagrams.parse_diagram(args.input)
    image = involution.involute(obj)
    trace = _trace_entries(obj) if args.trace else None
    if args.json:
        icr, ine = diagrams.cr_ne(obj)
        mcr, mne = diagrams.cr_ne(image)
        _emit_json(
            {
                "input": obj.to_text(),
                "image": image.to_text(),
                "input_stats": {"cr": icr, "ne": ine},
                "image_stats": {"cr": mcr, "ne": mne},
                "trace": trace,
            }
        )
    else:
        print(image.to_text())
        if trace is not None:
            print(json.dumps(trace, indent=2, sort_keys=True))
    return 0


# ---------------------------------------------------------------------------
# selftest


def _perturbed(g: automata.Multigraph, amount: int) -> automata.Multigraph:
    if not amount:
        return g
    mat = [list(row) for row in g.matrix]
    mat[0][0] += amount
    return _dc_replace(g, matrix=tuple(tuple(row) for row in mat))


def _selftest_items(perturb: int, max_objects: Optional[int]):
    def build(family: str, r: int) -> automata.Multigraph:
        if family == "setpartition":
            g = automata.build_setpartition_22(r)
        else:
            g = automata.build_permutation_22(r)
        return _perturbed(g, perturb)

    def gf_published(family, table):
        bad = []
        for r, (num, den) in sorted(table.items()):
            rf = ratfunc.gf_from_graph(build(family, r))
            if rf.num.coeffs != num or rf.den.coeffs != den:
                bad.append("r=%d got %s" % (r, rf.to_text()))
        return ("FAIL", "; ".join(bad)) if bad else ("PASS", None)

    def general_agrees():
        bad = []
        for family in FAMILIES:
            for r in (1, 2):
                dedicated = ratfunc.gf_from_graph(build(family, r))
                general = ratfunc.gf_from_graph(
                    _perturbed(automata.build_general(family, 2, 2, r), perturb)
                )
                if dedicated != general:
                    bad.append("%s r=%d" % (family, r))
        return ("FAIL", "; ".join(bad)) if bad else ("PASS", None)

    def series_methods():
        bad = []
        for family in FAMILIES:
            for r in (1, 2):
                g = build(family, r)
                by_gf = ratfunc.series(ratfunc.gf_from_graph(g), 12).coeffs
                by_power = ratfunc.series_by_power(g, 12).coeffs
                if by_gf != by_power:
                    bad.append("%s r=%d" % (family, r))
        return ("FAIL", "; ".join(bad)) if bad else ("PASS", None)

    def oracle_setpartition():
        for r, top in ((1, 6), (2, 5)):
            walks = ratfunc.series_by_power(build("setpartition", r), top).coeffs
            for n in range(top + 1):
                spec = EnumSpec(
                    "setpartition", n, r, j=2, k=2, max_objects=max_objects
                )
                got = oracle.count(spec)
                want = 1 if n == 0 else walks[n - 1]
                if got != want:
                    return (
                        "FAIL",
                        "r=%d n=%d oracle %d transfer %d" % (r, n, got, want),
                    )
        return ("PASS", None)

    def oracle_permutation():
        for r, top in ((1, 5), (2, 4)):
            walks = ratfunc.series_by_power(build("permutation", r), top + 1).coeffs
            for n in range(top + 1):
                spec = EnumSpec(
                    "permutation", n, r, j=2, k=2, max_objects=max_objects
                )
                got = oracle.count(spec)
                if got != walks[n]:
                    return (
                        "FAIL",
                        "r=%d n=%d oracle %d transfer %d" % (r, n, got, walks[n]),
                    )
        return ("PASS", None)

    def involution_invariants():
        cases = (
            ("permutation", 4, 1),
            ("permutation", 3, 2),
            ("setpartition", 4, 1),
            ("setpartition", 3, 2),
        )
        checked = 0
        for family, n, r in cases:
            spec = EnumSpec(family, n, r, max_objects=max_objects)
            for obj in oracle.enumerate_objects(spec):
                image = involution.involute(obj)
                c, e = diagrams.cr_ne(obj)
                if diagrams.cr_ne(image) != (e, c):
                    return ("FAIL", "statistics not swapped on %r" % (obj,))
                if involution.involute(image) != obj:
                    return ("FAIL", "not an involution on %r" % (obj,))
                if family == "permutation":
                    before = (diagrams.openers(obj), diagrams.closers(obj))
                    after = (diagrams.openers(image), diagrams.closers(image))
                else:
                    before = (
                        diagrams.arc_start_vertices(obj.arcs()),
                        diagrams.arc_end_vertices(obj.arcs()),
                    )
                    after = (
                        diagrams.arc_start_vertices(image.arcs()),
                        diagrams.arc_end_vertices(image.arcs()),
                    )
                if before != after:
                    return ("FAIL", "opener/closer sets moved on %r" % (obj,))
                checked += 1
        return ("PASS", "%d diagrams" % checked)

    def tableau_goldens():
        encoders = {
            "semioscillating": tableaux.encode_semioscillating,
            "vacillating": tableaux.encode_vacillating,
            "hesitating": tableaux.encode_hesitating,
        }
        for example in published.TABLEAU_EXAMPLES:
            seq = encoders[example["kind"]](example["arcs"], example["n"])
            if seq.shapes != example["shapes"]:
                return ("FAIL", "%s shapes differ" % example["kind"])
            if seq.fillings != example["fillings"]:
                return ("FAIL", "%s fillings differ" % example["kind"])
            if tuple(sorted(tableaux.decode(seq))) != tuple(sorted(example["arcs"])):
                return ("FAIL", "%s does not decode back" % example["kind"])
        got = involution.involute(
            diagrams.parse_diagram(published.INVOLUTION_EXAMPLE_INPUT)
        ).to_text()
        if got != published.INVOLUTION_EXAMPLE_IMAGE:
            return ("FAIL", "worked involution image is %s" % got)
        return ("PASS", None)

    return (
        (
            "gf-setpartition-published",
            lambda: gf_published("setpartition", published.SETPARTITION_GF),
        ),
        (
            "gf-permutation-published",
            lambda: gf_published("permutation", published.PERMUTATION_GF),
        ),
        ("general-builder-agrees", general_agrees),
        ("series-methods-agree", series_methods),
        ("oracle-vs-transfer-setpartition", oracle_setpartition),
        ("oracle-vs-transfer-permutation", oracle_permutation),
        ("involution-invariants", involution_invariants),
        ("tableau-goldens", tableau_goldens),
    )


def cmd_selftest(args) -> int:
    max_objects = _cap(args.max_objects, "CROSSNEST_MAX_ORACLE")
    results = []
    for name, fn in _selftest_items(args.perturb_adjacency, max_objects):
        start = time.perf_counter()
        try:
            status, detail = fn()
        except CapExceeded as exc:
            status, detail = "SKIP", str(exc)
        except Exception as exc:  # selftest reports, never crashes
            status, detail = "FAIL", "%s: %s" % (type(exc).__name__, exc)
        elapsed = time.perf_counter() - start
        results.append(
            {
                "name": name,
                "status": status,
                "seconds": round(elapsed, 3),
                "detail": detail,
            }
        )
        if not args.json:
            line = "%s %s (%.2fs)" % (status, name, elapsed)
            if detail:
                line += ": " + detail
            print(line)
    fails = sum(1 for item in results if item["status"] == "FAIL")
    skips = sum(1 for item in results if item["status"] == "SKIP")
    passes = len(results) - fails - skips
    overall = "FAIL" if fails else ("SKIP" if skips else "PASS")
    if args.json:
        _emit_json({"status": overall, "items": results})
    else:
        print(
            "selftest: %s (%d passed, %d skipped, %d failed)"
            % (overall, passes, skips, fails)
        )
    if fails:
        return 3
    if skips and args.fail_on_skip:
        return 2
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="crossnest",
        description="Coloured diagram statistics, transfer graphs and "
        "exact generating functions.",
    )
    parser.add_argument(
        "--version", action="version", version="crossnest " + __version__
    )
    sub = parser.add_subparsers(dest="verb", metavar="verb", required=True)

    def family_arg(p):
        p.add_argument("--family", choices=FAMILIES, required=True)

    p = sub.add_parser("count", help="count diagrams by exhaustive enumeration")
    family_arg(p)
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--colours", type=int, default=1)
    p.add_argument("--j", type=int, help="keep diagrams with crossing number < J")
    p.add_argument("--k", type=int, help="keep diagrams with nesting number < K")
    p.add_argument(
        "--openers", help="comma separated vertices; keep exact opener sets"
    )
    p.add_argument(
        "--closers", help="comma separated vertices; keep exact closer sets"
    )
    p.add_argument(
        "--histogram",
        action="store_true",
        help="tabulate by (crossing, nesting) pair instead",
    )
    p.add_argument("--threads", type=int, default=1)
    p.add_argument(
        "--max-objects", type=int, help="enumeration cap (default 10000000)"
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_count)

    def graph_args(p, gf_cap=False):
        family_arg(p)
        p.add_argument("--colours", type=int, default=1)
        p.add_argument("--j", type=int, default=2)
        p.add_argument("--k", type=int, default=2)
        p.add_argument(
            "--general",
            action="store_true",
            help="use the shape-tuple builder even when j = k = 2",
        )
        p.add_argument(
            "--max-states", type=int, help="graph size cap (default 20000)"
        )
        if gf_cap:
            p.add_argument(
                "--max-gf-states",
                type=int,
                help="determinant size cap (default 200)",
            )
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("gf", help="exact generating function")
    graph_args(p, gf_cap=True)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("series", help="counting series by size")
    graph_args(p, gf_cap=True)
    p.add_argument(
        "--terms",
        type=int,
        default=10,
        help="largest size to report; prints sizes 0..N",
    )
    p.add_argument(
        "--method",
        choices=("recurrence", "power"),
        default="recurrence",
        help="coefficients from the rational recurrence or from matrix powers",
    )
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("graph", help="emit a transfer multigraph")
    graph_args(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("bijection", help="apply the involution to a diagram")
    p.add_argument(
        "--input",
        required=True,
        help="diagram text, e.g. '4 5 3 6 2 1 / 1 2 1 2 2 2' "
        "or '{1,3,6},{4,5},{2}'",
    )
    p.add_argument(
        "--trace",
        action="store_true",
        help="also emit the per-colour tableau walks of the input",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("selftest", help="run built-in consistency checks")
    p.add_argument("--fail-on-skip", action="store_true")
    p.add_argument(
        "--max-objects", type=int, help="enumeration cap (default 10000000)"
    )
    p.add_argument(
        "--perturb-adjacency",
        type=int,
        default=0,
        help="testing hook: add this to the start state's self-loop "
        "count before comparing",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        sys.stderr.write(str(exc).rstrip() + "\n")
        return 1
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except CapExceeded as exc:
        sys.stderr.write("cap exceeded: %s\n" % exc)
        return 2
    except ConsistencyError as exc:
        sys.stderr.write("consistency failure: %s\n" % exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())

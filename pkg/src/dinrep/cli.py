"""Command-line front end.

Subcommands: gen, construct, verify, din, extremal, bound.  Exit codes are
part of the contract so shell harnesses need no output parsing:

    0  success / representation valid
    1  representation invalid
    2  usage, parse, or domain error
    3  cyclic input
    4  search budget exhausted

Every path argument accepts '-' for standard input or output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from .constructors import (
    augmented_representation,
    inductive_construction,
    pairing_construction,
    source_arc_path_representation,
)
from .digraph import (
    FAMILIES,
    Digraph,
    gen_family,
    load_graph,
    to_edge_list,
)
from .errors import BudgetExhaustedError, CyclicGraphError
from .representation import rep_from_json, rep_to_json, verify
from .solver import SolveBudget, exact_din, extremal_din

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_CYCLIC = 3
EXIT_BUDGET = 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _family_key(name: str) -> str:
    key = name.replace("-", "_")
    if key == "augmented":
        key = "augmented_source_arc_path"
    return key


def _cmd_gen(args) -> int:
    D = gen_family(_family_key(args.family), args.n)
    _write(args.out, to_edge_list(D))
    return EXIT_OK


def _applicable_bound(D: Digraph, method: str) -> int:
    # odd n runs through dummy padding, so only the padded-size bound is
    # certified
    n = D.n if D.n % 2 == 0 else D.n + 1
    if method == "pairing":
        return bounds_mod.lemma_upper_bound(n)
    if method == "inductive":
        return bounds_mod.general_upper_bound(n)
    # closed-form: exact family values
    if D.arcs == gen_family("source_arc_path", n).arcs:
        return bounds_mod.source_arc_path_din(n)
    return bounds_mod.augmented_din(n)


def _cmd_construct(args) -> int:
    D = load_graph(_read(args.graph))
    method = args.method
    if method == "pairing":
        rep = pairing_construction(D)
    elif method == "inductive":
        rep = inductive_construction(D)
    else:  # closed-form, only for an exact family arc-set match
        n = D.n
        if n % 2 == 0 and n >= 4 and D.arcs == gen_family("source_arc_path", n).arcs:
            rep = source_arc_path_representation(n)
        elif n % 2 == 0 and n >= 8 and D.arcs == gen_family("augmented_source_arc_path", n).arcs:
            rep = augmented_representation(n)
        else:
            print("closed-form method requires an exact source-arc-path or "
                  "augmented family match", file=sys.stderr)
            return EXIT_USAGE
    out = args.out
    if out is not None:
        _write(out, rep_to_json(rep))
    print(f"method = {method}")
    print(f"palette_size = {rep.palette_size}")
    print(f"bound = {_applicable_bound(D, method)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    D = load_graph(_read(args.graph))
    rep = rep_from_json(_read(args.rep))
    report = verify(D, rep)
    if report.valid:
        print("VALID")
        return EXIT_OK
    for u, v, kind in report.violations:
        print(f"{u} {v} {kind}")
    return EXIT_INVALID


def _budget_from(args) -> SolveBudget:
    return SolveBudget(max_nodes=args.budget_nodes, max_palette=args.max_palette)


def _cmd_din(args) -> int:
    D = load_graph(_read(args.graph))
    result = exact_din(D, _budget_from(args))
    if args.json:
        obj = {
            "status": result.status,
            "din": result.din,
            "nodes_explored": result.nodes_explored,
            "elapsed": result.elapsed,
            "best_upper": result.best_upper,
        }
        if result.witness is not None:
            obj["witness"] = json.loads(rep_to_json(result.witness))
        print(json.dumps(obj, sort_keys=True))
    if result.status == "infeasible":
        if not args.json:
            print("INFEASIBLE (cyclic)")
        return EXIT_CYCLIC
    if result.status == "budget_exhausted":
        if not args.json:
            suffix = f", best upper bound {result.best_upper}" if result.best_upper else ""
            print(f"UNKNOWN (budget){suffix}")
        return EXIT_BUDGET
    if not args.json:
        if args.witness is not None:
            _write(args.witness, rep_to_json(result.witness))
            print(f"DIN = {result.din} (witness: {args.witness})")
        else:
            print(f"DIN = {result.din}")
    elif args.witness is not None:
        _write(args.witness, rep_to_json(result.witness))
    return EXIT_OK


def _cmd_extremal(args) -> int:
    best, witnesses = extremal_din(
        args.n,
        _budget_from(args),
        workers=args.threads,
        allow_n6=args.allow_n6,
    )
    if args.json:
        obj = {
            "n": args.n,
            "max_din": best,
            "witnesses": [sorted(list(a) for a in w.arcs) for w in witnesses],
        }
        print(json.dumps(obj, sort_keys=True))
        return EXIT_OK
    print(f"max_din = {best} ({len(witnesses)} witnesses)")
    for w in witnesses:
        arcs = " ".join(f"({t},{h})" for t, h in sorted(w.arcs))
        print(f"witness: {arcs}")
    return EXIT_OK


_FORMULAS = ("general", "lemma", "directed-path", "source-arc-path", "augmented", "p-intersection")


def _cmd_bound(args) -> int:
    n = args.n
    if args.formula is not None:
        name = args.formula
        if name == "general":
            value = bounds_mod.general_upper_bound(n)
        elif name == "lemma":
            value = bounds_mod.lemma_upper_bound(n)
        elif name == "directed-path":
            value = bounds_mod.directed_path_din(n)
        elif name == "source-arc-path":
            value = bounds_mod.source_arc_path_din(n)
        elif name == "augmented":
            value = bounds_mod.augmented_din(n)
        else:  # p-intersection: n is read as the base din value
            value = bounds_mod.p_intersection_upper_bound(n, args.p)
        print(f"{name} {value}")
        return EXIT_OK
    if n < 2:
        raise ValueError(f"no formula applies to n = {n}")
    rows = [("general", bounds_mod.general_upper_bound(n))]
    if n % 2 == 0:
        rows.append(("lemma", bounds_mod.lemma_upper_bound(n)))
    rows.append(("directed-path", bounds_mod.directed_path_din(n)))
    if n >= 4:
        rows.append(("source-arc-path", bounds_mod.source_arc_path_din(n)))
    if n >= 8 and n % 2 == 0:
        rows.append(("augmented", bounds_mod.augmented_din(n)))
    for name, value in rows:
        print(f"{name} {value}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dinrep",
        description="Directed intersection representations of DAGs: generate "
        "families, construct and verify representations, compute exact "
        "minimum palettes, and evaluate bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family_names = sorted({f.replace("_", "-") for f in FAMILIES} | {"augmented"})
    p = sub.add_parser("gen", help="write a family graph file")
    p.add_argument("family", choices=family_names)
    p.add_argument("n", nargs="?", type=int, default=None)
    p.add_argument("-o", "--out", default="-")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("construct", help="build a representation for a DAG")
    p.add_argument("graph")
    p.add_argument("--method", choices=("pairing", "inductive", "closed-form"), required=True)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a representation against a digraph")
    p.add_argument("graph")
    p.add_argument("rep")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("din", help="exact minimum palette size")
    p.add_argument("graph")
    p.add_argument("--budget-nodes", type=int, default=100_000_000)
    p.add_argument("--max-palette", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.add_argument("-w", "--witness", default=None, help="write the witness JSON here")
    p.add_argument("--threads", type=int, default=1, help="accepted for symmetry; the single-instance search is sequential")
    p.set_defaults(func=_cmd_din)

    p = sub.add_parser("extremal", help="max DIN over all DAGs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--budget-nodes", type=int, default=100_000_000)
    p.add_argument("--max-palette", type=int, default=64)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--allow-n6", action="store_true", help="permit the 32768-solve n=6 sweep")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("bound", help="evaluate the closed-form formulas")
    p.add_argument("n", type=int)
    p.add_argument("--formula", choices=_FORMULAS, default=None)
    p.add_argument("--p", type=int, default=1, help="p for the p-intersection formula")
    p.set_defaults(func=_cmd_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CyclicGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CYCLIC
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

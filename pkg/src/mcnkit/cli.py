"""Command line front end.

Subcommands: solve, reduce, verify, gen, bench.  Results go to stdout as
JSON.  Exit codes: 0 done, 1 a checked property failed, 2 bad usage or
input, 3 instance above a size cap.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .exact import DEFAULT_MAX_PLAYS, SearchTooLarge
from .generate import SHAPES, gen_random_instance
from .graph import InstanceError, instance_digest, parse_instance, serialize_instance
from .poly.knapsack import TableTooLarge
from .propagation import PropertyViolation, StrategyError, StrategyTriple, play
from .reductions import sources
from .reductions.gadgets import REDUCERS, reduce_b3cnf_to_tik, tik_layout
from .reductions.oracle import OracleCapExceeded
from .reductions.verify import REDUCTIONS, run_round_trips
from .solve import ALGOS, PROBLEMS, NoPolyAlgorithm, solve_problem

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

REDUCE_FROM = ("cnp-split", "dominating-set", "knapsack", "bik", "bik-va", "b3cnf-tik", "tik",
               "3sat", "b2cnf", "cnp-split-dir", "cnp-split-dir-fixed")

_SOURCE_PARSERS = {
    "cnp-split": sources.parse_split_graph,
    "cnp-split-dir": sources.parse_split_graph,
    "cnp-split-dir-fixed": sources.parse_split_graph,
    "dominating-set": sources.parse_dominating_set,
    "knapsack": sources.parse_knapsack,
    "bik": sources.parse_bik,
    "bik-va": sources.parse_bik,
    "tik": sources.parse_tik,
    "b3cnf-tik": sources.parse_dimacs,
    "3sat": sources.parse_dimacs,
    "b2cnf": sources.parse_dimacs,
}


class UsageError(ValueError):
    pass


def _emit(doc, out=None):
    out = out or sys.stdout
    out.write(json.dumps(doc, sort_keys=False) + "\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _vertex_list(inst, text):
    if not text:
        return ()
    return tuple(sorted({inst.vertex_id(tok.strip()) for tok in text.split(",") if tok.strip()}))


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.instance))
    D = _vertex_list(inst, args.D)
    I = _vertex_list(inst, args.I)
    t0 = time.perf_counter()
    sol = solve_problem(inst, args.problem, args.algo, D, I, max_plays=args.max_plays,
                        tie_break=args.tie_break)
    wall = time.perf_counter() - t0
    gv = sol.result
    # replay the witness; the reported value must come back
    fixed_by_caller = args.problem in ("protect", "attack", "attack-protect")
    outcome = play(inst, gv.witness, budgets=not fixed_by_caller)
    if outcome.value != gv.value:
        raise PropertyViolation(f"witness replays to {outcome.value}, solver reported {gv.value}")
    _emit({"command": "solve", "args": sys.argv[1:] if args.echo is None else args.echo,
           "digest": instance_digest(inst), "problem": args.problem, "algorithm": sol.algorithm,
           "value": gv.value, "infected_benefit": inst.total_benefit - gv.value,
           "D": list(gv.D), "I": list(gv.I), "P": list(gv.P),
           "wall_time": round(wall, 6), "plays": gv.plays})
    return EXIT_OK


def cmd_reduce(args) -> int:
    src = _SOURCE_PARSERS[args.source](_read(args.input))
    if args.source == "b3cnf-tik":
        tik = reduce_b3cnf_to_tik(src)
        text = sources.knapsack_to_json(tik)
        info = {"target": "tik", "items": len(tik.p), "digits": tik_layout(src).width,
                "A2": tik.A2, "A": tik.A, "B": tik.B, "Kbar": tik.Kbar}
    else:
        cert = REDUCERS[args.source](src)
        text = serialize_instance(cert.target)
        info = {"target": "instance", "n": cert.target.n, "digest": instance_digest(cert.target),
                **cert.params}
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    _emit({"command": "reduce", "from": args.source, "out": args.out, **info})
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    rep = run_round_trips(args.reduction, args.samples, args.seed)
    doc = {"command": "verify", **rep.summary(), "wall_time": round(time.perf_counter() - t0, 3)}
    if not rep.ok:
        doc["first_mismatch"] = repr(rep.mismatches[0].source) if rep.mismatches else None
    _emit(doc)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_gen(args) -> int:
    inst = gen_random_instance(args.shape, args.n, args.seed, args.weights)
    sys.stdout.write(serialize_instance(inst) + "\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    from . import bench
    results = bench.run_suite(args.suite)
    _emit({"command": "bench", "suite": args.suite, "results": results})
    return EXIT_OK if all(r.get("ok", True) for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    from . import bench
    ap = argparse.ArgumentParser(prog="mcnkit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the game or one of its subgames")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--algo", choices=ALGOS, default="auto")
    p.add_argument("--instance", required=True, help="instance JSON file")
    p.add_argument("--D", help="fixed vaccinated vertices, comma separated ids or names")
    p.add_argument("--I", help="fixed attacked vertices, comma separated ids or names")
    p.add_argument("--max-plays", type=int, default=DEFAULT_MAX_PLAYS)
    p.add_argument("--tie-break", choices=("first", "last"), default="first",
                   help="which of several optimal moves the exhaustive search reports")
    p.set_defaults(func=cmd_solve, echo=None)

    p = sub.add_parser("reduce", help="compile a source problem into a game instance")
    p.add_argument("--from", dest="source", choices=REDUCE_FROM, required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="round-trip random sources through a reduction")
    p.add_argument("--reduction", choices=REDUCTIONS, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("--shape", choices=SHAPES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", choices=("unit", "random"), default="unit")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time a named suite")
    p.add_argument("--suite", choices=bench.SUITES, required=True)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "echo", 0) is None:
        args.echo = list(argv) if argv is not None else sys.argv[1:]
    try:
        return args.func(args)
    except PropertyViolation as exc:
        print(f"mcnkit: property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (SearchTooLarge, OracleCapExceeded, TableTooLarge) as exc:
        print(f"mcnkit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, InstanceError, StrategyError, NoPolyAlgorithm, sources.SourceError,
            ValueError) as exc:
        print(f"mcnkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

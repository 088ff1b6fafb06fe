"""Command-line entry point.

Exit status: 0 success (an INFEASIBLE answer is a success), 1 usage or
input error, 2 the input is not P_t-free, 3 an internal invariant failed.
Reports are JSON documents; vertex ids in them are 1-based like the
instance files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bench import bench
from .coloring import (
    brute_force_list3col,
    brute_force_min_cost_3col,
    solve_independent_oct,
    solve_list3col,
    solve_min_cost_3col,
    preprocess,
    ColoringInstance,
)
from .decomposition import find_heavy_vertex, find_heavy_vertex_color, gyarfas_separator
from .errors import InvariantViolation, NotPtFree, ParseError, SizeGuardError
from .generators import KINDS, GenerationFailed, GenSpec, gen
from .graph import ALL_COLORS, bits, components, parse_instance, write_graph
from .matching import brute_force_induced_matching, solve_induced_matching
from .mwis import brute_force_mis, build_index, effective_t, find_mis
from .paths import bucket_report, color_index, enumerate_induced_paths, is_pt_free

EXIT_OK, EXIT_USAGE, EXIT_NOT_PT_FREE, EXIT_INVARIANT = 0, 1, 2, 3
TARGETS = ("mwis", "list3col", "cost3col", "oct", "induced-matching")
DEFAULT_T = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ids(mask):
    return [v + 1 for v in bits(mask)]


def _pair_key(pair):
    return f"{pair[0] + 1}-{pair[1] + 1}"


def _load(args):
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc
    return parse_instance(text)


def _fingerprint(inst, t):
    return {"n": inst.graph.n, "m": inst.graph.m, "t": t}


def _mwis_answer(sol):
    return {"weight": sol.weight, "chosen": _ids(sol.chosen)}


def _coloring_answer(sol, with_cost=False):
    if sol is None:
        return {"feasible": False}
    out = {"feasible": True}
    if with_cost:
        out["cost"] = sol.cost
    out["assignment"] = {str(v + 1): c for v, c in sorted(sol.assignment.items())}
    return out


def _oct_answer(res):
    if res is None:
        return {"feasible": False}
    x, w = res
    return {"feasible": True, "weight": w, "transversal": _ids(x)}


def _matching_answer(sol):
    return {"weight": sol.weight, "edges": [[u + 1, v + 1] for u, v in sol.edges]}


def _text_answer(target, answer):
    if target in ("list3col", "cost3col", "oct") and not answer["feasible"]:
        return "INFEASIBLE"
    if target == "mwis":
        return f"weight {answer['weight']}\nchosen {' '.join(map(str, answer['chosen']))}".rstrip()
    if target in ("list3col", "cost3col"):
        lines = [f"cost {answer['cost']}"] if target == "cost3col" else []
        lines += [f"v {v} {c}" for v, c in answer["assignment"].items()]
        return "\n".join(lines)
    if target == "oct":
        return f"weight {answer['weight']}\ntransversal {' '.join(map(str, answer['transversal']))}".rstrip()
    lines = [f"weight {answer['weight']}"] + [f"e {u} {v}" for u, v in answer["edges"]]
    return "\n".join(lines)


def _solve(args, inst):
    g, t = inst.graph, args.t
    target = args.target
    if target == "mwis":
        sol, stats = find_mis(g, None, inst.weights, t, cache=args.cache)
        return _mwis_answer(sol), stats.as_dict()
    if target == "list3col":
        sol, stats = solve_list3col(g, None, inst.lists, t)
        return _coloring_answer(sol), stats.as_dict()
    if target == "cost3col":
        sol, stats = solve_min_cost_3col(g, None, inst.lists, inst.costs, t)
        return _coloring_answer(sol, with_cost=True), stats.as_dict()
    if target == "oct":
        res, stats = solve_independent_oct(g, None, inst.weights, t)
        return _oct_answer(res), stats.as_dict()
    sol, stats = solve_induced_matching(g, None, inst.edge_weight, t, cache=args.cache)
    return _matching_answer(sol), stats.as_dict()


def _oracle(args, inst):
    g = inst.graph
    target = args.target
    if target == "mwis":
        return _mwis_answer(brute_force_mis(g, None, inst.weights))
    if target == "list3col":
        return _coloring_answer(brute_force_list3col(g, None, inst.lists))
    if target == "cost3col":
        return _coloring_answer(
            brute_force_min_cost_3col(g, None, inst.lists, inst.costs), with_cost=True
        )
    if target == "oct":
        costs = [(0, 0, w) for w in inst.weights]
        sol = brute_force_min_cost_3col(g, None, [ALL_COLORS] * g.n, costs)
        if sol is None:
            return _oct_answer(None)
        x = sum(1 << v for v, c in sol.assignment.items() if c == 3)
        return _oct_answer((x, sol.cost))
    return _matching_answer(brute_force_induced_matching(g, None, inst.edge_weight))


def _heavy(args, inst):
    g, t = inst.graph, args.t
    t_eff = effective_t(t)
    if not args.colored:
        if not g.is_connected(g.full):
            raise InvariantViolation("heavy-vertex requires a connected graph")
        rep = find_heavy_vertex(g, g.full, build_index(g, g.full, t), t_eff)
        return {
            "t_effective": t_eff,
            "w": rep.w + 1,
            "hit_buckets": rep.hit_buckets,
            "total_buckets": rep.total_buckets,
            "per_bucket_hits": {_pair_key(p): c for p, c in rep.per_bucket_hits.items()},
        }
    red = preprocess(ColoringInstance(g, g.full, list(inst.lists)), t)
    if red is None:
        return {"t_effective": t_eff, "feasible": False}
    pairs = []
    for comp in components(g, red.active):
        if comp.bit_count() < 2:
            continue
        cidx = color_index(build_index(g, comp, t), red.lists)
        w, c, rep = find_heavy_vertex_color(g, comp, cidx, t_eff, red.lists)
        pairs.append({
            "component": _ids(comp),
            "w": w + 1,
            "color": c,
            "qualifying_buckets": rep.hit_buckets,
            "total_buckets": rep.total_buckets,
        })
    return {"t_effective": t_eff, "feasible": True, "pairs": pairs}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ptfree", description="Exact solvers for P_t-free graphs.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--t", type=int, default=DEFAULT_T)
        p.add_argument("--input", required=True)
        return p

    instance_cmd("check-ptfree", "certify P_t-freeness or print an induced P_t")
    instance_cmd("enum-paths", "bucket summary of all induced paths")
    instance_cmd("separator", "balanced connected separator")
    p = instance_cmd("heavy-vertex", "heavy vertex (or heavy vertex/colour pair)")
    p.add_argument("--colored", action="store_true")

    for name in ("solve", "oracle"):
        p = sub.add_parser(name, help=f"{name} an optimisation/decision problem")
        p.add_argument("target", choices=TARGETS)
        p.add_argument("--t", type=int, default=DEFAULT_T)
        p.add_argument("--input", required=True)
        p.add_argument("--stats", help="write the JSON report here; print the bare answer")
        if name == "solve":
            p.add_argument("--cache", action="store_true", help="memoise calls by active set")

    p = sub.add_parser("gen", help="generate a seeded P_t-free instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--t", type=int, default=DEFAULT_T)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parts", default="", help="comma-separated part sizes")
    p.add_argument("--out")

    p = sub.add_parser("bench", help="solve mwis on every *.col file of a directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--t", type=int, default=DEFAULT_T)
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--out")
    return parser


def _emit(report, path=None, text=None):
    doc = json.dumps(report, indent=2) + "\n"
    if path:
        Path(path).write_text(doc)
        if text is not None:
            print(text)
    else:
        sys.stdout.write(doc)


def run(args) -> int:
    cmd = args.command
    if cmd == "gen":
        parts = tuple(int(x) for x in args.parts.split(",") if x.strip())
        spec = GenSpec(args.kind, n=args.n, t=args.t, p=args.p, parts=parts, seed=args.seed)
        try:
            g = gen(spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        text = write_graph(g)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if cmd == "bench":
        if not Path(args.corpus).is_dir():
            raise UsageError(f"corpus directory {args.corpus} does not exist")
        _emit(bench(args.corpus, args.t, args.repetitions), args.out)
        return EXIT_OK

    if args.t < 2:
        raise UsageError("--t must be at least 2")
    inst = _load(args)
    g, t = inst.graph, args.t
    command = f"{cmd} {args.target}" if cmd in ("solve", "oracle") else cmd
    report = {"command": command, "input": args.input, "instance": _fingerprint(inst, t)}
    stats = None
    start = time.perf_counter()
    stats_path = getattr(args, "stats", None)
    try:
        if cmd == "check-ptfree":
            ok, witness = is_pt_free(g, None, t)
            answer = {"pt_free": ok, "certificate": None if ok else [v + 1 for v in witness]}
        elif cmd == "enum-paths":
            rep = bucket_report(enumerate_induced_paths(g, g.full, t))
            answer = {
                "total_paths": rep["total"],
                "buckets": rep["buckets"],
                "max_bucket": rep["max"],
                "sizes": {_pair_key(p): s for p, s in rep["sizes"].items()},
            }
        elif cmd == "separator":
            sep = gyarfas_separator(g, g.full, t)
            answer = {"x": _ids(sep.x), "halo": _ids(sep.halo), "component_sizes": sep.component_sizes}
        elif cmd == "heavy-vertex":
            answer = _heavy(args, inst)
        elif cmd == "solve":
            answer, stats = _solve(args, inst)
        else:
            answer = _oracle(args, inst)
    except NotPtFree as exc:
        report["error"] = {"kind": "not_pt_free", "certificate": [v + 1 for v in exc.certificate]}
        report["wall_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
        _emit(report, stats_path, "NOT_PT_FREE " + " ".join(map(str, report["error"]["certificate"])))
        return EXIT_NOT_PT_FREE
    except InvariantViolation as exc:
        report["error"] = {"kind": "invariant_violation", "message": str(exc)}
        report["wall_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
        _emit(report, stats_path, "INVARIANT_VIOLATION")
        return EXIT_INVARIANT
    except (ValueError, SizeGuardError) as exc:
        raise UsageError(str(exc)) from exc
    report["answer"] = answer
    if stats is not None:
        report["stats"] = stats
    report["wall_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    text = _text_answer(args.target, answer) if cmd in ("solve", "oracle") else None
    _emit(report, stats_path, text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args)
    except UsageError as exc:
        print(f"ptfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"ptfree: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GenerationFailed as exc:
        print(f"ptfree: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

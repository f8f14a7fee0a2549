"""Command-line interface: ``decycling <command> ...``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import bounds, families, generators, snake, textio
from .graph import Graph, GraphError
from .solver import DEFAULT_BUDGET, ORACLE_CAP, branch_and_bound, oracle
from .verify import SCOPES, verify_suite

EXIT_OK, EXIT_DOMAIN, EXIT_TIMEOUT = 0, 1, 2


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise GraphError(f"expected integers, got {text!r}") from None


def _need(params: list[str], count: int, family: str) -> list[int]:
    values = [v for p in params for v in _ints(p)]
    if len(values) != count:
        raise GraphError(f"{family} takes {count} integer parameter(s)")
    return values


def make_family(family: str, params: list[str], seed: int = 0) -> Graph:
    family = family.lower()
    if family == "petersen":
        return generators.petersen()
    if family in ("path", "cycle", "complete", "star", "edgeless"):
        (p,) = _need(params, 1, family)
        return getattr(generators, family)(p)
    if family in ("hypercube", "cube"):
        (n,) = _need(params, 1, family)
        return generators.hypercube(n)
    if family in ("grid", "torus"):
        m, n = _need(params, 2, family)
        return getattr(generators, family)(m, n)
    if family == "bipartite":
        r, s = _need(params, 2, family)
        return generators.complete_bipartite(r, s)
    if family == "multipartite":
        return generators.complete_multipartite([v for p in params for v in _ints(p)])
    if family == "outerplanar":
        (n,) = _need(params, 1, family)
        return generators.maximal_outerplanar(n, seed)
    if family == "fan":
        (n,) = _need(params, 1, family)
        return generators.fan_outerplanar(n)
    raise GraphError(f"unknown family {family!r}")


def load_graph(source: str) -> Graph:
    """A graph file, or a built-in name: petersen, q1..q20, grid MxN, KN."""
    path = Path(source)
    if path.exists():
        return textio.read_graph(path)
    name = source.strip().lower()
    if name == "petersen":
        return generators.petersen()
    if m := re.fullmatch(r"q(\d+)", name):
        return generators.hypercube(int(m.group(1)))
    if m := re.fullmatch(r"(?:grid\s*)?(\d+)x(\d+)", name):
        return generators.grid(int(m.group(1)), int(m.group(2)))
    if m := re.fullmatch(r"k(\d+)", name):
        return generators.complete(int(m.group(1)))
    raise GraphError(f"no such file or built-in graph: {source!r}")


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(lines))


# ---------------------------------------------------------------------------
# commands


def cmd_generate(args) -> int:
    g = make_family(args.family, args.params, args.seed)
    sys.stdout.write(textio.to_structured(g) if args.format == "structured" else textio.to_text(g))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    if args.oracle:
        result = oracle(g, cap=args.cap)
    else:
        result = branch_and_bound(g, budget=args.budget, threads=args.threads)
    data = {
        "value": result.value,
        "status": result.status,
        "lower": result.lower,
        "upper": result.upper,
        "witness": list(result.witness),
        "nodes": result.nodes_explored,
        "time": round(result.elapsed, 3),
    }
    lines = [
        f"value {result.value}",
        f"status {result.status}",
        f"lower {result.lower}",
        f"upper {result.upper}",
        "witness " + " ".join(map(str, result.witness)),
        f"nodes {result.nodes_explored}",
    ]
    if args.timing:
        lines.append(f"time {result.elapsed:.3f}")
    else:
        del data["time"]
    _emit(args, data, lines)
    return EXIT_OK if result.optimal else EXIT_TIMEOUT


def cmd_bounds(args) -> int:
    g = load_graph(args.graph)
    report = bounds.bound_report(g)
    lines = [f"{'bound':<14} {'kind':<6} {'value':>6}  source"]
    lines += [f"{b.name:<14} {b.kind:<6} {b.value:>6}  {b.citation}" for b in report.rows]
    lines.append(f"{'strongest':<14} {'range':<6} {report.lower:>6}..{report.upper}")
    _emit(args, report.to_dict(), lines)
    return EXIT_OK


def _answer_lines(answer: families.FormulaAnswer) -> tuple[dict, list[str]]:
    if answer.value is not None:
        return {"value": answer.value, "citation": answer.citation}, [f"{answer.value} ({answer.citation})"]
    lo, hi = answer.bounds
    data = {"value": None, "lower": lo, "upper": hi, "citation": answer.citation}
    return data, [f"not covered; bounds {lo}..{hi} ({answer.citation})"]


def cmd_formula(args) -> int:
    kind, params = args.kind, args.params
    if kind == "grid":
        m, n = _need(params, 2, "grid")
        data, lines = _answer_lines(families.grid_formula(m, n))
    elif kind == "cube":
        (n,) = _need(params, 1, "cube")
        data, lines = _answer_lines(families.cube_formula(n))
    elif kind == "complete":
        (p,) = _need(params, 1, "complete")
        value = families.complete_formula(p)
        data, lines = {"value": value, "citation": "complete graphs"}, [f"{value} (complete graphs)"]
    elif kind == "multipartite":
        parts = [v for p in params for v in _ints(p)]
        value = families.multipartite_formula(parts)
        data, lines = {"value": value, "citation": "complete multipartite graphs"}, [
            f"{value} (complete multipartite graphs)"
        ]
    else:
        raise GraphError(f"unknown formula {kind!r}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_snake(args) -> int:
    cells = _ints(args.cells)
    if args.attachments is not None:
        spec = snake.SnakeSpec(cells, _ints(args.attachments))
    else:
        turns = [t for t in re.split(r"[,\s]*", args.turns or "") if t]
        spec = snake.SnakeSpec.from_turns(cells, turns)
    g = snake.build_snake(spec)
    chosen = snake.greedy_decycle(spec)
    data = {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges], "greedy": list(chosen)}
    lines = [f"vertices {g.vertex_count}", "edges " + " ".join(f"{u}-{v}" for u, v in g.edges)]
    lines.append(f"greedy {len(chosen)}: " + " ".join(map(str, chosen)))
    if spec.is_square:
        name = snake.name_sequence(spec)
        nick = sorted(snake.nickname(name))
        data.update(name=list(name), nickname=nick)
        lines += ["name " + " ".join(map(str, name)), "nickname " + " ".join(map(str, nick))]
        lines.append(f"nickname size {len(nick)}")
        segments = snake.segment_sequence(spec)
        data["segments"] = segments
        lines.append("segments " + " ".join(map(str, segments)))
        if snake.is_nonsingular(spec):
            data["segment_formula"] = snake.segment_formula(spec)
            lines.append(f"segment formula {data['segment_formula']}")
    if g.vertex_count <= ORACLE_CAP:
        data["oracle"] = oracle(g).value
        lines.append(f"oracle {data['oracle']}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.which == "cubes":
        exact = [families.cube_formula(n).value for n in range(1, 9)]
        rows = [bounds.cube_bounds_table(n) for n in range(9, 14)]
        data = {"exact": exact, "bounds": {str(n): list(r) for n, r in zip(range(9, 14), rows)}}
        lines = ["n      " + " ".join(f"{n:>4}" for n in range(1, 9)), "value  " + " ".join(f"{v:>4}" for v in exact)]
        lines += ["", f"{'n':>2} {'lower':>6} {'upper':>6}"]
        lines += [f"{n:>2} {lo:>6} {hi:>6}" for n, (lo, hi) in zip(range(9, 14), rows)]
    else:
        columns = list(range(4, 13))
        data = {str(m): [families.grid_formula(m, n).value for n in columns] for m in range(2, 8)}
        lines = ["m\\n " + " ".join(f"{n:>3}" for n in columns)]
        lines += [f"{m:>3} " + " ".join(f"{v:>3}" for v in data[str(m)]) for m in range(2, 8)]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = verify_suite(args.scope, args.cap)
    data = {c.name: {"instances": c.instances, "failures": c.failures} for c in checks}
    _emit(args, data, [c.line() for c in checks])
    return EXIT_OK if all(c.passed for c in checks) else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="decycling", description="Decycling numbers of graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="emit a graph from a named family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("solve", parents=[common], help="exact decycling number")
    p.add_argument("graph", help="graph file or built-in name (petersen, q3, grid 4x5, k5)")
    method = p.add_mutually_exclusive_group()
    method.add_argument("--oracle", action="store_true", help="plain subset enumeration")
    method.add_argument("--bnb", action="store_true", help="branch and bound (default)")
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="seconds")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=ORACLE_CAP, help="oracle vertex cap")
    p.add_argument("--timing", action="store_true", help="also report wall-clock time")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("bounds", parents=[common], help="lower and upper bounds")
    p.add_argument("graph")
    p.set_defaults(run=cmd_bounds)

    p = sub.add_parser("formula", parents=[common], help="closed-form values")
    p.add_argument("kind", choices=("grid", "cube", "complete", "multipartite"))
    p.add_argument("params", nargs="+")
    p.set_defaults(run=cmd_formula)

    p = sub.add_parser("snake", parents=[common], help="build and analyse a snake")
    p.add_argument("--cells", required=True, help="cell lengths, e.g. 4,4,4")
    p.add_argument("--turns", help="S/L/R per junction for square cells, e.g. S,L")
    p.add_argument("--attachments", help="free-edge index per added cell, e.g. 1,0")
    p.set_defaults(run=cmd_snake)

    p = sub.add_parser("table", parents=[common], help="reproduce the cube or grid tables")
    p.add_argument("which", choices=("cubes", "grids"))
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="compare formulas with the exact solvers")
    p.add_argument("scope", choices=SCOPES, nargs="?", default="all")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", 1) <= 0 or getattr(args, "threads", 1) < 1:
        print("error: budget must be positive and threads at least 1", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        return args.run(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

"""``orthoguard`` command line.

Exit codes: 0 success, 1 property or coverage failure, 2 usage error,
3 invalid input, 4 oracle budget exceeded, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from . import kernels
from .generator import PATTERNS, GenSpec, SpecOutOfRangeError, generate
from .oracle import (
    BudgetExceededError,
    InfeasibleCoverError,
    full_problem_optimum,
    left_problem_optimum,
    property_suite,
    right_problem_optimum,
)
from .render import render_svg
from .solver import SIDES, GuardSolution, solve_full, solve_left_convex, solve_right_convex_fast, solve_right_convex_reference, verify_coverage
from .terrain import TerrainError, terrain_from_json, terrain_to_json
from .visibility import IndexOutOfRangeError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET, EXIT_IO = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _sizes(text: str) -> list[int]:
    try:
        out = [int(float(s)) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    if not out or min(out) < 2:
        raise argparse.ArgumentTypeError("sizes must be >= 2")
    return out


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror}")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror}")


def _load_terrain(path: str):
    try:
        return terrain_from_json(_read(path))
    except (TerrainError, ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_INPUT, f"invalid terrain {path}: {exc}")


def cmd_gen(args) -> int:
    spec = GenSpec(args.seed, args.steps, args.max_run, args.max_rise, args.pattern)
    try:
        t = generate(spec)
    except SpecOutOfRangeError as exc:
        raise CliError(EXIT_USAGE, str(exc))
    _write(args.output, terrain_to_json(t) + "\n")
    return EXIT_OK


def cmd_solve(args) -> int:
    t = _load_terrain(args.terrain)
    if args.side == "right":
        sol = solve_right_convex_fast(t, args.backend) if args.engine == "fast" else solve_right_convex_reference(t)
    elif args.side == "left":
        sol = solve_left_convex(t, args.engine, args.backend)
    else:
        sol = solve_full(t, args.engine, backend=args.backend)
    _write(args.output, sol.to_json() + "\n")
    return EXIT_OK


def _witnesses_for(t, side: str) -> list[int]:
    c = t.classification
    if side == "right":
        return c.rc_indices.tolist()
    if side == "left":
        return c.lc_indices.tolist()
    return list(range(t.n))


def cmd_check(args) -> int:
    t = _load_terrain(args.terrain)
    try:
        sol = GuardSolution.from_json(_read(args.solution))
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_INPUT, f"invalid solution {args.solution}: {exc}")
    side = args.side or sol.side
    try:
        missed = verify_coverage(t, sol.guards, _witnesses_for(t, side))
    except IndexOutOfRangeError as exc:
        raise CliError(EXIT_INPUT, str(exc))
    if missed:
        print("unguarded " + " ".join(str(w + 1) for w in missed))
        return EXIT_FAIL
    print(f"covered {side} guards={len(set(sol.guards))}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    t = _load_terrain(args.terrain)
    fn = {"right": right_problem_optimum, "left": left_problem_optimum, "full": full_problem_optimum}[args.side]
    try:
        res = fn(t, cap=args.cap)
    except BudgetExceededError:
        print("BudgetExceeded")
        return EXIT_BUDGET
    except InfeasibleCoverError as exc:
        print(f"Infeasible {exc}")
        return EXIT_FAIL
    doc = {"side": args.side, "optimum": res.optimum_size, "set": [g + 1 for g in res.optimum_set], "explored": res.explored}
    print(json.dumps(doc, separators=(",", ":")))
    return EXIT_OK


def cmd_verify(args) -> int:
    t = _load_terrain(args.terrain)
    mode = "exhaustive" if args.exhaustive else "sampled"
    try:
        report = property_suite(t, mode, samples=args.samples, seed=args.seed)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc))
    print(report.summary())
    if args.report:
        _write(args.report, report.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_bench(args) -> int:
    rows = bench_mod.run_bench(args.sizes, args.seeds_per_size, args.backend, args.repeat, args.jobs)
    summary = bench_mod.summarize(rows)
    if args.csv:
        _write(args.csv, bench_mod.to_csv(rows))
    print(f"backend: {kernels.BACKEND if args.backend == 'active' else args.backend}")
    print(bench_mod.format_table(summary))
    return EXIT_OK


def cmd_render(args) -> int:
    t = _load_terrain(args.terrain)
    sol = None
    if args.solution:
        try:
            sol = GuardSolution.from_json(_read(args.solution))
        except (ValueError, KeyError, TypeError) as exc:
            raise CliError(EXIT_INPUT, f"invalid solution {args.solution}: {exc}")
        if any(not 0 <= v < t.n for v in list(sol.guards) + list(sol.assignment) + list(sol.assignment.values())):
            raise CliError(EXIT_INPUT, "solution refers to vertices outside the terrain")
    _write(args.output, render_svg(t, sol))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orthoguard", description="Guarding 1.5D orthogonal terrains.")
    sub = p.add_subparsers(dest="command", required=True)
    backends = ("active", "compiled", "pure")

    g = sub.add_parser("gen", help="generate a terrain document")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--steps", type=_positive, default=8)
    g.add_argument("--max-run", type=_positive, default=4)
    g.add_argument("--max-rise", type=_positive, default=4)
    g.add_argument("--pattern", choices=PATTERNS)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="place guards")
    s.add_argument("terrain")
    s.add_argument("--side", choices=SIDES, default="full")
    s.add_argument("--engine", choices=("fast", "reference"), default="fast")
    s.add_argument("--backend", choices=backends, default="active")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="check that a solution guards its witnesses")
    c.add_argument("terrain")
    c.add_argument("solution")
    c.add_argument("--side", choices=SIDES, help="override the side stored in the solution")
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="exact minimum guard set")
    o.add_argument("terrain")
    o.add_argument("--side", choices=SIDES, default="full")
    o.add_argument("--cap", type=_positive, default=2_000_000, help="search node budget")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="run the structural property suite")
    v.add_argument("terrain")
    v.add_argument("--exhaustive", action="store_true")
    v.add_argument("--samples", type=_positive, default=64)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", help="write the JSON property report here")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time solve_full across sizes")
    b.add_argument("--sizes", type=_sizes, default=[1000, 10_000, 100_000, 1_000_000])
    b.add_argument("--seeds-per-size", type=_positive, default=10)
    b.add_argument("--backend", choices=backends, default="active")
    b.add_argument("--repeat", type=_positive, default=1, help="keep the best of this many timings")
    b.add_argument("--jobs", type=_positive, default=1)
    b.add_argument("--csv", help="write the per-run CSV table here")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("render", help="draw a terrain as SVG")
    r.add_argument("terrain")
    r.add_argument("--solution")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"orthoguard: {exc}", file=sys.stderr)
        return exc.code
    except RuntimeError as exc:
        # e.g. compiled backend requested but not built
        print(f"orthoguard: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

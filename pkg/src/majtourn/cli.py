"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 capacity error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .bounds import (
    DEFAULT_VERIFY_MAX_R,
    BoundReport,
    erdos_szekeres_witness,
    verify_construction,
)
from .core import MajorityDigraph, Profile, build_majority_digraph, is_tournament
from .errors import CapacityError, InputError, MajTournError
from .generate import random_profile, search_min_acyclic
from .solver import ORACLE_MAX_N, brute_force_max_acyclic, max_acyclic_set
from .triangle import MAX_R, TriangleConstruction

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_VERIFY = 4


class VerificationFailure(MajTournError):
    pass


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _digraph_of(obj: Profile | MajorityDigraph) -> MajorityDigraph:
    return build_majority_digraph(obj) if isinstance(obj, Profile) else obj


def cmd_gen_triangle(args) -> int:
    if args.r is None:
        raise InputError("gen-triangle needs --r")
    if args.r < 1:
        raise InputError("--r must be >= 1")
    if args.r > MAX_R:
        raise CapacityError(f"--r {args.r} exceeds the cap {MAX_R} (n <= 128)")
    tc = TriangleConstruction(args.r)
    if args.out is None:
        sys.stdout.write(formats.dumps_profile(tc.profile))
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"triangle_r{args.r}"
    (out / f"{stem}.profile.json").write_text(formats.dumps_profile(tc.profile))
    (out / f"{stem}.digraph.json").write_text(formats.dumps_digraph(tc.digraph))
    (out / f"{stem}.dot").write_text(formats.export_dot(tc.digraph, tc.points, name=stem))
    return EXIT_OK


def cmd_gen_random(args) -> int:
    if args.n is None or args.k is None:
        raise InputError("gen-random needs --n and --k")
    _write(args.out, formats.dumps_profile(random_profile(args.n, args.k, args.seed)))
    return EXIT_OK


def cmd_solve(args) -> int:
    obj = formats.load_any(_read(args.file))
    d = _digraph_of(obj)
    use_oracle = args.oracle or not is_tournament(d)
    if use_oracle:
        if d.n > ORACLE_MAX_N:
            raise CapacityError(
                f"n={d.n} is not a tournament or --oracle was given; the oracle is limited to n <= {ORACLE_MAX_N}"
            )
        result = brute_force_max_acyclic(d)
    else:
        result = max_acyclic_set(d, threads=args.threads)
    label = obj.label if isinstance(obj, Profile) else (lambda v: v)
    witness = [label(v) for v in result.witness]
    print(f"size: {result.size}")
    print("witness: " + " ".join(str(v) for v in witness))
    print(f"method: {result.method}")
    report = {"size": result.size, "witness": witness, "method": result.method}
    if args.stats:
        print(f"nodes_explored: {result.nodes_explored}")
        print(f"memo_hits: {result.memo_hits}")
        print(f"wall_time_ms: {result.wall_time * 1000:.3f}")
        report["nodes_explored"] = result.nodes_explored
        report["memo_hits"] = result.memo_hits
    if args.out is not None:
        Path(args.out).write_text(json.dumps(report) + "\n")
    return EXIT_OK


def _bound_rows(r_min: int, r_max: int, max_r: int) -> tuple[list[BoundReport], list[str]]:
    if r_min < 1 or r_max < r_min:
        raise InputError(f"need 1 <= r-min <= r, got {r_min}..{r_max}")
    rows, problems = [], []
    for r in range(r_min, r_max + 1):
        row = verify_construction(r, max_r=max_r)
        rows.append(row)
        if not row.satisfied:
            problems.append(f"r={r}: bounds not satisfied (achieved {row.achieved})")
        elif row.achieved != r:
            problems.append(f"r={r}: a(G_r)={row.achieved}, expected {r}")
        if row.n <= ORACLE_MAX_N:
            oracle = brute_force_max_acyclic(TriangleConstruction(r).digraph).size
            if oracle != row.achieved:
                problems.append(f"r={r}: solver {row.achieved} != oracle {oracle}")
    return rows, problems


def cmd_verify(args) -> int:
    r_max = DEFAULT_VERIFY_MAX_R if args.r is None else args.r
    rows, problems = _bound_rows(1, r_max, args.max_r)
    print(f"{'n':>4} {'r':>3} {'a(G_r)':>7} {'sqrt(2n)+1/2':>13} {'ceil(sqrt n)*':>14} {'ok':>4}")
    for row in rows:
        print(
            f"{row.n:>4} {row.r:>3} {row.achieved:>7} {row.upper:>13.4f} {row.lower:>14} "
            f"{'yes' if row.satisfied and row.achieved == row.r else 'NO':>4}"
        )
    print("* lower bound is cited, checked empirically only")
    if args.out is not None:
        Path(args.out).write_text(formats.sweep_csv(rows, timing=not args.no_timing))
    for p in problems:
        print(f"FAIL {p}", file=sys.stderr)
    return EXIT_VERIFY if problems else EXIT_OK


def cmd_sweep(args) -> int:
    r_max = DEFAULT_VERIFY_MAX_R if args.r is None else args.r
    rows, problems = _bound_rows(args.r_min, r_max, args.max_r)
    _write(args.out, formats.sweep_csv(rows, timing=not args.no_timing))
    for p in problems:
        print(f"FAIL {p}", file=sys.stderr)
    return EXIT_VERIFY if problems else EXIT_OK


def cmd_es(args) -> int:
    if args.r is None or args.s is None:
        raise InputError("es needs --r and --s thresholds")
    if args.file is not None:
        profile = formats.loads_profile(_read(args.file))
    else:
        if args.n is None:
            raise InputError("es needs a profile file or --n for a random pair")
        profile = random_profile(args.n, 2, args.seed)
    if profile.k < 2:
        raise InputError("es needs a profile with at least two orders")
    a, b = profile.orders[0], profile.orders[1]
    w = erdos_szekeres_witness(a, b, args.r, args.s)
    members = [profile.label(v) for v in w.members]
    print(f"{w.kind} set of size {w.size}: " + " ".join(str(v) for v in members))
    if args.out is not None:
        Path(args.out).write_text(json.dumps({"kind": w.kind, "members": members}) + "\n")
    return EXIT_OK


def cmd_search(args) -> int:
    if args.n is None or args.k is None:
        raise InputError("search needs --n and --k")
    res = search_min_acyclic(args.n, args.k, args.seed, args.iters)
    print(f"min a(T) over {res.iterations} profiles: {res.best.size}")
    print("witness: " + " ".join(str(v) for v in res.best.witness))
    if args.k == 3:
        print(f"cited lower bound ceil(sqrt n) = {res.lower_bound}")
    if args.out is not None:
        Path(args.out).write_text(formats.dumps_profile(res.best_profile))
    if res.anomaly:
        print(f"ANOMALY: a(T)={res.best.size} < {res.lower_bound} for a 3-majority tournament", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_export(args) -> int:
    points = None
    if args.file is not None:
        d = _digraph_of(formats.load_any(_read(args.file)))
    elif args.r is not None:
        if args.r < 1:
            raise InputError("--r must be >= 1")
        tc = TriangleConstruction(args.r)
        d, points = tc.digraph, tc.points
    else:
        raise InputError("export needs a profile/digraph file or --r")
    if args.format == "dot":
        text = formats.export_dot(d, points)
    else:
        text = formats.dumps_digraph(d)
    _write(args.out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="majtourn", description="k-majority tournaments and acyclic sets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-triangle", help="write the triangular-lattice profile and tournament G_r")
    p.add_argument("--r", type=int)
    p.add_argument("--out", help="output directory (default: profile JSON to stdout)")
    p.set_defaults(func=cmd_gen_triangle)

    p = sub.add_parser("gen-random", help="write k seeded uniform random orders")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("solve", help="maximum acyclic set of a profile or digraph file")
    p.add_argument("file")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--oracle", action="store_true", help="force the brute-force oracle")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="write the result as JSON")
    p.set_defaults(func=cmd_solve)

    for name, func, helptext in (
        ("verify", cmd_verify, "check a(G_r) = r and the bounds for r = 1..R"),
        ("sweep", cmd_sweep, "CSV of bound rows for a range of r"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--r", type=int, help=f"largest r (default {DEFAULT_VERIFY_MAX_R})")
        if name == "sweep":
            p.add_argument("--r-min", type=int, default=1)
        p.add_argument("--max-r", type=int, default=DEFAULT_VERIFY_MAX_R, help="exact-solve range cap")
        p.add_argument("--out", help="CSV output path")
        p.add_argument("--no-timing", action="store_true", help="write time_ms as 0 for reproducible files")
        p.set_defaults(func=func)

    p = sub.add_parser("es", help="Erdős–Szekeres witness for the first two orders")
    p.add_argument("file", nargs="?")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int, help="use a random pair of orders on n elements")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_es)

    p = sub.add_parser("search", help="random restarts minimising a(T)")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--out", help="write the best profile found")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export", help="export a digraph as DOT or JSON")
    p.add_argument("file", nargs="?")
    p.add_argument("--r", type=int, help="export G_r with coordinate comments")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MajTournError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

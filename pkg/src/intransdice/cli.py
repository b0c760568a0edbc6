"""Command-line interface.

Exit codes: 0 verified success, 1 verification failure, 2 input or usage error.
A file argument of ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import catalog
from . import construct as con
from . import partition as part
from . import switch as sw
from . import tournament as tour
from .errors import ConstructionError, InputError, PreconditionError
from .verify import verify_model

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_partition(path: str) -> part.RegularPartition:
    return part.parse_partition(_read_text(path))


def _load_tournament(path: str) -> tour.Tournament:
    return tour.parse_tournament(_read_text(path))


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_order(s: str | None) -> tuple[int, ...] | None:
    if s is None:
        return None
    try:
        return tuple(int(x) for x in s.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"bad --order {s!r}") from exc


def _report(report, fmt: str) -> str:
    return report.to_json() + "\n" if fmt == "json" else report.to_text()


def cmd_construct(args) -> int:
    R = _load_tournament(args.tournament)
    plan = con.ConstructionPlan(order=_parse_order(args.order), strong_decomposition=args.strong_decomp)
    try:
        if args.target_N is not None:
            P = con.construct_model_with_N(R, args.target_N, plan)
        else:
            P = con.construct_model(R, plan)
    except ConstructionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = verify_model(P, R)
    info = sys.stderr if not args.output or args.output == "-" else sys.stdout
    _emit(part.format_partition(P), args.output)
    print(f"n={P.n} N={P.N} ground set [{P.size}] verified={'yes' if report.match else 'no'}", file=info)
    if not report.match:
        sys.stderr.write(report.to_text())
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    P = _load_partition(args.partition)
    R = _load_tournament(args.tournament)
    report = verify_model(P, R)
    sys.stdout.write(_report(report, args.format))
    return EXIT_OK if report.match else EXIT_FAIL


def cmd_stratify(args) -> int:
    P = _load_partition(args.partition)
    try:
        S, records = sw.stratify(P)
    except ConstructionError as exc:
        print(f"stratify failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.log:
        _emit(sw.format_switch_log(records), args.log)
    _emit(part.format_partition(S), args.output)
    same = part.induced_digraph(S) == part.induced_digraph(P)
    print(f"{len(records)} switches; induced digraph preserved={'yes' if same else 'no'}", file=sys.stderr)
    return EXIT_OK if same else EXIT_FAIL


def cmd_switch(args) -> int:
    P = _load_partition(args.partition)
    if args.replay:
        P = sw.replay(P, sw.parse_switch_log(_read_text(args.replay)))
    P, records = sw.apply_switches(P, args.k)
    if args.log:
        _emit(sw.format_switch_log(records), args.log)
    _emit(part.format_partition(P), args.output)
    return EXIT_OK


def cmd_group_game(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    P = con.group_game_partition(args.n)
    _emit(part.format_partition(P), args.output)
    return EXIT_OK


def cmd_example(args) -> int:
    if args.list or not args.name:
        for name in catalog.NAMES:
            print(f"{name:8s} {catalog.DESCRIPTIONS[name]}")
        return EXIT_OK
    if args.tournament:
        _emit(tour.format_tournament(catalog.tournament(args.name)), args.output)
    elif args.dice:
        _emit(part.format_dice(catalog.partition(args.name)), args.output)
    else:
        _emit(part.format_partition(catalog.partition(args.name)), args.output)
    return EXIT_OK


def _check_one(job) -> tuple[bool, int]:
    R, plan, target_N = job
    try:
        if target_N is not None:
            P = con.construct_model_with_N(R, target_N, plan)
        else:
            P = con.construct_model(R, plan)
    except ConstructionError:
        return False, 0
    return verify_model(P, R).match, P.size


def cmd_enumerate(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be >= 1")
    plan = con.ConstructionPlan(strong_decomposition=args.strong_decomp)
    if args.random is not None:
        rng = random.Random(args.seed)
        tours = [tour.random_tournament(n, rng) for _ in range(args.random)]
        mode = f"random sample of {args.random} (seed {args.seed})"
    else:
        tours = list(tour.all_tournaments(n))
        mode = "all labelled tournaments"
    start = time.perf_counter()
    jobs = [(R, plan, args.target_N) for R in tours]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check_one, jobs, chunksize=16))
    else:
        results = [_check_one(j) for j in jobs]
    ok = sum(1 for good, _ in results if good)
    sizes = sorted({s for good, s in results if good})
    elapsed = time.perf_counter() - start
    print(f"n        {n}")
    print(f"mode     {mode}")
    print(f"verified {ok}/{len(results)}")
    print(f"failed   {len(results) - ok}")
    print(f"ground   {', '.join(map(str, sizes)) or '-'}")
    print(f"seconds  {elapsed:.2f}")
    return EXIT_OK if ok == len(results) else EXIT_FAIL


def cmd_small_models(args) -> int:
    n = args.n
    if not 3 <= n <= 6:
        raise UsageError("small-models supports 3 <= n <= 6")
    seeds = [P for name in catalog.NAMES if (P := catalog.partition(name)).n == n and P.N == 3]
    seeds.append(part.RegularPartition([i, n + i, 2 * n + i] for i in range(1, n + 1)))
    found = sw.stratified_models(seeds)
    strong = _strong_classes(n)
    missing = [c for c in strong if c not in found]
    print(f"strong tournaments on {n} vertices up to isomorphism: {len(strong)}")
    print(f"modelled by a stratified {n} partition of [{3 * n}]: {len(strong) - len(missing)}")
    for c in strong:
        if c in found:
            sys.stdout.write(part.format_partition(found[c]))
    return EXIT_OK if not missing else EXIT_FAIL


def _strong_classes(n: int) -> list[tuple[int, ...]]:
    classes = set()
    for R in tour.all_tournaments(n):
        if tour.is_strong(R)[0]:
            classes.add(tour.canonical_form(R))
    return sorted(classes)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intransdice", description="Intransitive dice from tournaments.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a partition modelling a tournament")
    c.add_argument("tournament")
    c.add_argument("--order", help="insertion order, e.g. 3,1,2")
    c.add_argument("--strong-decomp", action="store_true", help="model strong components separately")
    c.add_argument("--target-N", type=int, help="exact block size")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a partition against a tournament")
    v.add_argument("partition")
    v.add_argument("tournament")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stratify", help="stratify an N = 3 partition by simple switches")
    s.add_argument("partition")
    s.add_argument("--log", help="write the switch log here")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_stratify)

    w = sub.add_parser("switch", help="apply simple switches at the given positions")
    w.add_argument("partition")
    w.add_argument("k", type=int, nargs="*")
    w.add_argument("--replay", help="switch log to apply first")
    w.add_argument("--log", help="write the switch log here")
    w.add_argument("-o", "--output")
    w.set_defaults(func=cmd_switch)

    g = sub.add_parser("group-game", help="proper stratified model of the group game on Z_(2n+1)")
    g.add_argument("n", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_group_game)

    e = sub.add_parser("example", help="print a built-in example")
    e.add_argument("name", nargs="?")
    e.add_argument("--list", action="store_true")
    e.add_argument("--tournament", action="store_true", help="print its documented tournament")
    e.add_argument("--dice", action="store_true", help="print as dice")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_example)

    n = sub.add_parser("enumerate", help="construct and verify models for many tournaments")
    n.add_argument("n", type=int)
    n.add_argument("--random", type=int, metavar="COUNT", help="random sample instead of all")
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--strong-decomp", action="store_true")
    n.add_argument("--target-N", type=int)
    n.add_argument("--jobs", type=int, default=1)
    n.set_defaults(func=cmd_enumerate)

    m = sub.add_parser("small-models", help="search N = 3 models of every strong tournament on n vertices")
    m.add_argument("n", type=int)
    m.set_defaults(func=cmd_small_models)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

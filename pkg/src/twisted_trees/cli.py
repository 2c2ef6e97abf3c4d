"""Command-line interface.

    twisted-trees count --n 5 --method structured
    twisted-trees enumerate --n 3 --isomorphic-only --out iso3.json
    twisted-trees iso --n 3 --k 2
    twisted-trees verify --n 4 --source enumerate
    twisted-trees render --in iso3.json --out iso3.svg

Exit codes: 0 success, 1 law or validation failure, 2 usage error,
3 resource limit or interrupted run.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import enumeration as en
from .core import InvalidPartition
from .export import dumps, dumps_dot, read_partitions, to_svg
from .isomorphic import iso_partition
from .laws import run_suite, suite_passed

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

log = logging.getLogger("twisted_trees")

COUNT_BOUNDS = {"oracle": 4, "structured": 6, "closed-form": 10**4, "recursive": 10**4}
ENUMERATE_MAX = 4
ENUMERATE_LARGE_MAX = 5


class UsageError(Exception):
    pass


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_count(args) -> int:
    bound = COUNT_BOUNDS[args.method]
    if not 1 <= args.n <= bound:
        raise UsageError(f"--method {args.method} requires 1 <= n <= {bound}")
    if args.method == "closed-form":
        value = en.count_closed_form(args.n)
    elif args.method == "recursive":
        value = en.count_recursive(args.n)
    elif args.method == "oracle":
        value = len(en.oracle_enumerate(args.n, node_limit=args.node_limit, workers=args.workers))
    else:
        partial = [0, 0]

        def progress(total):
            partial[0] = total
            partial[1] += 1
            if partial[1] % 1000 == 0:
                log.info("%d bases done, running total %d", partial[1], total)

        try:
            value = en.structured_count(args.n, workers=args.workers, progress=progress)
        except KeyboardInterrupt:
            print(f"interrupted; partial count {partial[0]}")
            return EXIT_LIMIT
    print(value)
    return EXIT_OK


def _enumerate(n: int, engine: str, workers: int, node_limit: int):
    if engine == "oracle":
        return en.oracle_enumerate(n, node_limit=node_limit, workers=workers)
    return en.structured_enumerate(n, workers=workers)


def cmd_enumerate(args) -> int:
    top = ENUMERATE_LARGE_MAX if args.large else ENUMERATE_MAX
    if not 1 <= args.n <= top:
        hint = "" if args.large else " (n = 5 needs --large)"
        raise UsageError(f"enumerate requires 1 <= n <= {top}{hint}")
    ps = _enumerate(args.n, args.engine, args.workers, args.node_limit)
    if args.isomorphic_only:
        ps = en.filter_isomorphic(ps)
    if args.paths_only:
        ps = en.filter_paths(ps)
    text = dumps(ps, indent=args.indent) + "\n" if args.format == "json" else dumps_dot(ps)
    _write(text, args.out)
    stream = sys.stderr if args.out in (None, "-") else sys.stdout
    print(len(ps), file=stream)
    return EXIT_OK


def cmd_iso(args) -> int:
    if args.n < 2:
        raise UsageError("iso requires n >= 2")
    if not 1 <= args.k <= args.n:
        raise UsageError(f"iso requires 1 <= k <= n = {args.n}")
    p = iso_partition(args.n, args.k)
    text = dumps(p, indent=args.indent) + "\n" if args.format == "json" else dumps_dot([p])
    _write(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.source == "file":
        if not args.input:
            raise UsageError("--source file needs --in PATH")
        try:
            ps = read_partitions(args.input)
        except (OSError, ValueError) as exc:
            print(f"cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_FAIL
    elif args.n is None:
        raise UsageError(f"--source {args.source} needs --n")
    elif args.source == "iso":
        if args.n < 2:
            raise UsageError("iso source requires n >= 2")
        ps = [iso_partition(args.n, k, validate=False) for k in range(1, args.n + 1)]
    else:
        if not 1 <= args.n <= ENUMERATE_LARGE_MAX:
            raise UsageError(f"enumerate source requires 1 <= n <= {ENUMERATE_LARGE_MAX}")
        ps = _enumerate(args.n, args.engine, args.workers, args.node_limit)
        if args.n == ENUMERATE_LARGE_MAX:
            if args.seed is None:
                raise UsageError(f"n = {ENUMERATE_LARGE_MAX} is sampled; pass --seed")
            ps = en.sample_partitions(ps, args.samples, args.seed)
    summary = run_suite(ps)
    text = json.dumps(summary, indent=2, sort_keys=True)
    if args.json_out:
        Path(args.json_out).write_text(text + "\n")
    print(text)
    if not suite_passed(summary):
        for law, s in summary.items():
            for w in s["witnesses"]:
                print(f"{law}: {w}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        ps = read_partitions(args.input)
    except (OSError, ValueError) as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _write(to_svg(ps), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twisted-trees", description=__doc__.split("\n\n")[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def engine_opts(p):
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--node-limit", type=int, default=en.DEFAULT_NODE_LIMIT)

    p = sub.add_parser("count", help="count partitions of T_2n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=list(COUNT_BOUNDS), default="closed-form")
    engine_opts(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="write every partition of T_2n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--engine", choices=["structured", "oracle"], default="structured")
    p.add_argument("--isomorphic-only", action="store_true")
    p.add_argument("--paths-only", action="store_true")
    p.add_argument("--large", action="store_true", help="allow n = 5")
    p.add_argument("--indent", type=int, default=None)
    engine_opts(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("iso", help="the isomorphic partition with S_n = A_k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--indent", type=int, default=2)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify", help="run the law suite")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--source", choices=["enumerate", "iso", "file"], default="enumerate")
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--engine", choices=["structured", "oracle"], default="oracle")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json-out", default=None)
    engine_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw partitions from a JSON file as SVG")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{ap.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except en.WorkLimitExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InvalidPartition as exc:
        print(f"invalid partition: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 ok, 1 ``diff`` found differences, 2 bad input or parameters,
3 oracle size limit exceeded, 4 ``bench`` outputs disagree.
"""

from __future__ import annotations

import argparse
import multiprocessing
import statistics
import sys
import time
from dataclasses import dataclass, field

from . import api
from ._common import Params
from .corefilter import gf_core
from .generate import BlockSpec, generate_edges
from .graph import ParseError, TemporalBipartiteGraph, load_edge_list
from .oracle import DEFAULT_MAX_V, OracleSizeError

EXIT_DIFF = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3
EXIT_MISMATCH = 4


class CLIError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def format_groups(g: TemporalBipartiteGraph, groups, with_support: bool = False) -> str:
    records = sorted(api.group_labels(g, grp) for grp in groups)
    lines = []
    for members, support in records:
        line = " ".join(map(str, members))
        if with_support:
            line += " | " + " ".join(map(str, support))
        lines.append(line + "\n")
    return "".join(lines)


def parse_result_lines(text: str) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    records = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        members, _, support = line.partition("|")
        try:
            records.add((
                tuple(sorted(int(x) for x in members.split())),
                tuple(sorted(int(x) for x in support.split())),
            ))
        except ValueError:
            raise CLIError(f"line {lineno}: malformed result record {line!r}") from None
    return records


def _load(path: str) -> TemporalBipartiteGraph:
    try:
        return load_edge_list(path)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror or exc}") from None
    except ParseError as exc:
        raise CLIError(f"{path}: {exc}") from None


def _params(args) -> Params:
    try:
        return Params(args.tau_u, args.tau_v, args.lam)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CLIError(f"cannot write {output}: {exc.strerror or exc}") from None


def cmd_enumerate(args) -> int:
    g = _load(args.input)
    params = _params(args)
    if args.workers < 1:
        raise CLIError("--workers must be >= 1")
    try:
        groups = api.enumerate_mfgs(g, params, args.algorithm, args.workers, args.oracle_max_v)
    except OracleSizeError as exc:
        raise CLIError(str(exc), EXIT_ORACLE) from None
    _write(format_groups(g, groups, args.with_support), args.output)
    return 0


def cmd_stats(args) -> int:
    g = _load(args.input)
    params = _params(args)
    s = gf_core(g, params.tau_u, params.tau_v, params.lam).stats
    _write(
        f"before: |U|={s.n_u_before} |V|={s.n_v_before} |E|={s.n_edges_before} |T|={s.n_t_before}\n"
        f"after: |U|={s.n_u_after} |V|={s.n_v_after} |E|={s.n_edges_after} |T|={s.n_t_after}\n"
        f"pruned {s.pruned_pct:.2f}%\n",
        args.output,
    )
    return 0


def cmd_gen(args) -> int:
    try:
        blocks = [BlockSpec.parse(b) for b in args.block]
        edges, _ = generate_edges(args.n_u, args.n_v, args.n_t, args.edge_prob, args.seed, blocks)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    _write("".join(f"{u} {v} {t}\n" for u, v, t in edges), args.output)
    return 0


def cmd_diff(args) -> int:
    texts = []
    for path in (args.left, args.right):
        try:
            with open(path, encoding="utf-8") as fh:
                texts.append(fh.read())
        except OSError as exc:
            raise CLIError(f"cannot read {path}: {exc.strerror or exc}") from None
    left, right = (parse_result_lines(t) for t in texts)
    for rec in sorted(left - right):
        print("< " + _fmt_record(rec))
    for rec in sorted(right - left):
        print("> " + _fmt_record(rec))
    return 0 if left == right else EXIT_DIFF


def _fmt_record(rec) -> str:
    members, support = rec
    text = " ".join(map(str, members))
    return text + (" | " + " ".join(map(str, support)) if support else "")


# -- bench ------------------------------------------------------------------


@dataclass
class BenchRow:
    algorithm: str
    times: list[float] = field(default_factory=list)
    timed_out: bool = False
    output: list | None = None

    @property
    def mean(self) -> float:
        return float("inf") if self.timed_out else statistics.fmean(self.times)


@dataclass
class BenchReport:
    rows: list[BenchRow]
    consistent: bool

    def row(self, algorithm: str) -> BenchRow:
        return next(r for r in self.rows if r.algorithm == algorithm)


def _child(queue, g, params, algorithm, workers):
    t0 = time.perf_counter()
    out = api.enumerate_mfgs(g, params, algorithm, workers)
    queue.put((time.perf_counter() - t0, out))


def _timed(g, params, algorithm, workers, timeout):
    """Run one enumeration; returns (seconds, groups) or None on timeout."""
    if timeout is None:
        t0 = time.perf_counter()
        out = api.enumerate_mfgs(g, params, algorithm, workers)
        return time.perf_counter() - t0, out
    ctx = multiprocessing.get_context("fork")
    queue = ctx.Queue()
    proc = ctx.Process(target=_child, args=(queue, g, params, algorithm, workers))
    proc.start()
    try:
        return queue.get(timeout=timeout)
    except Exception:
        return None
    finally:
        if proc.is_alive():
            proc.terminate()
        proc.join()


def run_bench(g, params, algorithms, repeat=3, workers=1, timeout=None) -> BenchReport:
    rows = []
    for algorithm in algorithms:
        row = BenchRow(algorithm)
        for _ in range(repeat):
            res = _timed(g, params, algorithm, workers, timeout)
            if res is None:
                row.timed_out = True
                break
            seconds, out = res
            row.times.append(seconds)
            if row.output is None:
                row.output = out
            elif out != row.output:
                row.output = None
                return BenchReport(rows + [row], False)
        rows.append(row)
    outputs = [r.output for r in rows if not r.timed_out]
    consistent = all(o == outputs[0] for o in outputs)
    return BenchReport(rows, consistent)


def cmd_bench(args) -> int:
    g = _load(args.input)
    params = _params(args)
    algorithms = [a for a in args.algorithms.split(",") if a]
    for a in algorithms:
        if a not in api.ALGORITHMS:
            raise CLIError(f"unknown algorithm {a!r}")
    if args.repeat < 1:
        raise CLIError("--repeat must be >= 1")
    report = run_bench(g, params, algorithms, args.repeat, args.workers, args.timeout)
    if not report.consistent:
        print("error: algorithms disagree on the result set", file=sys.stderr)
        return EXIT_MISMATCH
    lines = [f"{'algorithm':<10} {'mean_s':>10} {'runs':>5} {'groups':>7}\n"]
    for r in report.rows:
        mean = "timeout" if r.timed_out else f"{r.mean:.4f}"
        groups = "-" if r.output is None else str(len(r.output))
        lines.append(f"{r.algorithm:<10} {mean:>10} {len(r.times):>5} {groups:>7}\n")
    _write("".join(lines), args.output)
    return 0


# -- argument parsing -------------------------------------------------------


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau-u", type=int, required=True)
    p.add_argument("--tau-v", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mfgroups",
        description="Maximal frequency groups in temporal bipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list maximal lambda-frequency groups")
    p.add_argument("input")
    _add_params(p)
    p.add_argument("--algorithm", choices=api.ALGORITHMS, default="vfree")
    p.add_argument("--with-support", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--oracle-max-v", type=int, default=DEFAULT_MAX_V)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="graph sizes before and after core filtering")
    p.add_argument("input")
    _add_params(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen", help="generate a random edge list")
    p.add_argument("--n-u", type=int, required=True)
    p.add_argument("--n-v", type=int, required=True)
    p.add_argument("--n-t", type=int, required=True)
    p.add_argument("--edge-prob", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--block", action="append", default=[], metavar="U,V,T",
                   help="plant a complete U x V block at T timestamps (repeatable)")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("diff", help="compare two result files as sets")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("bench", help="time algorithms and cross-check outputs")
    p.add_argument("input")
    _add_params(p)
    p.add_argument("--algorithms", default="bk,filterv,vfree")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timeout", type=float, default=None, help="seconds per run")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

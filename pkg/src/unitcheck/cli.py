"""Command-line front end: ``unitcheck check|run|bench|dump-units``.

Exit codes: 0 ok, 1 diagnostics, 2 usage or I/O error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .dimension import EncodingConfig
from .errors import CapacityOverflow
from .lang.api import check_source
from .lang.evaluate import RuntimeFailure, bench, eval_checked, eval_fast, format_output
from .numeric import Precision, format_number

EXIT_OK, EXIT_DIAG, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    encoding: str = "packed"
    radix: int = 10
    mode: str = "strict"
    exec: str = "checked"
    precision: Precision = Precision.DOUBLE

    def __post_init__(self) -> None:
        if self.radix < 3:
            raise UsageError(f"--radix must be at least 3, got {self.radix}")
        if self.mode == "compat" and self.encoding != "packed":
            raise UsageError("--compat reproduces packed-code arithmetic and needs --encoding packed")

    def encoding_config(self) -> EncodingConfig:
        try:
            return EncodingConfig(radix=self.radix, strict=self.mode == "strict")
        except CapacityOverflow as exc:
            raise UsageError(str(exc)) from None


def _check_file(path: str, cfg: CliConfig):
    with open(path, encoding="utf-8") as fh:
        source = fh.read()
    return check_source(source, path, cfg.encoding, cfg.encoding_config(), cfg.precision)


def _load(paths, cfg: CliConfig, err) -> list | None:
    """Check files concurrently; report I/O failures and return None on any."""
    def one(path):
        try:
            return _check_file(path, cfg)
        except OSError as exc:
            return exc

    with ThreadPoolExecutor() as pool:
        results = list(pool.map(one, paths))
    failed = False
    for path, res in zip(paths, results):
        if isinstance(res, OSError):
            print(f"{path}: error: {res.strerror or res}", file=err)
            failed = True
    return None if failed else results


def _report(programs, err) -> bool:
    clean = True
    for tp in programs:
        for d in tp.diagnostics:
            print(d, file=err)
            clean = False
    return clean


def cmd_check(files, cfg: CliConfig, out=sys.stdout, err=sys.stderr) -> int:
    programs = _load(files, cfg, err)
    if programs is None:
        return EXIT_USAGE
    return EXIT_OK if _report(programs, err) else EXIT_DIAG


def cmd_run(file, cfg: CliConfig, out=sys.stdout, err=sys.stderr) -> int:
    programs = _load([file], cfg, err)
    if programs is None:
        return EXIT_USAGE
    if not _report(programs, err):
        return EXIT_DIAG
    tp = programs[0]
    try:
        records = eval_fast(tp) if cfg.exec == "fast" else eval_checked(tp)
    except RuntimeFailure as exc:
        print(exc.diagnostic(), file=err)
        return EXIT_RUNTIME
    for r in records:
        print(format_output(r), file=out)
    return EXIT_OK


def cmd_bench(file, cfg: CliConfig, iterations: int, out=sys.stdout, err=sys.stderr) -> int:
    if iterations < 1:
        print("error: --iterations must be a positive integer", file=err)
        return EXIT_USAGE
    programs = _load([file], cfg, err)
    if programs is None:
        return EXIT_USAGE
    if not _report(programs, err):
        return EXIT_DIAG
    try:
        report = bench(programs[0], iterations)
    except RuntimeFailure as exc:
        print(exc.diagnostic(), file=err)
        return EXIT_RUNTIME
    for line in report.lines():
        print(line, file=out)
    if report.fast_dim_ops or not report.outputs_equal:
        print("error: fast mode diverged from checked mode", file=err)
        return EXIT_RUNTIME
    return EXIT_OK


def dump_rows(tp, packed: bool) -> list[str]:
    sys_ = tp.system
    rows = []
    for stmt in tp.program.statements:
        symbol = getattr(stmt, "symbol", None)
        if symbol is None:
            continue
        if symbol in sys_.units:
            u = sys_.units[symbol]
            dim, value = u.dim, u.factor
        else:
            q = sys_.constants[symbol]
            dim, value = sys_.encoding.to_vector(q.dim), q.value
        cols = [symbol, sys_.format_dim(dim), format_number(value)]
        if packed:
            cols.append(str(sys_.encoding.from_vector(dim).code))
        rows.append("  ".join(cols))
    return rows


def cmd_dump_units(file, cfg: CliConfig, out=sys.stdout, err=sys.stderr) -> int:
    programs = _load([file], cfg, err)
    if programs is None:
        return EXIT_USAGE
    if not _report(programs, err):
        return EXIT_DIAG
    for row in dump_rows(programs[0], cfg.encoding == "packed"):
        print(row, file=out)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--encoding", choices=("vector", "packed"), default="packed")
    common.add_argument("--radix", type=int, default=10)
    common.add_argument("--compat", action="store_true",
                        help="truncating packed-code arithmetic, no capacity checks")
    common.add_argument("--fast", action="store_true",
                        help="evaluate on bare numbers after checking")
    common.add_argument("--precision", choices=("single", "double"), default="double")

    p = argparse.ArgumentParser(prog="unitcheck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", parents=[common], help="check files for dimensional consistency")
    c.add_argument("files", nargs="+")
    r = sub.add_parser("run", parents=[common], help="check and evaluate a program")
    r.add_argument("file")
    b = sub.add_parser("bench", parents=[common], help="time checked against fast evaluation")
    b.add_argument("file")
    b.add_argument("--iterations", type=int, default=1000)
    d = sub.add_parser("dump-units", parents=[common], help="list folded units and constants")
    d.add_argument("file")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = CliConfig(
            encoding=args.encoding,
            radix=args.radix,
            mode="compat" if args.compat else "strict",
            exec="fast" if args.fast else "checked",
            precision=Precision.parse(args.precision),
        )
        cfg.encoding_config()
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if args.command == "check":
        return cmd_check(args.files, cfg, out, err)
    if args.command == "run":
        return cmd_run(args.file, cfg, out, err)
    if args.command == "bench":
        return cmd_bench(args.file, cfg, args.iterations, out, err)
    return cmd_dump_units(args.file, cfg, out, err)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``semidyn {minimize,trie,verify,bench}``.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, TextIO, Tuple

from .bench import SCENARIOS, BenchConfig, run_benchmarks, write_csv
from .engines.core import ENGINE_KINDS
from .engines.two_layer import BlockScheme
from .errors import UnsupportedOperationError
from .rolling_hash import OrderMode
from .scan import minimizer_set
from .trie import build_trie, trie_path_minimizers
from .verify import run_suites

log = logging.getLogger("semidyn")

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    subcommand: str
    inputs: List[str] = field(default_factory=list)
    w: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None
    engine: str = "two-stack"
    engines: List[str] = field(default_factory=list)
    order: OrderMode = OrderMode.KRF
    seed: int = 0
    block_scheme: str = "progressing"
    scenario: List[str] = field(default_factory=list)
    n: int = 1_000_000
    reps: int = 3
    cases: int = 50
    out: Optional[str] = None
    verbose: bool = False

    def validate(self) -> None:
        if self.w is not None and any(w < 2 for w in _as_list(self.w)):
            raise UsageError(f"--w must be >= 2, got {self.w}")
        if self.k is not None and self.k < 1:
            raise UsageError(f"--k must be >= 1, got {self.k}")
        if self.l is not None and self.k is not None and self.l < self.k:
            raise UsageError(f"--l must be >= --k, got l={self.l}, k={self.k}")
        for e in [self.engine] + list(self.engines):
            if e not in ENGINE_KINDS:
                raise UsageError(f"unknown engine {e!r}; expected one of {', '.join(ENGINE_KINDS)}")
        for s in self.scenario:
            if s not in SCENARIOS:
                raise UsageError(f"unknown scenario {s!r}; expected one of {', '.join(SCENARIOS)}")
        try:
            BlockScheme.parse(self.block_scheme)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if self.reps < 1:
            raise UsageError("--reps must be >= 1")


def _as_list(x) -> list:
    return x if isinstance(x, list) else [x]


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _name_list(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semidyn", description="Minimizers of semi-dynamic strings.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(sp, engine=True):
        sp.add_argument("--order", choices=[m.value for m in OrderMode], default="krf")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--block-scheme", default="progressing", help="progressing | fixed:<c>")
        sp.add_argument("--out", help="output file (default: stdout)")
        sp.add_argument("--verbose", action="store_true")
        if engine:
            sp.add_argument("--engine", default="two-stack", help=f"one of {', '.join(ENGINE_KINDS)}")

    m = sub.add_parser("minimize", help="minimizer set of each input string")
    m.add_argument("inputs", nargs="+", help="plain text (one string per file) or FASTA")
    m.add_argument("--w", type=int, required=True)
    m.add_argument("--k", type=int, required=True)
    common(m)

    t = sub.add_parser("trie", help="path minimizers of the trie of the input lines")
    t.add_argument("inputs", nargs=1, help="text file, one string per line")
    t.add_argument("--l", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    common(t)

    v = sub.add_parser("verify", help="randomized cross-check of all engines against the oracle")
    v.add_argument("--engines", type=_name_list, default=list(ENGINE_KINDS[1:]))
    v.add_argument("--cases", type=int, default=50, help="seeded border-op cases")
    v.add_argument("--reps", type=int, default=1, help="run the suites this many times with shifted seeds")
    common(v, engine=False)

    b = sub.add_parser("bench", help="timing runs, BenchRecord CSV")
    b.add_argument("--engines", type=_name_list, default=["heap", "deque", "two-stack"])
    b.add_argument("--scenario", type=_name_list, default=["one-way-slide"],
                   help=f"comma list of {', '.join(SCENARIOS)}")
    b.add_argument("--w", type=_int_list, default=[2 ** j for j in range(4, 12)], help="comma list")
    b.add_argument("--k", type=int, default=None, help="default: 4 log w / log 4")
    b.add_argument("--n", type=int, default=1_000_000)
    b.add_argument("--reps", type=int, default=3)
    common(b, engine=False)
    return p


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(ns.subcommand)
    for name in ("inputs", "w", "k", "l", "engine", "engines", "seed", "block_scheme", "scenario", "n", "reps",
                 "cases", "out", "verbose"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            setattr(cfg, name, getattr(ns, name))
    cfg.order = OrderMode(ns.order)
    cfg.validate()
    return cfg


# input handling

def read_records(path: str) -> List[Tuple[str, bytes]]:
    """FASTA records as (name, letters), or one record named after the file for plain text."""
    with open(path, "rb") as fh:
        data = fh.read()
    lines = data.splitlines()
    if not data.lstrip().startswith(b">"):
        return [(path, b"".join(line.strip() for line in lines))]
    records: List[Tuple[str, bytes]] = []
    name, seq = None, []
    for line in lines:
        if line.startswith(b">"):
            if name is not None:
                records.append((name, b"".join(seq)))
            header = line[1:].decode(errors="replace").strip()
            name, seq = (header.split()[0] if header else f"record{len(records) + 1}"), []
        elif name is not None:
            seq.append(line.strip())
    if name is not None:
        records.append((name, b"".join(seq)))
    return records


def _open_out(path: Optional[str]) -> TextIO:
    return sys.stdout if path is None else open(path, "w", newline="\n")


# subcommands

def cmd_minimize(cfg: RunConfig) -> int:
    records = []
    for path in cfg.inputs:
        records.extend(read_records(path))
    need = cfg.w + cfg.k - 1
    rows: List[Tuple[str, int]] = []
    for name, seq in records:
        if len(seq) < need:
            log.warning("skipping %s: length %d is below w+k-1 = %d", name, len(seq), need)
            continue
        ms = minimizer_set(seq, cfg.w, cfg.k, cfg.engine, cfg.order, seed=cfg.seed, block_scheme=cfg.block_scheme)
        rows.extend((name, p) for p in ms.positions)
    out = _open_out(cfg.out)
    try:
        if len(records) > 1:
            out.write("record,pos\n")
            out.writelines(f"{name},{p}\n" for name, p in rows)
        else:
            out.writelines(f"{p}\n" for _, p in rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_trie(cfg: RunConfig) -> int:
    with open(cfg.inputs[0], "rb") as fh:
        strings = [line.strip() for line in fh.read().splitlines()]
    t = build_trie(s for s in strings if s)
    rep = trie_path_minimizers(t, cfg.l, cfg.k, cfg.engine, cfg.order, seed=cfg.seed,
                               block_scheme=cfg.block_scheme, verbose=cfg.verbose)
    out = _open_out(cfg.out)
    try:
        out.writelines(f"{v}\n" for v in rep.sorted_nodes())
        if cfg.verbose:
            out.write("\nnode,offset\n")
            out.writelines(f"{v},{j}\n" for v, j in sorted(rep.pairs))
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    out = _open_out(cfg.out)
    failed = 0
    try:
        for rep in range(cfg.reps):
            seed = cfg.seed + rep * 1_000_003

            def progress(r):
                if cfg.verbose:
                    out.write(f"{r.suite} seed={r.seed} {r.engine}: {'ok' if r.ok else 'FAIL'}\n")

            report = run_suites(seed, engine_cases=cfg.cases, scan_cases=max(1, cfg.cases // 5),
                                trie_cases=max(1, cfg.cases // 10), engines=cfg.engines, progress=progress)
            for suite in ("engines", "scan", "trie"):
                rs = [r for r in report.results if r.suite == suite]
                out.write(f"{suite}: {sum(r.ok for r in rs)} passed, {sum(not r.ok for r in rs)} failed\n")
            out.write(f"witness violations: {report.witness_violations}\n")
            for r in report.failed:
                out.write(f"MISMATCH {r.suite} seed={r.seed} engine={r.engine}: {r.detail}\n")
            failed += len(report.failed) + report.witness_violations
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_bench(cfg: RunConfig) -> int:
    configs = []
    for scenario in cfg.scenario:
        if "deque" in cfg.engines and scenario != "one-way-slide":
            log.warning("skipping deque for %s: it needs delete_last", scenario)
        for w in cfg.w:
            for e in cfg.engines:
                if e == "deque" and scenario != "one-way-slide":
                    continue
                configs.append(BenchConfig(e, w, cfg.n, cfg.k, scenario, cfg.seed, cfg.order, cfg.block_scheme))
    progress = (lambda msg: log.info(msg)) if cfg.verbose else None
    records = run_benchmarks(configs, reps=cfg.reps, progress=progress)
    out = _open_out(cfg.out)
    try:
        write_csv(records, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


COMMANDS = {"minimize": cmd_minimize, "trie": cmd_trie, "verify": cmd_verify, "bench": cmd_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(format="%(name)s: %(levelname)s: %(message)s", level=logging.WARNING)
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(f"semidyn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if cfg.verbose:
        log.setLevel(logging.INFO)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except OSError as exc:
        print(f"semidyn: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, UnsupportedOperationError) as exc:
        print(f"semidyn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Benchmark scenarios and BenchRecord CSV output.

Configurations are timed in interleaved chunks: every configuration
advances by one chunk per round, in a shuffled order, so slow spells of a
shared machine are spread over all of them instead of landing on whichever
configuration happened to be running.
"""

from __future__ import annotations

import csv
import gc
import io
import math
import random
import time
from dataclasses import asdict, dataclass, fields
from typing import Callable, Dict, Iterator, List, Optional, Sequence, TextIO

from .engines.core import make_engine
from .rolling_hash import HashConfig, OrderMode
from .trie import build_trie, trie_path_minimizers

SCENARIOS = ("one-way-slide", "oscillating-window", "trie-dfs")
CSV_FIELDS = ("engine", "n", "w", "k", "seed", "total_ops", "elapsed_ns", "ns_per_op", "max_live_pairs",
              "rebuild_count", "scenario")


@dataclass
class BenchRecord:
    engine: str
    n: int
    w: int
    k: int
    seed: int
    total_ops: int
    elapsed_ns: int
    ns_per_op: float
    max_live_pairs: int
    rebuild_count: int
    scenario: str


@dataclass
class BenchConfig:
    engine: str
    w: int
    n: int = 1_000_000
    k: Optional[int] = None  # default: default_k(w)
    scenario: str = "one-way-slide"
    seed: int = 0
    mode: OrderMode = OrderMode.KRF
    block_scheme: str = "progressing"

    @property
    def kk(self) -> int:
        return self.k if self.k is not None else default_k(self.w)


def default_k(w: int, sigma: int = 4) -> int:
    """k = 4 log(l) / log(sigma), rounded, with l = w."""
    return max(1, round(4 * math.log(w) / math.log(sigma)))


def synthetic_string(n: int, seed: int = 0, alphabet: bytes = b"ACGT") -> bytes:
    rng = random.Random(seed)
    return bytes(rng.choices(alphabet, k=n))


class _Run:
    """One repetition of one configuration, driven chunk by chunk."""

    def __init__(self, cfg: BenchConfig, S: bytes, chunk: int):
        self.cfg = cfg
        k = cfg.kk
        hcfg = HashConfig.from_seed(k, cfg.seed) if OrderMode(cfg.mode) is OrderMode.KRF else None
        self.engine = make_engine(cfg.engine, k, cfg.mode, hcfg, block_scheme=cfg.block_scheme)
        self.elapsed = 0
        self.ops = 0
        self.chunks: List[tuple] = []  # (elapsed_ns, ops) per timed chunk
        if cfg.scenario == "one-way-slide":
            self._gen = _one_way(self, S, cfg.w + k - 1, chunk)
        elif cfg.scenario == "oscillating-window":
            self._gen = _oscillating(self, S, cfg.w + k - 1, chunk)
        elif cfg.scenario == "trie-dfs":
            self._gen = _trie_dfs(self, S, cfg, k, hcfg)
        else:
            raise ValueError(f"unknown scenario {cfg.scenario!r}; expected one of {', '.join(SCENARIOS)}")
        self.done = False
        next(self._gen)  # untimed set-up (priming the first window)

    def step(self) -> None:
        ops0 = self.ops
        t0 = time.perf_counter_ns()
        try:
            next(self._gen)
        except StopIteration:
            self.done = True
        dt = time.perf_counter_ns() - t0
        self.elapsed += dt
        if self.ops > ops0:
            self.chunks.append((dt, self.ops - ops0))

    def record(self) -> BenchRecord:
        e = self.engine
        return BenchRecord(self.cfg.engine, self.cfg.n, self.cfg.w, self.cfg.kk, self.cfg.seed, self.ops,
                           self.elapsed, self.elapsed / self.ops if self.ops else 0.0, e.peak_live_pairs,
                           getattr(e, "rebuild_count", 0), self.cfg.scenario)


def _one_way(run: _Run, S: bytes, L: int, chunk: int) -> Iterator[None]:
    eng = run.engine
    append, delete_first, query = eng.append, eng.delete_first, eng.minimizer
    for a in S[:L]:
        append(a)
    yield
    n = len(S)
    for start in range(L, n, chunk):
        for a in S[start:min(n, start + chunk)]:
            append(a)
            delete_first()
            query()
        run.ops += 2 * (min(n, start + chunk) - start)
        yield


def _oscillating(run: _Run, S: bytes, L: int, chunk: int) -> Iterator[None]:
    """Slide right 2w steps, back left w steps, repeat: net progress w per cycle."""
    eng = run.engine
    append, delete_first, query = eng.append, eng.delete_first, eng.minimizer
    prepend, delete_last = eng.prepend, eng.delete_last
    for a in S[:L]:
        append(a)
    yield
    n = len(S)
    w = max(1, L - eng.k + 1)
    lo, hi = 0, L  # window is S[lo:hi]
    done_in_chunk = 0
    forward = True
    left = 2 * w
    while True:
        if forward:
            if hi >= n:
                break
            append(S[hi])
            delete_first()
            hi += 1
            lo += 1
        else:
            lo -= 1
            hi -= 1
            prepend(S[lo])
            delete_last()
        query()
        left -= 1
        if left == 0:
            forward = not forward
            left = 2 * w if forward else w
        done_in_chunk += 1
        if done_in_chunk == chunk:
            run.ops += 2 * done_in_chunk
            done_in_chunk = 0
            yield
    run.ops += 2 * done_in_chunk
    yield


def bench_trie_strings(S: bytes, L: int, seed: int = 0) -> List[bytes]:
    """Heavy-path trie input: the first quarter of S is a backbone, and every
    later piece of length L..4L hangs off a random backbone prefix."""
    rng = random.Random(seed)
    backbone = S[:max(L, len(S) // 4)]
    strings, pos = [backbone], len(backbone)
    while pos < len(S):
        m = rng.randint(L, 4 * L)
        strings.append(backbone[:rng.randint(0, len(backbone))] + S[pos:pos + m])
        pos += m
    return strings


def _trie_dfs(run: _Run, S: bytes, cfg: BenchConfig, k: int, hcfg) -> Iterator[None]:
    t = build_trie(bench_trie_strings(S, cfg.w + k - 1, cfg.seed))
    yield
    rep = trie_path_minimizers(t, cfg.w + k - 1, k, cfg.engine, cfg.mode, hcfg, engine=run.engine)
    run.ops = rep.border_ops
    yield


@dataclass
class SpaceResult:
    l: int
    k: int
    scheme: str
    text_kind: str
    slide_peak: int
    oscillating_peak: int
    witness_violations: int


def space_run(l: int, scheme: str = "progressing", text_kind: str = "random", k: Optional[int] = None,
              slide: float = 0.6, cycles: int = 2, seed: int = 0) -> SpaceResult:
    """Peak live pairs of a two-layer engine over a window of `l` fragments.

    The window is built in one go, then slid right by ``slide * l`` steps,
    then oscillated `cycles` times (right l/8, back l/16).  Peaks are kept
    per phase; each includes whatever rebuilds the phase triggers.
    """
    from .engines.two_layer import TwoLayerEngine
    from .sdstring import SemiDynamicString

    k = k if k is not None else default_k(l)
    L = l + k - 1
    steps = int(slide * l) + cycles * (l // 8)
    n = L + steps + 1
    S = synthetic_string(n, seed) if text_kind == "random" else b"A" * n
    cfg = HashConfig.from_seed(k, seed)
    eng = TwoLayerEngine(k, "krf", cfg, text=SemiDynamicString(k, "krf", cfg, letters=S[:L]), scheme=scheme)
    append, delete_first = eng.append, eng.delete_first
    prepend, delete_last = eng.prepend, eng.delete_last

    def phase_start():
        eng.peak_live_pairs = eng.live_pair_count

    phase_start()
    lo, hi = 0, L
    for a in S[hi:hi + int(slide * l)]:
        append(a)
        delete_first()
    lo, hi = lo + int(slide * l), hi + int(slide * l)
    slide_peak = eng.peak_live_pairs
    phase_start()
    for _ in range(cycles):
        for _ in range(l // 8):
            append(S[hi])
            delete_first()
            lo, hi = lo + 1, hi + 1
        for _ in range(l // 16):
            lo, hi = lo - 1, hi - 1
            prepend(S[lo])
            delete_last()
    return SpaceResult(l, k, scheme, text_kind, slide_peak, eng.peak_live_pairs, eng.witness_violations)


def run_benchmarks(configs: Sequence[BenchConfig], reps: int = 3, chunk: int = 1_000,
                   progress: Optional[Callable[[str], None]] = None) -> List[BenchRecord]:
    """Time every configuration `reps` times, interleaving chunks; return averaged records.

    Records come back in the order of `configs`.  The elapsed time of a
    record is the mean over repetitions; the other fields come from the
    first repetition (they are deterministic).
    """
    strings: Dict[tuple, bytes] = {}
    per_cfg: List[List[BenchRecord]] = [[] for _ in configs]
    order_rng = random.Random(12345)
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for rep in range(reps):
            runs = []
            for cfg in configs:
                key = (cfg.n, cfg.seed)
                if key not in strings:
                    strings[key] = synthetic_string(cfg.n, cfg.seed)
                runs.append(_Run(cfg, strings[key], chunk))
            live = list(range(len(runs)))
            while live:
                order_rng.shuffle(live)
                for i in live:
                    runs[i].step()
                live = [i for i in live if not runs[i].done]
                gc.collect()
            for i, r in enumerate(runs):
                per_cfg[i].append(r.record())
            if progress is not None:
                progress(f"repetition {rep + 1}/{reps} done")
            del runs
    finally:
        if gc_was_enabled:
            gc.enable()
    out = []
    for recs in per_cfg:
        first = recs[0]
        elapsed = round(sum(r.elapsed_ns for r in recs) / len(recs))
        out.append(BenchRecord(**{**asdict(first), "elapsed_ns": elapsed,
                                  "ns_per_op": elapsed / first.total_ops if first.total_ops else 0.0}))
    return out


def write_csv(records: Sequence[BenchRecord], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        row = asdict(r)
        row["ns_per_op"] = f"{r.ns_per_op:.3f}"
        writer.writerow([row[f] for f in CSV_FIELDS])


def records_to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def read_csv(text: str) -> List[BenchRecord]:
    types = {f.name: f.type for f in fields(BenchRecord)}
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        vals = {}
        for name in CSV_FIELDS:
            t = types[name]
            vals[name] = float(row[name]) if t == "float" else int(row[name]) if t == "int" else row[name]
        out.append(BenchRecord(**vals))
    return out

"""Seeded randomized cross-checks of every engine against the oracle."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from .engines.core import ENGINE_KINDS, Op, make_engine
from .rolling_hash import HashConfig, OrderMode
from .scan import brute_force_minimizer_set, minimizer_set, minimizer_set_space_efficient
from .trie import build_trie, oracle_trie_minimizers, trie_path_minimizers

ALPHABETS = {2: b"AC", 4: b"ACGT", 26: b"ABCDEFGHIJKLMNOPQRSTUVWXYZ"}
OPS_FULL = ("prepend", "append", "delete_first", "delete_last")
OPS_LIMITED = ("prepend", "append", "delete_first")


def random_ops(rng: random.Random, length: int, alphabet: bytes, kinds: Sequence[str] = OPS_FULL,
               max_size: Optional[int] = None) -> List[Op]:
    """Random border-op sequence that never deletes from an empty string.

    Insertions are a little more likely than deletions while the string is
    short, so sizes wander over a useful range; `max_size` caps growth.
    """
    ops: List[Op] = []
    size = 0
    inserts = [k for k in kinds if k in ("prepend", "append")]
    deletes = [k for k in kinds if k.startswith("delete")]
    for _ in range(length):
        grow = size == 0 or (max_size is None or size < max_size) and rng.random() < 0.55
        if grow:
            ops.append(Op(rng.choice(inserts), rng.choice(alphabet)))
            size += 1
        else:
            ops.append(Op(rng.choice(deletes)))
            size -= 1
    return ops


@dataclass
class CaseResult:
    suite: str
    seed: int
    engine: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    results: List[CaseResult] = field(default_factory=list)
    witness_violations: int = 0

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.results)

    @property
    def failed(self) -> List[CaseResult]:
        return [r for r in self.results if not r.ok]


def engine_case(seed: int, max_len: int = 10_000):
    """Parameters of the seeded border-op case `seed`: (ops, k, mode, alphabet size, limited).

    Lengths are log-uniform in [1, max_len] so short edge-heavy sequences
    and long ones are both common.
    """
    rng = random.Random(seed)
    sigma = rng.choice((2, 4, 26))
    k = rng.choice((1, 2, 4, 8))
    mode = rng.choice((OrderMode.LEX, OrderMode.KRF))
    length = min(max_len, int(math.exp(rng.uniform(0, math.log(max_len + 1)))))
    limited = rng.random() < 0.25
    ops = random_ops(rng, max(1, length), ALPHABETS[sigma], OPS_LIMITED if limited else OPS_FULL,
                     max_size=rng.choice((8, 64, 512)))
    return ops, k, mode, sigma, limited


def build(kind: str, k: int, mode, cfg):
    """make_engine, also accepting 'two-layer/<scheme>' such as 'two-layer/fixed:4'."""
    kind, _, scheme = kind.partition("/")
    return make_engine(kind, k, mode, cfg, block_scheme=scheme or "progressing")


def run_ops(ops: Sequence[Op], engine) -> list:
    """Apply `ops`, returning the minimizer after each one."""
    out = []
    q = engine.minimizer
    for op in ops:
        if op.letter is None:
            getattr(engine, op.kind)()
        else:
            getattr(engine, op.kind)(op.letter)
        out.append(q())
    return out


def check_engine_case(seed: int, kinds: Sequence[str], max_len: int = 10_000) -> Tuple[List[CaseResult], int]:
    """Replay case `seed` on each engine in `kinds` and compare with the oracle after every op.

    Deque engines get the case with delete_last ops removed.  Returns the
    results and the total amortization witness violations.
    """
    ops, k, mode, sigma, limited = engine_case(seed, max_len)
    cfg = HashConfig.from_seed(k, seed) if mode is OrderMode.KRF else None
    limited_ops = ops if limited else _drop_invalid([op for op in ops if op.kind != "delete_last"])
    want_full = want_limited = None
    results, violations = [], 0
    for kind in kinds:
        case_ops = limited_ops if kind == "deque" else ops
        if case_ops is ops:
            if want_full is None:
                want_full = run_ops(ops, make_engine("oracle", k, mode, cfg))
            want = want_full
        else:
            if want_limited is None:
                want_limited = run_ops(case_ops, make_engine("oracle", k, mode, cfg))
            want = want_limited
        eng = build(kind, k, mode, cfg)
        try:
            got = run_ops(case_ops, eng)
        except Exception as exc:  # surfaced as a failing case
            results.append(CaseResult("engines", seed, kind, False, f"raised {exc!r}"))
            continue
        violations += getattr(eng, "witness_violations", 0)
        if got == want:
            results.append(CaseResult("engines", seed, kind, True))
            continue
        i = next(j for j in range(len(got)) if got[j] != want[j])
        results.append(CaseResult(
            "engines", seed, kind, False,
            f"k={k} mode={mode.value} sigma={sigma}: after op {i} got {got[i]} want {want[i]}; "
            f"reproducer ops[:{i + 1}] = {list(case_ops[:i + 1])!r}"))
    return results, violations


def _drop_invalid(ops: Sequence[Op]) -> List[Op]:
    out, size = [], 0
    for op in ops:
        if op.kind.startswith("delete"):
            if size == 0:
                continue
            size -= 1
        else:
            size += 1
        out.append(op)
    return out


def minimal_reproducer(ops: Sequence[Op], kind: str, k: int, mode, cfg) -> List[Op]:
    """Shortest prefix of `ops` on which `kind` disagrees with the oracle."""
    got = run_ops(ops, build(kind, k, mode, cfg))
    want = run_ops(ops, make_engine("oracle", k, mode, cfg))
    for i, (a, b) in enumerate(zip(got, want)):
        if a != b:
            return list(ops[:i + 1])
    return list(ops)


def check_scan_case(seed: int, max_n: int = 4096) -> List[CaseResult]:
    rng = random.Random(seed)
    w = rng.choice((2, 4, 16, 64))
    k = rng.choice((1, 3, 8))
    mode = rng.choice((OrderMode.LEX, OrderMode.KRF))
    n = rng.randint(w + k - 1, max(w + k - 1, max_n))
    S = bytes(rng.choice(ALPHABETS[rng.choice((2, 4, 26))]) for _ in range(n))
    want = brute_force_minimizer_set(S, w, k, mode, seed=seed)
    out = []
    for kind in ("heap", "deque", "two-stack", "two-layer"):
        got = minimizer_set(S, w, k, kind, mode, seed=seed).positions
        out.append(CaseResult("scan", seed, kind, got == want,
                              "" if got == want else f"n={n} w={w} k={k} mode={mode.value}"))
    got = minimizer_set_space_efficient(S, w, k, mode, seed=seed).positions
    out.append(CaseResult("scan", seed, "space-efficient", got == want,
                          "" if got == want else f"n={n} w={w} k={k} mode={mode.value}"))
    return out


def random_trie_strings(rng: random.Random, max_strings: int = 200, max_len: int = 64) -> List[bytes]:
    alphabet = ALPHABETS[rng.choice((2, 4))]
    return [bytes(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
            for _ in range(rng.randint(0, max_strings))]


def check_trie_case(seed: int, max_strings: int = 200) -> List[CaseResult]:
    rng = random.Random(seed)
    t = build_trie(random_trie_strings(rng, max_strings))
    l = rng.choice((4, 8, 16))
    k = rng.choice((2, 3, 4))
    mode = rng.choice((OrderMode.LEX, OrderMode.KRF))
    want = oracle_trie_minimizers(t, l, k, mode, seed=seed).reported_nodes
    out = []
    for kind in ("heap", "two-stack", "two-layer"):
        got = trie_path_minimizers(t, l, k, kind, mode, seed=seed).reported_nodes
        out.append(CaseResult("trie", seed, kind, got == want,
                              "" if got == want else f"l={l} k={k} mode={mode.value} nodes={t.node_count}"))
    return out


def run_suites(seed: int = 0, engine_cases: int = 50, scan_cases: int = 10, trie_cases: int = 5,
               max_len: int = 2000, engines: Sequence[str] = ENGINE_KINDS[1:],
               progress: Optional[Callable[[CaseResult], None]] = None) -> VerifyReport:
    """Run all three suites; case seeds are `seed`, `seed`+1, ..."""
    report = VerifyReport()

    def add(r: CaseResult):
        report.results.append(r)
        if progress is not None:
            progress(r)

    for s in range(seed, seed + engine_cases):
        rs, v = check_engine_case(s, engines, max_len)
        report.witness_violations += v
        for r in rs:
            add(r)
    for s in range(seed, seed + scan_cases):
        for r in check_scan_case(s, max_n=max_len):
            add(r)
    for s in range(seed, seed + trie_cases):
        for r in check_trie_case(s):
            add(r)
    return report


__all__ = ["random_ops", "engine_case", "check_engine_case", "check_scan_case", "check_trie_case",
           "run_ops", "minimal_reproducer", "run_suites", "VerifyReport", "CaseResult"]

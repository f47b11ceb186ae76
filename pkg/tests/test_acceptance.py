"""Acceptance criteria, one test each.  Every test prints a single
``[PASS]``/``[FAIL]`` line (visible with ``pytest -s`` or in ``-v`` runs via
the terminal summary) and then asserts.

Run just this file with ``pytest -s tests/test_acceptance.py``.
"""

import math
import random
import time

import numpy as np
import pytest

from conftest import DEQUE_EX, STACK_EX, STACK_EX_RANKS
from semidyn import (FragmentPair, HashConfig, SemiDynamicString, TwoStackEngine, build_trie, make_engine,
                     minimizer_set, minimizer_set_space_efficient, oracle_trie_minimizers, trie_path_minimizers)
from semidyn.bench import BenchConfig, run_benchmarks, space_run
from semidyn.engines.core import fragment_value
from semidyn.rolling_hash import krf_direct, roll_left, roll_right
from semidyn.verify import check_engine_case, random_trie_strings, ALPHABETS

LINES = []


def report(name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
    LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def engine_suite():
    """Criterion 1's 1000 cases; criterion 4 reads the witness counters from the same run."""
    kinds = ["heap", "deque", "two-stack", "two-layer", "two-layer/fixed:3"]
    t0 = time.perf_counter()
    failures, violations, runs = [], 0, 0
    for seed in range(1000):
        results, v = check_engine_case(seed, kinds, max_len=10_000)
        violations += v
        runs += len(results)
        failures.extend(r for r in results if not r.ok)
    return dict(failures=failures, violations=violations, runs=runs, elapsed=time.perf_counter() - t0)


def test_c1_engine_oracle_equivalence(engine_suite):
    s = engine_suite
    detail = f"{s['runs']} engine runs, {len(s['failures'])} mismatches, {s['elapsed']:.1f}s (limit 120s)"
    if s["failures"]:
        detail += f"; first: {s['failures'][0].engine} seed={s['failures'][0].seed} {s['failures'][0].detail[:200]}"
    report("C1 engines match oracle after every op", not s["failures"] and s["elapsed"] < 120, detail)


def test_c2_worked_example_vectors():
    checks = {}
    d = make_engine("deque", 3, "lex")
    for a in DEQUE_EX:
        d.append(a)
    kept = {p.pos for p in d.pairs()}
    checks["deque_ex survivors"] = kept == {1, 4, 6, 8, 9}
    checks["deque_ex crossed"] = set(range(10)) - kept == {0, 2, 3, 5, 7}

    ts = TwoStackEngine(3, "lex", text=SemiDynamicString(3, "lex", letters=STACK_EX), pivot=7)
    left, right = ts.left_stack(), ts.right_stack()
    checks["stack_ex left top"] = (left[-1].pos, STACK_EX_RANKS[left[-1].pos]) == (0, 0)
    checks["stack_ex right top"] = (right[-1].pos, STACK_EX_RANKS[right[-1].pos]) == (9, 2)
    checks["stack_ex minimizer"] = ts.minimizer().pos == 0

    t = build_trie([b"ATCAATAG", b"ACC", b"ACT", b"ATT", b"ATCACG", b"ATCACT", b"ATCAAG", b"ATCAATAA"])
    window_node = next(v for v in range(t.node_count) if t.depth[v] >= 5 and t.spell_up(v, 5) == b"GCACT")
    rep = trie_path_minimizers(t, 5, 2, "two-stack", "lex", verbose=True)
    offset = dict(rep.pairs)[window_node]
    ac_node = t.ancestor(window_node, offset)
    checks["trie_ex offset"] = offset == 2
    checks["trie_ex AC node reported"] = t.spell_up(ac_node, 2) == b"AC" and ac_node in rep.reported_nodes
    bad = [k for k, ok in checks.items() if not ok]
    report("C2 worked-example vectors", not bad, f"{len(checks)} checks" + (f", failed: {bad}" if bad else ""))


def numpy_minimizers(S, w, k, mode, cfg):
    """Per-window argmin over directly valued k-mers (argmin keeps the leftmost tie)."""
    if mode == "lex":
        vals = np.array([int.from_bytes(S[i:i + k], "big") for i in range(len(S) - k + 1)], dtype=np.uint64)
    else:
        vals = np.array([fragment_value(S[i:i + k], "krf", cfg) for i in range(len(S) - k + 1)], dtype=np.int64)
    windows = np.lib.stride_tricks.sliding_window_view(vals, w)
    return sorted(set((np.argmin(windows, axis=1) + np.arange(len(windows))).tolist()))


def test_c3_minimizer_sets():
    grid = [(w, k) for w in (2, 4, 16, 64) for k in (1, 3, 8)]
    kinds = ["heap", "deque", "two-stack", "two-layer"]
    rng = random.Random(2024)
    t0 = time.perf_counter()
    bad = []
    for i in range(200):
        w, k = grid[i % len(grid)]
        mode = ("lex", "krf")[(i // len(grid)) % 2]
        n = rng.randint(w + k - 1, 4096)
        S = bytes(rng.choice(ALPHABETS[rng.choice((2, 4, 26))]) for _ in range(n))
        cfg = HashConfig.from_seed(k, i) if mode == "krf" else None
        want = numpy_minimizers(S, w, k, mode, cfg)
        got = {kind: minimizer_set(S, w, k, kind, mode, cfg).positions for kind in kinds}
        got["space-efficient"] = minimizer_set_space_efficient(S, w, k, mode, cfg).positions
        bad.extend((i, kind) for kind, pos in got.items() if pos != want)
    elapsed = time.perf_counter() - t0
    report("C3 minimizer sets equal the brute force", not bad and elapsed < 120,
           f"200 strings x 5 scanners, {len(bad)} mismatches {bad[:5]}, {elapsed:.1f}s (limit 120s)")


def test_c4_amortization_witnesses(engine_suite):
    v = engine_suite["violations"]
    report("C4 amortization witnesses", v == 0, f"{v} violations over the criterion-1 suites")


def test_c5_space_bounds():
    rows, bad = [], []
    for l in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
        for text_kind in ("random", "constant"):
            r = space_run(l, "progressing", text_kind)
            bound = 8 * math.sqrt(l) + 8
            rows.append(r)
            if max(r.slide_peak, r.oscillating_peak) > bound or r.witness_violations:
                bad.append(r)
            c = math.isqrt(l)
            for cc in ((c // 4, c, 4 * c) if l <= 10 ** 5 else (c,)):
                r = space_run(l, f"fixed:{cc}", text_kind)
                rows.append(r)
                if max(r.slide_peak, r.oscillating_peak) > 4 * (cc + l / cc) + 8 or r.witness_violations:
                    bad.append(r)
    worst = max(rows, key=lambda r: max(r.slide_peak, r.oscillating_peak) / math.sqrt(r.l))
    report("C5 two-layer space bounds", not bad,
           f"{len(rows)} runs; worst peak/sqrt(l) = {max(worst.slide_peak, worst.oscillating_peak) / math.sqrt(worst.l):.2f}"
           f" ({worst.scheme}, {worst.text_kind}, l={worst.l})" + (f"; violations {bad}" if bad else ""))


def test_c6_rolling_hash():
    rng = random.Random(6)
    checked, bad = 0, 0
    for i in range(500):
        n = rng.randint(1, 256)
        k = rng.randint(1, min(16, n))
        S = bytes(rng.randrange(256) for _ in range(n))
        cfg = HashConfig.from_seed(k, i)
        direct = [krf_direct(S[p:p + k], cfg) for p in range(n - k + 1)]
        for p in range(n - k):
            bad += roll_right(direct[p], S[p], S[p + k], cfg) != direct[p + 1]
            bad += roll_left(direct[p + 1], S[p], S[p + k], cfg) != direct[p]
            checked += 2
    report("C6 rolling hash equals direct fingerprints", bad == 0, f"{checked} rolls, {bad} mismatches")


def test_c7_trie_equivalence():
    grid = [(l, k) for l in (4, 8, 16) for k in (2, 3, 4)]
    rng = random.Random(7)
    bad = []
    for i in range(100):
        t = build_trie(random_trie_strings(rng, 200, 64))
        l, k = grid[i % len(grid)]
        mode = ("lex", "krf")[i % 2]
        want = oracle_trie_minimizers(t, l, k, mode, seed=i).reported_nodes
        for kind in ("heap", "two-stack", "two-layer"):
            if trie_path_minimizers(t, l, k, kind, mode, seed=i).reported_nodes != want:
                bad.append((i, kind))
    report("C7 trie DFS equals root-ward brute force", not bad, f"100 tries x 3 engines, {len(bad)} mismatches {bad[:5]}")


def test_c8_trend_benchmarks():
    ws = [2 ** j for j in range(4, 12)]
    engines = ["heap", "two-stack", "deque"]
    t0 = time.perf_counter()
    recs = run_benchmarks([BenchConfig(e, w, 1_000_000) for w in ws for e in engines], reps=1)
    elapsed = time.perf_counter() - t0
    ns = {(r.engine, r.w): r.ns_per_op for r in recs}
    two = [ns["two-stack", w] for w in ws]
    heap = [ns["heap", w] for w in ws if w >= 2 ** 6]
    ratio = max(two) / min(two)
    a_flat = ratio < 2
    a_heap = all(x < y for x, y in zip(heap, heap[1:]))
    b_factor = max(ns["two-stack", w] / ns["deque", w] for w in ws)
    fmt = lambda xs: "/".join(f"{x:.0f}" for x in xs)
    parts = [f"(a) two-stack max/min {ratio:.2f} (<2) {'ok' if a_flat else 'FAIL'}",
             f"heap w>=2^6 increasing {'ok' if a_heap else 'FAIL'} [{fmt(heap)}]",
             f"(b) two-stack/deque {b_factor:.2f} (<=5) {'ok' if b_factor <= 5 else 'FAIL'}",
             f"{elapsed:.0f}s (<300s)"]
    report("C8 trend benchmarks", a_flat and a_heap and b_factor <= 5 and elapsed < 300, "; ".join(parts))


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    if LINES:
        tr = request.config.pluginmanager.get_plugin("terminalreporter")
        if tr is not None:
            tr.write_line("")
            for line in LINES:
                tr.write_line(line)

import random

from semidyn.engines.core import Op
from semidyn.verify import (check_engine_case, check_scan_case, check_trie_case, engine_case,
                            minimal_reproducer, random_ops, run_ops, run_suites)


def test_random_ops_are_valid():
    rng = random.Random(0)
    for kinds in (("prepend", "append", "delete_first", "delete_last"), ("append", "delete_first")):
        size = 0
        for op in random_ops(rng, 2000, b"AC", kinds, max_size=10):
            assert op.kind in kinds
            size += -1 if op.kind.startswith("delete") else 1
            assert 0 <= size <= 10


def test_engine_case_is_deterministic():
    assert engine_case(17) == engine_case(17)
    assert all(len(engine_case(s, max_len=50)[0]) <= 50 for s in range(40))


def test_engine_case_parameters_cover_grid():
    seen = {(k, mode.value, sigma) for k_ops, k, mode, sigma, _ in (engine_case(s, 10) for s in range(400))}
    assert {k for k, _, _ in seen} == {1, 2, 4, 8}
    assert {s for _, _, s in seen} == {2, 4, 26}
    assert {m for _, m, _ in seen} == {"lex", "krf"}


def test_check_cases_pass():
    kinds = ["heap", "deque", "two-stack", "two-layer", "two-layer/fixed:3"]
    for seed in range(15):
        results, violations = check_engine_case(seed, kinds, max_len=300)
        assert violations == 0 and all(r.ok for r in results) and len(results) == len(kinds)
    assert all(r.ok for r in check_scan_case(3, max_n=300))
    assert all(r.ok for r in check_trie_case(3, max_strings=30))


def test_minimal_reproducer_cuts_at_first_difference(monkeypatch):
    from semidyn import verify
    from semidyn.engines.core import make_engine

    ops = [Op("append", 66), Op("append", 65), Op("append", 67), Op("delete_first")]
    assert minimal_reproducer(ops, "two-stack", 1, "lex", None) == ops

    class Broken:
        """Right until the string holds three letters."""

        def __init__(self):
            self.inner = make_engine("oracle", 1, "lex")
            self.append, self.delete_first = self.inner.append, self.inner.delete_first

        def minimizer(self):
            m = self.inner.minimizer()
            return None if self.inner.text.size == 3 else m

    monkeypatch.setattr(verify, "build", lambda *a: Broken())
    assert minimal_reproducer(ops, "broken", 1, "lex", None) == ops[:3]


def test_run_suites_counts():
    report = run_suites(5, engine_cases=4, scan_cases=2, trie_cases=1, max_len=200, engines=["heap", "two-stack"])
    assert report.passed == 4 * 2 + 2 * 5 + 1 * 3 and report.failed == []
    assert report.witness_violations == 0

import pytest
from hypothesis import given, strategies as st

from conftest import DEQUE_EX, DEQUE_EX_RANKS, STACK_EX, current_pairs, op_strategy, valid_ops
from semidyn import (ENGINE_KINDS, DequeEngine, FragmentPair, HashConfig, HeapEngine, Op, OracleEngine, ReplayError,
                     UnsupportedOperationError, make_engine, oracle_minimizer, replay)
from semidyn.engines.core import fragment_value


def build(kind, letters, k=3, mode="lex", **kw):
    e = make_engine(kind, k, mode, HashConfig.from_seed(k) if mode == "krf" else None, **kw)
    for a in letters:
        e.append(a)
    return e


@pytest.mark.parametrize("kind", ENGINE_KINDS)
def test_deque_ex_minimizer(kind):
    assert build(kind, DEQUE_EX).minimizer() == FragmentPair(b"AAT", 1)


@pytest.mark.parametrize("kind", ENGINE_KINDS)
def test_stack_ex_minimizer(kind):
    assert build(kind, STACK_EX).minimizer() == FragmentPair(b"AAG", 0)


@pytest.mark.parametrize("kind", ENGINE_KINDS)
def test_shorter_than_k_has_no_minimizer(kind):
    assert build(kind, b"AC").minimizer() is None


def test_oracle_minimizer_examples():
    assert oracle_minimizer(DEQUE_EX, 3, "lex") == FragmentPair(b"AAT", 1)
    assert oracle_minimizer(STACK_EX, 3, "lex") == FragmentPair(b"AAG", 0)
    assert oracle_minimizer(b"AC", 3, "lex") is None
    assert oracle_minimizer(DEQUE_EX, 3, "lex", start_pos=-4).pos == -3


def test_deque_ex_deque_survivors():
    e = build("deque", DEQUE_EX)
    assert [p.pos for p in e.pairs()] == [1, 4, 6, 8, 9]
    assert [DEQUE_EX_RANKS[p.pos] for p in e.pairs()] == [0, 1, 1, 2, 6]
    crossed = set(range(10)) - {p.pos for p in e.pairs()}
    assert crossed == {0, 2, 3, 5, 7}


def test_heap_build_then_unwind():
    e = build("heap", DEQUE_EX)
    assert e.minimizer() == FragmentPair(b"AAT", 1)
    assert e.live_pairs == 10
    for _ in range(12):
        e.delete_last()
    assert e.minimizer() is None and e.live_pairs == 0


def test_deque_single_fragment():
    e = build("deque", b"ACG")
    assert e.pairs() == [FragmentPair(b"ACG", 0)]


def test_deque_unsupported_ops():
    e = build("deque", DEQUE_EX)
    with pytest.raises(UnsupportedOperationError):
        e.delete_last()
    r = DequeEngine(3, "lex", reverse=True)
    for a in DEQUE_EX:
        r.append(a)
    with pytest.raises(UnsupportedOperationError):
        r.delete_first()


def test_unknown_engine_kind():
    with pytest.raises(ValueError, match="two-stack"):
        make_engine("splay", 3, "lex")


def test_replay_reports_failing_index():
    ops = [Op("append", 65), Op("delete_first"), Op("delete_first")]
    with pytest.raises(ReplayError) as info:
        replay(ops, "two-stack", k=1, mode="lex")
    assert info.value.index == 2


def test_replay_answers_per_op():
    ops = [Op("append", a) for a in b"CAB"] + [Op("delete_first")]
    ans = replay(ops, "heap", k=1, mode="lex")
    assert [a.pos if a else None for a in ans] == [0, 1, 1, 1]


def test_oracle_uses_direct_values():
    cfg = HashConfig.from_seed(4, 3)
    o = OracleEngine(4, "krf", cfg)
    for a in STACK_EX:
        o.prepend(a)
    rev = STACK_EX[::-1]  # prepending letter by letter reverses the input
    expected = min(FragmentPair(fragment_value(rev[i:i + 4], "krf", cfg), -16 + i) for i in range(13))
    assert o.minimizer() == expected and o.text.start_pos == -16


@given(op_strategy(400, 3), st.sampled_from([1, 2, 3]), st.sampled_from(["lex", "krf"]),
       st.sampled_from(["heap", "two-stack", "two-layer"]))
def test_engine_matches_oracle(raw, k, mode, kind):
    ops = valid_ops(raw)
    cfg = HashConfig.from_seed(k, 1) if mode == "krf" else None
    e, o = make_engine(kind, k, mode, cfg), make_engine("oracle", k, mode, cfg)
    for op in ops:
        e.apply(op)
        o.apply(op)
        first = e.minimizer()
        assert first == o.minimizer()
        assert e.minimizer() == first  # queries have no side effects


@given(op_strategy(400, 3), st.sampled_from([1, 2, 4]), st.sampled_from(["lex", "krf"]), st.booleans())
def test_deque_matches_oracle_and_keeps_invariant(raw, k, mode, reverse):
    kinds = ("prepend", "append", "delete_last") if reverse else ("prepend", "append", "delete_first")
    ops = valid_ops(raw, kinds)
    cfg = HashConfig.from_seed(k, 1) if mode == "krf" else None
    e, o = DequeEngine(k, mode, cfg, reverse=reverse), make_engine("oracle", k, mode, cfg)
    for op in ops:
        e.apply(op)
        o.apply(op)
        assert e.minimizer() == o.minimizer()
        pairs = e.pairs()
        frags = current_pairs(e.text)
        for a, b in zip(pairs, pairs[1:]):
            assert a.pos < b.pos
            assert (a.value > b.value) if reverse else (a.value <= b.value)
        if reverse:
            keep = [f for f in frags if not any(g.pos < f.pos and g.value <= f.value for g in frags)]
        else:
            keep = [f for f in frags if not any(g.pos > f.pos and g.value < f.value for g in frags)]
        assert pairs == keep
        assert e.pop_count <= e.push_count


@given(op_strategy(300, 4), st.sampled_from([1, 3]))
def test_heap_holds_every_fragment(raw, k):
    e = HeapEngine(k, "lex")
    for op in valid_ops(raw):
        e.apply(op)
        assert e.live_pairs == e.text.fragment_count
        assert e.pairs() == sorted(current_pairs(e.text))


@given(op_strategy(300, 2), st.sampled_from([1, 2, 4]))
def test_engines_agree_pairwise(raw, k):
    ops = valid_ops(raw)
    answers = [replay(ops, kind, k=k, mode="krf", cfg=HashConfig.from_seed(k, 2))
               for kind in ("oracle", "heap", "two-stack", "two-layer")]
    answers.append(replay(ops, "two-layer", k=k, mode="krf", cfg=HashConfig.from_seed(k, 2), block_scheme="fixed:3"))
    assert all(a == answers[0] for a in answers)


def test_counters_move():
    e = build("two-stack", DEQUE_EX, mode="krf")
    assert e.op_count == 12 and e.work_count > 0 and e.peak_live_pairs >= 1

import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("semidyn", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("semidyn")

# Deque example window and the ranks printed under each length-3 fragment
DEQUE_EX = b"GAATACACATAC"
DEQUE_EX_RANKS = [5, 0, 2, 6, 1, 3, 1, 4, 2, 6]

# Two-stack example string and ranks
STACK_EX = b"AAGGAGGCTCCTCCTA"


@pytest.fixture
def rng():
    return random.Random(1234)


def rank_of(kmers):
    """Dense lexicographic ranks of a list of k-mers."""
    order = {m: i for i, m in enumerate(sorted(set(kmers)))}
    return [order[m] for m in kmers]

STACK_EX_RANKS = [0, 1, 7, 5, 1, 8, 6, 4, 9, 2, 4, 9, 2, 3]


def valid_ops(raw, kinds=("prepend", "append", "delete_first", "delete_last")):
    """Turn (kind index, letter) draws into an op list that never deletes from an empty string."""
    from semidyn import Op

    out, size = [], 0
    for ki, a in raw:
        kind = kinds[ki % len(kinds)]
        if kind.startswith("delete"):
            if size == 0:
                continue
            size -= 1
            out.append(Op(kind))
        else:
            size += 1
            out.append(Op(kind, a))
    return out


def current_pairs(text):
    """All (value, pos) fragment pairs of a string, valued directly."""
    from semidyn import FragmentPair

    if not text.fragment_count:
        return []
    return [FragmentPair(text.value_at(p), p) for p in range(text.first_fragment_pos, text.last_fragment_pos + 1)]


def check_left_stack(stack, frags):
    """Left-side rule: bottom to top positions decrease, values do not increase,
    and (v, p) is kept iff no fragment p' > p on that side has v' < v."""
    for lower, upper in zip(stack, stack[1:]):
        assert upper.pos < lower.pos and upper.value <= lower.value
    keep = [f for f in frags if not any(g.pos > f.pos and g.value < f.value for g in frags)]
    assert sorted(stack, key=lambda f: f.pos) == sorted(keep, key=lambda f: f.pos)


def check_right_stack(stack, frags):
    """Right-side rule: bottom to top positions increase, values strictly decrease,
    and (v, p) is kept iff no fragment p' < p on that side has v' <= v."""
    for lower, upper in zip(stack, stack[1:]):
        assert upper.pos > lower.pos and upper.value < lower.value
    keep = [f for f in frags if not any(g.pos < f.pos and g.value <= f.value for g in frags)]
    assert sorted(stack, key=lambda f: f.pos) == sorted(keep, key=lambda f: f.pos)




def op_strategy(max_size=300, alphabet=4):
    from hypothesis import strategies as st

    return st.lists(st.tuples(st.integers(0, 3), st.integers(65, 65 + alphabet - 1)), max_size=max_size)

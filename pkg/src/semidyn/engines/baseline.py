"""Reference engines: an ordered set over all fragments, and the limited deque."""

from __future__ import annotations

import random
from collections import deque
from typing import Optional

from ..errors import UnsupportedOperationError
from ..sdstring import FragmentPair
from .core import MinimizerEngine


class HeapEngine(MinimizerEngine):
    """Ordered set of all fragments keyed by (value, position).

    The set is a skip list, so insertions and deletions take expected
    O(log l) comparisons and the minimum is the first node.  Level draws use
    a private seeded PRNG, which keeps runs reproducible.
    """

    kind = "heap"
    MAX_LEVEL = 32

    def __init__(self, *args, seed: int = 0, **kwargs):
        super().__init__(*args, **kwargs)
        # node layout: [key, next at level 0, next at level 1, ...]
        self._head = [None] + [None] * self.MAX_LEVEL
        self._level = 1
        self._size = 0
        self._rng = random.Random(seed)
        text = self.text
        if text.fragment_count:
            first, last = text.first_fragment_pos, text.last_fragment_pos
            for pos, v in zip(range(first, last + 1), text.iter_values(first, last)):
                self._insert(FragmentPair(v, pos))

    def _predecessors(self, key) -> list:
        update = [None] * self._level
        x = self._head
        steps = 0
        for i in range(self._level, 0, -1):
            nxt = x[i]
            while nxt is not None and nxt[0] < key:
                x = nxt
                nxt = x[i]
                steps += 1
            update[i - 1] = x
        self.work_count += steps + self._level
        return update

    def _insert(self, pair: FragmentPair) -> None:
        r = self._rng.getrandbits(self.MAX_LEVEL)
        lvl = (r & -r).bit_length() if r else self.MAX_LEVEL  # geometric, p = 1/2
        update = self._predecessors(pair)
        if lvl > self._level:
            update.extend([self._head] * (lvl - self._level))
            self._level = lvl
        node = [pair] + [None] * lvl
        for i in range(1, lvl + 1):
            prev = update[i - 1]
            node[i] = prev[i]
            prev[i] = node
        self._size += 1
        if self._size > self.peak_live_pairs:
            self.peak_live_pairs = self._size

    def _remove(self, pair: FragmentPair) -> None:
        update = self._predecessors(pair)
        node = update[0][1]
        if node is None or node[0] != pair:
            raise KeyError(f"fragment {pair} not in the ordered set")
        for i in range(1, len(node)):
            prev = update[i - 1]
            if prev[i] is node:
                prev[i] = node[i]
        head = self._head
        while self._level > 1 and head[self._level] is None:
            self._level -= 1
        self._size -= 1

    _on_prepend = _on_append = _insert
    _on_delete_first = _on_delete_last = _remove

    def minimizer(self) -> Optional[FragmentPair]:
        first = self._head[1]
        return None if first is None else first[0]

    def pairs(self) -> list:
        """All stored pairs in (value, position) order."""
        out = []
        x = self._head[1]
        while x is not None:
            out.append(x[0])
            x = x[1]
        return out

    @property
    def live_pairs(self) -> int:
        return self._size


class DequeEngine(MinimizerEngine):
    """Limited semi-dynamic minimizer: keeps only non-dominated fragments.

    The default orientation supports prepend, append and delete_first and
    stores pairs with increasing positions and non-decreasing values, the
    minimizer at the front.  With ``reverse=True`` the mirrored set (prepend,
    append, delete_last) is supported instead: values strictly decrease
    front to back and the minimizer sits at the back.
    """

    kind = "deque"

    def __init__(self, *args, reverse: bool = False, **kwargs):
        super().__init__(*args, **kwargs)
        self.reverse = reverse
        self._dq: deque = deque()
        self.push_count = 0
        self.pop_count = 0
        text = self.text
        if text.fragment_count:
            first, last = text.first_fragment_pos, text.last_fragment_pos
            for pos, v in zip(range(first, last + 1), text.iter_values(first, last)):
                self._on_append(FragmentPair(v, pos))

    def _note_push(self) -> None:
        self.push_count += 1
        if len(self._dq) > self.peak_live_pairs:
            self.peak_live_pairs = len(self._dq)

    def delete_first(self) -> None:
        if self.reverse:
            raise UnsupportedOperationError("reversed deque engine does not support delete_first")
        self.op_count += 1
        pair = self._t_delete_first()
        if pair is not None:
            dq = self._dq
            if dq and dq[0][1] == pair[1]:
                dq.popleft()
                self.pop_count += 1

    def delete_last(self) -> None:
        if not self.reverse:
            raise UnsupportedOperationError("deque engine does not support delete_last")
        super().delete_last()

    def _on_prepend(self, pair: FragmentPair) -> None:
        dq = self._dq
        v = pair[0]
        if self.reverse:
            while dq and dq[0][0] >= v:
                dq.popleft()
                self.pop_count += 1
            dq.appendleft(pair)
            self._note_push()
        elif not dq or v <= dq[0][0]:
            dq.appendleft(pair)
            self._note_push()

    def append(self, a: int) -> None:
        # forward orientation inlined: this is the sliding-window hot path
        if self.reverse:
            return super().append(a)
        self.op_count += 1
        pair = self._t_append(a)
        if pair is None:
            return
        dq = self._dq
        v = pair[0]
        while dq and dq[-1][0] > v:
            dq.pop()
            self.pop_count += 1
        dq.append(pair)
        self.push_count += 1
        if len(dq) > self.peak_live_pairs:
            self.peak_live_pairs = len(dq)

    def _on_append(self, pair: FragmentPair) -> None:
        dq = self._dq
        v = pair[0]
        if self.reverse:
            if not dq or v < dq[-1][0]:
                dq.append(pair)
                self._note_push()
            return
        while dq and dq[-1][0] > v:
            dq.pop()
            self.pop_count += 1
        dq.append(pair)
        self._note_push()

    def _on_delete_first(self, pair: FragmentPair) -> None:
        dq = self._dq
        if dq and dq[0][1] == pair[1]:
            dq.popleft()
            self.pop_count += 1

    def _on_delete_last(self, pair: FragmentPair) -> None:
        dq = self._dq
        if dq and dq[-1][1] == pair[1]:
            dq.pop()
            self.pop_count += 1

    def minimizer(self) -> Optional[FragmentPair]:
        if not self._dq:
            return None
        return self._dq[-1] if self.reverse else self._dq[0]

    def pairs(self) -> list:
        """Stored pairs in position order."""
        return list(self._dq)

    @property
    def live_pairs(self) -> int:
        return len(self._dq)

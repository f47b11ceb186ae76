"""Two-stack semi-dynamic minimizer: all four border modifications in amortized O(1).

Fragments starting before the pivot live in the left stack, the others in
the right stack.  Each stack only keeps pairs that can still become the
minimizer of its side; the top is the side's minimum.  When a deletion hits
a side that holds no fragments, the whole structure is rebuilt around a new
pivot in the middle of the string.
"""

from __future__ import annotations

from typing import List, Optional

from ..sdstring import FragmentPair
from .core import MinimizerEngine


class TwoStackEngine(MinimizerEngine):
    kind = "two-stack"

    def __init__(self, *args, pivot: Optional[int] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self._left: List[FragmentPair] = []   # top = smallest position
        self._right: List[FragmentPair] = []  # top = largest position
        self.pivot = self.text.start_pos
        self.rebuild_count = 0
        self.rebuild_work = 0
        self.max_stack_depth = 0
        # amortization witness: every rebuild must cost at most the fragment
        # insertions + deletions since the previous one
        self.ops_since_rebuild = self.text.fragment_count
        self.witness_violations = 0
        if self.text.fragment_count:
            self._rebuild(pivot)

    @property
    def left_count(self) -> int:
        t = self.text
        if not t.fragment_count:
            return 0
        return max(0, min(self.pivot, t.last_fragment_pos + 1) - t.first_fragment_pos)

    @property
    def right_count(self) -> int:
        return self.text.fragment_count - self.left_count

    def left_stack(self) -> List[FragmentPair]:
        """Left stack, bottom to top."""
        return list(self._left)

    def right_stack(self) -> List[FragmentPair]:
        """Right stack, bottom to top."""
        return list(self._right)

    def rebuild(self, pivot: Optional[int] = None) -> None:
        """Recompute both stacks around `pivot` (default: the middle fragment)."""
        self._rebuild(pivot, check=False)

    def _rebuild(self, pivot: Optional[int] = None, check: bool = True) -> None:
        t = self.text
        f = t.fragment_count
        if check and f > self.ops_since_rebuild:
            self.witness_violations += 1
        self.rebuild_count += 1
        self.rebuild_work += f
        self.work_count += f
        self.ops_since_rebuild = 0
        left, right = [], []
        self._left, self._right = left, right
        if f == 0:
            return
        lo, hi = t.first_fragment_pos, t.last_fragment_pos
        if pivot is None:
            pivot = lo + (f - 1) // 2
        elif not lo <= pivot <= hi + 1:
            raise ValueError(f"pivot {pivot} outside fragment range [{lo}, {hi + 1}]")
        self.pivot = pivot
        if pivot > lo:
            pos = pivot - 1
            for v in t.iter_values(pivot - 1, lo):
                if not left or v <= left[-1][0]:
                    left.append(FragmentPair(v, pos))
                pos -= 1
        if pivot <= hi:
            pos = pivot
            for v in t.iter_values(pivot, hi):
                if not right or v < right[-1][0]:
                    right.append(FragmentPair(v, pos))
                pos += 1
        depth = max(len(left), len(right))
        if depth > self.max_stack_depth:
            self.max_stack_depth = depth
        if len(left) + len(right) > self.peak_live_pairs:
            self.peak_live_pairs = len(left) + len(right)

    def _reset(self, pair: FragmentPair) -> None:
        # first fragment after an empty spell: a trivial rebuild
        self.ops_since_rebuild = 1
        self._rebuild()

    # a side holding fragments always has a non-empty stack, so two empty
    # stacks mean `pair` is the only fragment
    def _on_prepend(self, pair: FragmentPair) -> None:
        if not self._left and not self._right:
            return self._reset(pair)
        self.ops_since_rebuild += 1
        left = self._left
        if not left or pair[0] <= left[-1][0]:
            left.append(pair)
            self.work_count += 1
            if len(left) > self.max_stack_depth:
                self.max_stack_depth = len(left)
            if len(left) + len(self._right) > self.peak_live_pairs:
                self.peak_live_pairs = len(left) + len(self._right)

    def _on_append(self, pair: FragmentPair) -> None:
        if not self._right and not self._left:
            return self._reset(pair)
        self.ops_since_rebuild += 1
        right = self._right
        if not right or pair[0] < right[-1][0]:
            right.append(pair)
            self.work_count += 1
            if len(right) > self.max_stack_depth:
                self.max_stack_depth = len(right)
            if len(right) + len(self._left) > self.peak_live_pairs:
                self.peak_live_pairs = len(right) + len(self._left)

    # append and delete_first carry the hook bodies inline: they are the
    # whole per-step cost of a one-way slide
    def append(self, a: int) -> None:
        self.op_count += 1
        pair = self._t_append(a)
        if pair is None:
            return
        right = self._right
        if not right and not self._left:
            return self._reset(pair)
        self.ops_since_rebuild += 1
        if not right or pair[0] < right[-1][0]:
            right.append(pair)
            self.work_count += 1
            d = len(right)
            if d > self.max_stack_depth:
                self.max_stack_depth = d
            d += len(self._left)
            if d > self.peak_live_pairs:
                self.peak_live_pairs = d

    def delete_first(self) -> None:
        self.op_count += 1
        pair = self._t_delete_first()
        if pair is None:
            return
        self.ops_since_rebuild += 1
        pos = pair[1]
        if pos < self.pivot:
            left = self._left
            if left[-1][1] == pos:
                left.pop()
                self.work_count += 1
        else:
            self._rebuild()

    def _on_delete_first(self, pair: FragmentPair) -> None:
        self.ops_since_rebuild += 1
        pos = pair[1]
        if pos < self.pivot:
            left = self._left
            if left[-1][1] == pos:
                left.pop()
                self.work_count += 1
        else:
            # left side was already empty; rebuild on what remains
            self._rebuild()

    def _on_delete_last(self, pair: FragmentPair) -> None:
        self.ops_since_rebuild += 1
        pos = pair[1]
        if pos >= self.pivot:
            right = self._right
            if right[-1][1] == pos:
                right.pop()
                self.work_count += 1
        else:
            self._rebuild()

    def minimizer(self) -> Optional[FragmentPair]:
        left, right = self._left, self._right
        if left:
            if right:
                a, b = left[-1], right[-1]
                return a if a < b else b
            return left[-1]
        return right[-1] if right else None

    @property
    def live_pairs(self) -> int:
        return len(self._left) + len(self._right)

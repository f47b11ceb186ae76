"""Two-layer semi-dynamic minimizer with sublinear working space.

Fragment positions are cut into blocks around an anchor.  On each side of
the anchor the one or two outermost (border) blocks keep a full first-layer
stack, as in the two-stack engine, while every internal block is reduced to
its minimal fragment, kept in a second-layer stack under the same
domination rule.  Blocks of fixed length c give O(c + l/c) pairs; blocks of
lengths 1, 3, 5, ... outward from the anchor give O(sqrt(l)).

The engine only reads letters through its text, so it can run over a
read-only :class:`~semidyn.sdstring.SourceWindow`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from ..sdstring import FragmentPair
from .core import MinimizerEngine


@dataclass(frozen=True)
class BlockScheme:
    kind: str = "progressing"  # "fixed" | "progressing"
    c: int = 0
    anchor: int = 0

    def __post_init__(self):
        if self.kind == "fixed":
            if self.c <= 1:
                raise ValueError(f"fixed block length must be > 1, got {self.c}")
        elif self.kind != "progressing":
            raise ValueError(f"unknown block scheme {self.kind!r}")

    @classmethod
    def parse(cls, spec) -> "BlockScheme":
        """Accept a BlockScheme, ``"progressing"`` or ``"fixed:<c>"``."""
        if isinstance(spec, BlockScheme):
            return spec
        if spec == "progressing":
            return cls("progressing")
        kind, _, c = str(spec).partition(":")
        if kind == "fixed" and c.isdigit():
            return cls("fixed", int(c))
        raise ValueError(f"bad block scheme {spec!r}; expected 'progressing' or 'fixed:<c>'")

    def __str__(self):
        return f"fixed:{self.c}" if self.kind == "fixed" else "progressing"

    def block_of(self, pos: int) -> int:
        """Block index of `pos`: >= 0 at or right of the anchor, < 0 left of it."""
        if self.kind == "fixed":
            return (pos - self.anchor) // self.c
        d = pos - self.anchor
        if d >= 0:
            return math.isqrt(d)
        return -math.isqrt(-d - 1) - 1

    def block_range(self, kappa: int) -> Tuple[int, int]:
        """First and last position of block `kappa`."""
        a = self.anchor
        if self.kind == "fixed":
            return a + kappa * self.c, a + (kappa + 1) * self.c - 1
        if kappa >= 0:
            return a + kappa * kappa, a + (kappa + 1) * (kappa + 1) - 1
        j = -kappa - 1
        return a - (j + 1) * (j + 1), a - j * j - 1


class _Side:
    """First- and second-layer stacks for one side of the anchor.

    ``step`` is +1 on the right side (positions grow outward) and -1 on the
    left.  Pushes on the right side need a strictly smaller value than the
    top; on the left side ties are pushed too, so that leftmost ties win.
    """

    def __init__(self, engine: "TwoLayerEngine", step: int):
        self.engine = engine
        self.step = step
        self.strict = step == 1
        self.first: List[Tuple[int, list]] = []  # (block, stack), innermost first, at most 2
        self.second: List[FragmentPair] = []
        self.second_blocks: List[int] = []
        self.ops_since_event = 0
        self.charge_available = True

    def _accepts(self, v, stack) -> bool:
        if not stack:
            return True
        return v < stack[-1][0] if self.strict else v <= stack[-1][0]

    def clear(self) -> None:
        self.first = []
        self.second = []
        self.second_blocks = []
        self.ops_since_event = 0
        self.charge_available = True

    def size(self) -> int:
        return sum(len(s) for _, s in self.first) + len(self.second)

    def tops(self) -> list:
        out = [s[-1] for _, s in self.first]
        if self.second:
            out.append(self.second[-1])
        return out

    def _event(self, length: int) -> None:
        if self.charge_available:
            self.charge_available = False
        elif self.ops_since_event < length:
            self.engine.witness_violations += 1
        self.ops_since_event = 0

    def _block_length(self, kappa: int) -> int:
        a, b = self.engine.scheme.block_range(kappa)
        return b - a + 1

    def insert(self, pair: FragmentPair, accounted: bool = True) -> None:
        eng = self.engine
        kappa = eng.scheme.block_of(pair[1])
        first = self.first
        if first and first[-1][0] == kappa:
            stack = first[-1][1]
            if self._accepts(pair[0], stack):
                stack.append(pair)
                eng._grew(1)
            eng.work_count += 1
            return
        first.append((kappa, [pair]))
        eng._grew(1)
        eng.work_count += 1
        if len(first) == 3:
            self.flush(accounted)

    def flush(self, accounted: bool = True) -> None:
        """Reduce the innermost first-layer stack to one second-layer entry."""
        eng = self.engine
        kappa, stack = self.first.pop(0)
        length = self._block_length(kappa)
        if accounted:
            self._event(length)
            eng.flush_count += 1
        eng.live -= len(stack)
        eng.work_count += length
        top = stack[-1]
        if self._accepts(top[0], self.second):
            self.second.append(top)
            self.second_blocks.append(kappa)
            eng._grew(1)

    def delete(self, pair: FragmentPair) -> None:
        eng = self.engine
        pos = pair[1]
        kappa, stack = self.first[-1]
        if stack[-1][1] == pos:
            stack.pop()
            eng.live -= 1
            eng.work_count += 1
        if stack:
            return
        self.first.pop()
        if self.first:
            return
        nxt = pos - self.step
        if (nxt - eng.scheme.anchor) * self.step < (0 if self.step == 1 else 1):
            return  # side is now empty
        self.recompute(eng.scheme.block_of(nxt))

    def recompute(self, kappa: int) -> None:
        """Rebuild the first-layer stack of a complete internal block from the text."""
        eng = self.engine
        a, b = eng.scheme.block_range(kappa)
        length = b - a + 1
        self._event(length)
        eng.recompute_count += 1
        eng.work_count += length
        if self.second_blocks and self.second_blocks[-1] == kappa:
            self.second.pop()
            self.second_blocks.pop()
            eng.live -= 1
        inner, outer = (a, b) if self.step == 1 else (b, a)
        stack: list = []
        pos = inner
        for v in eng.text.iter_values(inner, outer):
            if self._accepts(v, stack):
                stack.append(FragmentPair(v, pos))
                eng._grew(1)
            pos += self.step
        self.first.append((kappa, stack))


class TwoLayerEngine(MinimizerEngine):
    kind = "two-layer"

    def __init__(self, *args, scheme="progressing", **kwargs):
        super().__init__(*args, **kwargs)
        self.scheme = replace(BlockScheme.parse(scheme), anchor=self.text.start_pos)
        self.left = _Side(self, -1)
        self.right = _Side(self, 1)
        self.live = 0
        self.rebuild_count = 0
        self.rebuild_work = 0
        self.recompute_count = 0
        self.flush_count = 0
        self.witness_violations = 0
        self.ops_since_rebuild = self.text.fragment_count
        if self.text.fragment_count:
            self._full_rebuild()

    @property
    def anchor(self) -> int:
        return self.scheme.anchor

    @property
    def live_pair_count(self) -> int:
        return self.live

    @property
    def live_pairs(self) -> int:
        return self.live

    def _grew(self, n: int) -> None:
        self.live += n
        if self.live > self.peak_live_pairs:
            self.peak_live_pairs = self.live

    def full_rebuild(self, anchor: Optional[int] = None) -> None:
        self._full_rebuild(anchor, check=False)

    def _full_rebuild(self, anchor: Optional[int] = None, check: bool = True) -> None:
        t = self.text
        f = t.fragment_count
        if check and f > self.ops_since_rebuild:
            self.witness_violations += 1
        self.rebuild_count += 1
        self.rebuild_work += f
        self.work_count += f
        self.ops_since_rebuild = 0
        self.left.clear()
        self.right.clear()
        self.live = 0
        if f == 0:
            return
        lo, hi = t.first_fragment_pos, t.last_fragment_pos
        if anchor is None:
            anchor = lo + (f - 1) // 2
        elif not lo <= anchor <= hi + 1:
            raise ValueError(f"anchor {anchor} outside fragment range [{lo}, {hi + 1}]")
        self.scheme = replace(self.scheme, anchor=anchor)
        # stream insertions outward from the anchor, then keep a single
        # first-layer stack per side
        if anchor <= hi:
            pos = anchor
            for v in t.iter_values(anchor, hi):
                self.right.insert(FragmentPair(v, pos), accounted=False)
                pos += 1
        if anchor > lo:
            pos = anchor - 1
            for v in t.iter_values(anchor - 1, lo):
                self.left.insert(FragmentPair(v, pos), accounted=False)
                pos -= 1
        for side in (self.left, self.right):
            while len(side.first) > 1:
                side.flush(accounted=False)

    # a non-empty side always has a first-layer stack, so live == 0 means
    # `pair` is the only fragment
    def _on_prepend(self, pair: FragmentPair) -> None:
        if not self.live:
            self.ops_since_rebuild = 1
            return self._full_rebuild()
        self.ops_since_rebuild += 1
        self.left.ops_since_event += 1
        self.left.insert(pair)

    def _on_append(self, pair: FragmentPair) -> None:
        if not self.live:
            self.ops_since_rebuild = 1
            return self._full_rebuild()
        self.ops_since_rebuild += 1
        self.right.ops_since_event += 1
        self.right.insert(pair)

    def _on_delete_first(self, pair: FragmentPair) -> None:
        self.ops_since_rebuild += 1
        if pair[1] < self.scheme.anchor:
            self.left.ops_since_event += 1
            self.left.delete(pair)
        else:
            self._full_rebuild()

    def _on_delete_last(self, pair: FragmentPair) -> None:
        self.ops_since_rebuild += 1
        if pair[1] >= self.scheme.anchor:
            self.right.ops_since_event += 1
            self.right.delete(pair)
        else:
            self._full_rebuild()

    def minimizer(self) -> Optional[FragmentPair]:
        best = None
        for side in (self.left, self.right):
            for _, s in side.first:
                top = s[-1]
                if best is None or top < best:
                    best = top
            if side.second:
                top = side.second[-1]
                if best is None or top < best:
                    best = top
        return best

    def first_layer(self, side: str) -> List[Tuple[int, List[FragmentPair]]]:
        """(block, stack bottom-to-top) for the first-layer stacks of 'left' or 'right', innermost first."""
        s = self.left if side == "left" else self.right
        return [(kappa, list(stack)) for kappa, stack in s.first]

    def second_layer(self, side: str) -> List[FragmentPair]:
        s = self.left if side == "left" else self.right
        return list(s.second)

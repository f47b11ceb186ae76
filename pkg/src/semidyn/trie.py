"""Path minimizers in a trie: for every node, the minimizer of the length-l
string spelled from that node toward the root.

The DFS keeps one engine holding the current root-ward window.  Going down
prepends the new letter (and drops the letter that falls off the far end),
coming back up undoes both, so all four border modifications are needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .engines.core import fragment_value, make_engine
from .errors import UnsupportedOperationError
from .rolling_hash import HashConfig, OrderMode


@dataclass
class Trie:
    """Arena trie.  Node 0 is the root; ids are DFS preorder with children
    visited in ascending letter order."""

    parent: List[int] = field(default_factory=lambda: [-1])
    letter: List[Optional[int]] = field(default_factory=lambda: [None])
    depth: List[int] = field(default_factory=lambda: [0])
    children: List[List[int]] = field(default_factory=lambda: [[]])

    @property
    def root(self) -> int:
        return 0

    @property
    def node_count(self) -> int:
        return len(self.parent)

    @property
    def edge_count(self) -> int:
        return len(self.parent) - 1

    def spell_up(self, v: int, length: int) -> bytes:
        """Letters on the path from `v` toward the root, `v`'s own letter first."""
        out = bytearray()
        while len(out) < length and v > 0:
            out.append(self.letter[v])
            v = self.parent[v]
        return bytes(out)

    def ancestor(self, v: int, dist: int) -> int:
        for _ in range(dist):
            v = self.parent[v]
        return v


def build_trie(strings: Iterable[Sequence[int]]) -> Trie:
    """Standard insertion; ids are renumbered to DFS preorder afterwards."""
    kids: List[Dict[int, int]] = [{}]
    lets: List[Optional[int]] = [None]
    for s in strings:
        if isinstance(s, str):
            s = s.encode()
        v = 0
        for a in s:
            nxt = kids[v].get(a)
            if nxt is None:
                nxt = len(kids)
                kids[v][a] = nxt
                kids.append({})
                lets.append(a)
            v = nxt
    t = Trie([], [], [], [])
    stack: List[Tuple[int, int, int]] = [(0, -1, 0)]  # (old id, new parent id, depth)
    while stack:
        old, par, d = stack.pop()
        new = len(t.parent)
        t.parent.append(par)
        t.letter.append(lets[old])
        t.depth.append(d)
        t.children.append([])
        if par >= 0:
            t.children[par].append(new)
        for a in sorted(kids[old], reverse=True):
            stack.append((kids[old][a], new, d + 1))
    return t


@dataclass
class TriePathMinimizerReport:
    reported_nodes: Set[int]
    l: int
    k: int
    mode: OrderMode = OrderMode.KRF
    seed: Optional[int] = None
    pairs: Optional[List[Tuple[int, int]]] = None  # (window node, offset), verbose only
    peak_fragments: int = 0
    border_ops: int = 0

    def sorted_nodes(self) -> List[int]:
        return sorted(self.reported_nodes)


def _check(l: int, k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if l < k:
        raise ValueError(f"l must be >= k, got l={l}, k={k}")


def trie_path_minimizers(t: Trie, l: int, k: int, engine_kind: str = "two-stack",
                         mode: OrderMode = OrderMode.KRF, cfg: Optional[HashConfig] = None, seed: int = 0,
                         block_scheme="progressing", verbose: bool = False,
                         engine=None) -> TriePathMinimizerReport:
    """DFS over `t` with one engine holding the current root-ward window.

    A fresh (empty) `engine` instance may be passed in place of
    `engine_kind`, e.g. to inspect its counters afterwards.
    """
    _check(l, k)
    if engine is not None:
        engine_kind, mode, cfg = engine.kind, engine.mode, engine.text.cfg
    if engine_kind == "deque":
        raise UnsupportedOperationError("deque engine lacks delete_last; trie DFS needs all four border ops")
    mode = OrderMode(mode)
    if mode is OrderMode.KRF and cfg is None:
        cfg = HashConfig.from_seed(k, seed)
    eng = engine if engine is not None else make_engine(engine_kind, k, mode, cfg, block_scheme=block_scheme)
    text = eng.text
    letter, children = t.letter, t.children
    path: List[int] = []  # node ids from depth 1 to the current depth
    reported: Set[int] = set()
    pairs: Optional[List[Tuple[int, int]]] = [] if verbose else None
    peak = 0
    # iterative DFS: positive entries enter a node, ~v leaves it
    stack = [c for c in reversed(children[0])]
    while stack:
        v = stack.pop()
        if v >= 0:
            path.append(v)
            eng.prepend(letter[v])
            D = len(path)
            if D > l:
                eng.delete_last()
            f = text.fragment_count
            if f > peak:
                peak = f
            if D >= l:
                j = eng.relative_minimizer()
                reported.add(path[D - 1 - j])
                if pairs is not None:
                    pairs.append((v, j))
            stack.append(~v)
            stack.extend(reversed(children[v]))
        else:
            D = len(path)
            eng.delete_first()
            if D > l:
                eng.append(letter[path[D - 1 - l]])
            path.pop()
    return TriePathMinimizerReport(reported, l, k, mode, cfg.seed if cfg else None, pairs, peak, eng.op_count)


def oracle_trie_minimizers(t: Trie, l: int, k: int, mode: OrderMode = OrderMode.KRF,
                           cfg: Optional[HashConfig] = None, seed: int = 0,
                           verbose: bool = False) -> TriePathMinimizerReport:
    """Spell every node's root-ward string and scan it directly."""
    _check(l, k)
    mode = OrderMode(mode)
    if mode is OrderMode.KRF and cfg is None:
        cfg = HashConfig.from_seed(k, seed)
    reported: Set[int] = set()
    pairs: Optional[List[Tuple[int, int]]] = [] if verbose else None
    for v in range(1, t.node_count):
        if t.depth[v] < l:
            continue
        s = t.spell_up(v, l)
        best = min((fragment_value(s[j:j + k], mode, cfg), j) for j in range(l - k + 1))
        j = best[1]
        reported.add(t.ancestor(v, j))
        if pairs is not None:
            pairs.append((v, j))
    return TriePathMinimizerReport(reported, l, k, mode, cfg.seed if cfg else None, pairs)

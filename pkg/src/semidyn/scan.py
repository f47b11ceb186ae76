"""Minimizer sets of whole strings, by sliding a window over a semi-dynamic string."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence

from .engines.core import make_engine
from .rolling_hash import HashConfig, OrderMode
from .sdstring import SourceWindow


@dataclass
class MinimizerSet:
    positions: List[int]
    w: int
    k: int
    mode: OrderMode = OrderMode.KRF
    seed: Optional[int] = None
    peak_live_pairs: Optional[int] = None

    def __iter__(self):
        return iter(self.positions)

    def __len__(self):
        return len(self.positions)


def _check_params(n: int, w: int, k: int) -> None:
    if w < 2:
        raise ValueError(f"w must be >= 2, got {w}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < w + k - 1:
        raise ValueError(f"string of length {n} is too short: need at least w+k-1 = {w + k - 1} letters")


def _resolve_cfg(k: int, mode, cfg: Optional[HashConfig], seed: int) -> Optional[HashConfig]:
    if OrderMode(mode) is OrderMode.LEX:
        return None
    return cfg if cfg is not None else HashConfig.from_seed(k, seed)


def minimizer_set(S: Sequence[int], w: int, k: int, engine_kind: str = "two-stack",
                  mode: OrderMode = OrderMode.KRF, cfg: Optional[HashConfig] = None, seed: int = 0,
                  block_scheme="progressing") -> MinimizerSet:
    """M_{w,k}(S): positions that are the minimizer of at least one window.

    The first window (w+k-1 letters) is appended, then each step appends one
    letter and deletes the first one.  Any engine supporting append and
    delete_first works, so every kind except a reversed deque.
    """
    S = bytes(S)
    n = len(S)
    _check_params(n, w, k)
    mode = OrderMode(mode)
    cfg = _resolve_cfg(k, mode, cfg, seed)
    eng = make_engine(engine_kind, k, mode, cfg, block_scheme=block_scheme)
    append, delete_first, query = eng.append, eng.delete_first, eng.minimizer
    L = w + k - 1
    for a in S[:L]:
        append(a)
    last = query()[1]
    out = [last]
    for a in S[L:]:
        append(a)
        delete_first()
        p = query()[1]
        if p != last:
            out.append(p)
            last = p
    return MinimizerSet(out, w, k, mode, cfg.seed if cfg else None, eng.peak_live_pairs)


def iter_minimizers_space_efficient(S: Sequence[int], w: int, k: int, mode: OrderMode = OrderMode.KRF,
                                    cfg: Optional[HashConfig] = None, seed: int = 0,
                                    stats: Optional[dict] = None) -> Iterator[int]:
    """Stream M_{w,k}(S) in O(sqrt(w)) working space.

    `S` is only read by position (never copied); the engine is the
    progressing-block two-layer structure over a read-only window.  If
    `stats` is given, ``stats["peak_live_pairs"]`` is kept up to date.
    """
    n = len(S)
    _check_params(n, w, k)
    mode = OrderMode(mode)
    cfg = _resolve_cfg(k, mode, cfg, seed)
    text = SourceWindow(S, k, mode, cfg)
    eng = make_engine("two-layer", k, mode, cfg, block_scheme="progressing", text=text)
    L = w + k - 1
    for i in range(L):
        eng.append(S[i])
    last = eng.minimizer()[1]
    yield last
    for i in range(L, n):
        eng.append(S[i])
        eng.delete_first()
        p = eng.minimizer()[1]
        if p != last:
            if stats is not None:
                stats["peak_live_pairs"] = eng.peak_live_pairs
            yield p
            last = p
    if stats is not None:
        stats["peak_live_pairs"] = eng.peak_live_pairs


def minimizer_set_space_efficient(S: Sequence[int], w: int, k: int, mode: OrderMode = OrderMode.KRF,
                                  cfg: Optional[HashConfig] = None, seed: int = 0) -> MinimizerSet:
    stats: dict = {}
    cfg = _resolve_cfg(k, mode, cfg, seed)
    positions = list(iter_minimizers_space_efficient(S, w, k, mode, cfg, seed, stats))
    return MinimizerSet(positions, w, k, OrderMode(mode), cfg.seed if cfg else None,
                        stats.get("peak_live_pairs"))


def brute_force_minimizer_set(S: Sequence[int], w: int, k: int, mode: OrderMode = OrderMode.KRF,
                              cfg: Optional[HashConfig] = None, seed: int = 0) -> List[int]:
    """Per-window brute force: value every k-mer directly, take each window's min."""
    from .engines.core import fragment_value

    S = bytes(S)
    _check_params(len(S), w, k)
    mode = OrderMode(mode)
    cfg = _resolve_cfg(k, mode, cfg, seed)
    vals = [fragment_value(S[i:i + k], mode, cfg) for i in range(len(S) - k + 1)]
    found = set()
    for i in range(len(vals) - w + 1):
        window = vals[i:i + w]
        found.add(i + window.index(min(window)))
    return sorted(found)

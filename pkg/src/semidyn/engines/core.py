"""Shared engine contract, the brute-force oracle and the replay driver."""

from __future__ import annotations

from collections import deque
from typing import Iterable, List, NamedTuple, Optional, Sequence

from ..errors import ReplayError
from ..rolling_hash import HashConfig, OrderMode, krf_direct
from ..sdstring import FragmentPair, SemiDynamicString, _FragmentText

ENGINE_KINDS = ("oracle", "heap", "deque", "two-stack", "two-layer")


class Op(NamedTuple):
    kind: str  # prepend | append | delete_first | delete_last
    letter: Optional[int] = None

    def __repr__(self):
        return f"{self.kind}({self.letter})" if self.letter is not None else f"{self.kind}()"


class MinimizerEngine:
    """Base class for semi-dynamic minimizer engines.

    An engine owns a string (a :class:`SemiDynamicString` unless another text
    is supplied) and mirrors each fragment it creates or destroys.
    Subclasses implement the four ``_on_*`` hooks and :meth:`minimizer`.
    """

    kind = "abstract"

    def __init__(self, k: int, mode: OrderMode = OrderMode.KRF, cfg: Optional[HashConfig] = None,
                 text: Optional[_FragmentText] = None):
        if text is None:
            text = SemiDynamicString(k, mode, cfg)
        elif text.k != k:
            raise ValueError(f"text uses k={text.k}, engine asked for k={k}")
        self.text = text
        # bound text methods, looked up once for the per-op paths
        self._t_prepend, self._t_append = text.prepend, text.append
        self._t_delete_first, self._t_delete_last = text.delete_first, text.delete_last
        self.k = k
        self.mode = text.mode
        self.op_count = 0
        self.work_count = 0
        self.peak_live_pairs = 0

    def prepend(self, a: int) -> None:
        self.op_count += 1
        pair = self._t_prepend(a)
        if pair is not None:
            self._on_prepend(pair)

    def append(self, a: int) -> None:
        self.op_count += 1
        pair = self._t_append(a)
        if pair is not None:
            self._on_append(pair)

    def delete_first(self) -> None:
        self.op_count += 1
        pair = self._t_delete_first()
        if pair is not None:
            self._on_delete_first(pair)

    def delete_last(self) -> None:
        self.op_count += 1
        pair = self._t_delete_last()
        if pair is not None:
            self._on_delete_last(pair)

    def apply(self, op: Op) -> None:
        if op.kind == "prepend":
            self.prepend(op.letter)
        elif op.kind == "append":
            self.append(op.letter)
        elif op.kind == "delete_first":
            self.delete_first()
        elif op.kind == "delete_last":
            self.delete_last()
        else:
            raise ValueError(f"unknown op {op.kind!r}")

    def minimizer(self) -> Optional[FragmentPair]:
        raise NotImplementedError

    def relative_minimizer(self) -> Optional[int]:
        """Minimizer position relative to the current first letter."""
        m = self.minimizer()
        return None if m is None else m.pos - self.text.start_pos

    @property
    def live_pairs(self) -> int:
        raise NotImplementedError

    def _on_prepend(self, pair: FragmentPair) -> None:
        raise NotImplementedError

    def _on_append(self, pair: FragmentPair) -> None:
        raise NotImplementedError

    def _on_delete_first(self, pair: FragmentPair) -> None:
        raise NotImplementedError

    def _on_delete_last(self, pair: FragmentPair) -> None:
        raise NotImplementedError


def fragment_value(kmer: bytes, mode: OrderMode, cfg: Optional[HashConfig]):
    return bytes(kmer) if OrderMode(mode) is OrderMode.LEX else krf_direct(kmer, cfg)


def oracle_minimizer(letters: Sequence[int], k: int, mode: OrderMode = OrderMode.KRF,
                     cfg: Optional[HashConfig] = None, start_pos: int = 0) -> Optional[FragmentPair]:
    """Minimizer of `letters` by evaluating every fragment from scratch."""
    letters = bytes(letters)
    if OrderMode(mode) is OrderMode.KRF and cfg is None:
        cfg = HashConfig.from_seed(k)
    best = None
    for i in range(len(letters) - k + 1):
        cand = FragmentPair(fragment_value(letters[i:i + k], mode, cfg), start_pos + i)
        if best is None or cand < best:
            best = cand
    return best


class OracleEngine(MinimizerEngine):
    """Brute-force ground truth.

    Keeps its own copy of the letters and of every fragment, each valued
    directly from its k letters (no rolling), and scans all of them per query.
    """

    kind = "oracle"

    def __init__(self, k: int, mode: OrderMode = OrderMode.KRF, cfg: Optional[HashConfig] = None,
                 text: Optional[_FragmentText] = None):
        super().__init__(k, mode, cfg, text)
        self._cfg = self.text.cfg
        self._letters = deque(self.text.to_bytes())
        self._start = self.text.start_pos
        self._frags: deque = deque()
        for i in range(self.text.fragment_count):
            kmer = bytes(self._letters[j] for j in range(i, i + k))
            self._frags.append(FragmentPair(fragment_value(kmer, self.mode, self._cfg), self._start + i))

    def _kmer(self, i: int) -> bytes:
        return bytes(self._letters[j] for j in range(i, i + self.k))

    def prepend(self, a: int) -> None:
        self.op_count += 1
        self.text.prepend(a)
        self._letters.appendleft(a)
        self._start -= 1
        if len(self._letters) >= self.k:
            self._frags.appendleft(FragmentPair(fragment_value(self._kmer(0), self.mode, self._cfg), self._start))

    def append(self, a: int) -> None:
        self.op_count += 1
        self.text.append(a)
        self._letters.append(a)
        i = len(self._letters) - self.k
        if i >= 0:
            self._frags.append(FragmentPair(fragment_value(self._kmer(i), self.mode, self._cfg), self._start + i))

    def delete_first(self) -> None:
        self.op_count += 1
        self.text.delete_first()
        self._letters.popleft()
        self._start += 1
        if self._frags:
            self._frags.popleft()

    def delete_last(self) -> None:
        self.op_count += 1
        self.text.delete_last()
        self._letters.pop()
        if self._frags:
            self._frags.pop()

    def minimizer(self) -> Optional[FragmentPair]:
        self.work_count += len(self._frags)
        return min(self._frags) if self._frags else None

    @property
    def live_pairs(self) -> int:
        return len(self._frags)


def make_engine(kind: str, k: int, mode: OrderMode = OrderMode.KRF, cfg: Optional[HashConfig] = None,
                block_scheme="progressing", text: Optional[_FragmentText] = None, **kwargs) -> MinimizerEngine:
    """Build an engine by its stable name (see ``ENGINE_KINDS``)."""
    from .baseline import DequeEngine, HeapEngine
    from .two_layer import TwoLayerEngine
    from .two_stack import TwoStackEngine

    if kind == "oracle":
        return OracleEngine(k, mode, cfg, text)
    if kind == "heap":
        return HeapEngine(k, mode, cfg, text)
    if kind == "deque":
        return DequeEngine(k, mode, cfg, text, **kwargs)
    if kind == "two-stack":
        return TwoStackEngine(k, mode, cfg, text)
    if kind == "two-layer":
        return TwoLayerEngine(k, mode, cfg, text, scheme=block_scheme)
    raise ValueError(f"unknown engine kind {kind!r}; expected one of {', '.join(ENGINE_KINDS)}")


def replay(ops: Iterable[Op], engine, k: int = 1, mode: OrderMode = OrderMode.KRF,
           cfg: Optional[HashConfig] = None, **kwargs) -> List[Optional[FragmentPair]]:
    """Apply `ops` in order, querying the minimizer after each one.

    `engine` is an engine instance or a kind name; a name builds a fresh
    engine from `k`, `mode`, `cfg` and `kwargs`.
    """
    if isinstance(engine, str):
        engine = make_engine(engine, k, mode, cfg, **kwargs)
    answers = []
    for i, op in enumerate(ops):
        try:
            engine.apply(op)
        except Exception as exc:
            raise ReplayError(i, op, exc) from exc
        answers.append(engine.minimizer())
    return answers

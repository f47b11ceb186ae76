"""Semi-dynamic strings: letters can only be added or removed at the ends.

Every letter keeps the absolute position it was given when inserted; the
first letter of the initial (empty) string sits at position ``start_pos``
(0 by default) and prepends move it to negative positions.  Each border
modification creates or destroys at most one length-k fragment, which is
returned as a :class:`FragmentPair` so that engines can mirror the change.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

from .errors import EmptyStringError
from .rolling_hash import HashConfig, OrderMode, OrderValue, krf_direct


class FragmentPair(NamedTuple):
    """A length-k fragment as (value, position).

    Tuple order is the minimizer order: smaller value first, ties to the
    smaller (leftmost) position.
    """

    value: OrderValue
    pos: int


_tuple_new = tuple.__new__


def make_pair(value: OrderValue, pos: int) -> FragmentPair:
    """Fast FragmentPair constructor for hot paths."""
    return _tuple_new(FragmentPair, (value, pos))


class _FragmentText:
    """Fragment bookkeeping shared by the owned and read-only string views.

    Subclasses provide storage through ``_get``, ``_slice`` and the four
    ``_push``/``_pop`` hooks; ``_get`` and ``_slice`` take indices relative to
    the first letter.
    """

    __slots__ = ("k", "mode", "cfg", "_lex", "start_pos", "size", "front_krf", "back_krf",
                 "_base", "_inv", "_bp", "_mod", "_lead")

    def __init__(self, k: int, mode: OrderMode = OrderMode.KRF, cfg: Optional[HashConfig] = None,
                 start_pos: int = 0):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        mode = OrderMode(mode)
        if mode is OrderMode.KRF:
            if cfg is None:
                cfg = HashConfig.from_seed(k)
            elif cfg.k != k:
                raise ValueError(f"hash config built for k={cfg.k}, string uses k={k}")
        self.k = k
        self.mode = mode
        self.cfg = cfg
        self._lex = mode is OrderMode.LEX
        self.start_pos = start_pos
        self.size = 0
        self.front_krf: Optional[int] = None
        self.back_krf: Optional[int] = None
        if cfg is not None:
            self._base, self._inv, self._bp, self._mod = cfg.base, cfg.base_inverse, cfg.base_pow, cfg.modulus
            # letter * base^(k-1) mod M for every byte value
            self._lead = [a * cfg.base_pow % cfg.modulus for a in range(256)]

    # storage hooks
    def _get(self, i: int) -> int:
        raise NotImplementedError

    def _slice(self, i: int, j: int) -> bytes:
        raise NotImplementedError

    def _push_front(self, a: int) -> None:
        raise NotImplementedError

    def _push_back(self, a: int) -> None:
        raise NotImplementedError

    def _pop_front(self) -> None:
        raise NotImplementedError

    def _pop_back(self) -> None:
        raise NotImplementedError

    def __len__(self) -> int:
        return self.size

    @property
    def end_pos(self) -> int:
        """Absolute position one past the last letter."""
        return self.start_pos + self.size

    @property
    def fragment_count(self) -> int:
        return max(0, self.size - self.k + 1)

    @property
    def first_fragment_pos(self) -> int:
        return self.start_pos

    @property
    def last_fragment_pos(self) -> int:
        """Position of the rightmost fragment (only meaningful if one exists)."""
        return self.start_pos + self.size - self.k

    def letter_at(self, abs_pos: int) -> int:
        i = abs_pos - self.start_pos
        if not 0 <= i < self.size:
            raise IndexError(f"position {abs_pos} outside [{self.start_pos}, {self.end_pos})")
        return self._get(i)

    def to_bytes(self) -> bytes:
        return self._slice(0, self.size)

    def value_at(self, pos: int) -> OrderValue:
        """Order value of the fragment starting at `pos`, computed directly."""
        i = pos - self.start_pos
        if not 0 <= i <= self.size - self.k:
            raise IndexError(f"no length-{self.k} fragment starts at {pos}")
        kmer = self._slice(i, i + self.k)
        return kmer if self._lex else krf_direct(kmer, self.cfg)

    def iter_values(self, first: int, last: int) -> Iterator[OrderValue]:
        """Values of fragments first, first+1, ..., last (or downward if last < first).

        Values are rolled from the first one, so the iterator uses O(1)
        space besides the current k-mer.
        """
        k, s = self.k, self.start_pos
        step = 1 if last >= first else -1
        if self._lex:
            for p in range(first, last + step, step):
                yield self._slice(p - s, p - s + k)
            return
        cfg = self.cfg
        base, inv, bp, mod = cfg.base, cfg.base_inverse, cfg.base_pow, cfg.modulus
        get = self._get
        h = self.value_at(first)
        yield h
        if step == 1:
            for i in range(first - s + 1, last - s + 1):
                h = ((h - get(i - 1) * bp) * base + get(i + k - 1)) % mod
                yield h
        else:
            for i in range(first - s - 1, last - s - 1, -1):
                h = (get(i) * bp + (h - get(i + k)) * inv) % mod
                yield h

    # border modifications
    def prepend(self, a: int) -> Optional[FragmentPair]:
        self._push_front(a)
        self.start_pos -= 1
        self.size += 1
        k = self.k
        if self.size < k:
            return None
        if self._lex:
            return _tuple_new(FragmentPair, (self._slice(0, k), self.start_pos))
        cfg = self.cfg
        if self.size == k:
            value = krf_direct(self._slice(0, k), cfg)
            self.back_krf = value
        else:
            value = (a * cfg.base_pow + (self.front_krf - self._get(k)) * cfg.base_inverse) % cfg.modulus
        self.front_krf = value
        return _tuple_new(FragmentPair, (value, self.start_pos))

    def append(self, a: int) -> Optional[FragmentPair]:
        self._push_back(a)
        self.size += 1
        k, n = self.k, self.size
        if n < k:
            return None
        pos = self.start_pos + n - k
        if self._lex:
            return _tuple_new(FragmentPair, (self._slice(n - k, n), pos))
        cfg = self.cfg
        if n == k:
            value = krf_direct(self._slice(0, k), cfg)
            self.front_krf = value
        else:
            value = ((self.back_krf - self._get(n - k - 1) * cfg.base_pow) * cfg.base + a) % cfg.modulus
        self.back_krf = value
        return _tuple_new(FragmentPair, (value, pos))

    def delete_first(self) -> Optional[FragmentPair]:
        n, k = self.size, self.k
        if n == 0:
            raise EmptyStringError("delete_first on an empty string")
        removed = None
        if n >= k:
            if self._lex:
                removed = _tuple_new(FragmentPair, (self._slice(0, k), self.start_pos))
            else:
                removed = _tuple_new(FragmentPair, (self.front_krf, self.start_pos))
                if n == k:
                    self.front_krf = self.back_krf = None
                else:
                    cfg = self.cfg
                    self.front_krf = ((self.front_krf - self._get(0) * cfg.base_pow) * cfg.base
                                      + self._get(k)) % cfg.modulus
        self._pop_front()
        self.start_pos += 1
        self.size -= 1
        return removed

    def delete_last(self) -> Optional[FragmentPair]:
        n, k = self.size, self.k
        if n == 0:
            raise EmptyStringError("delete_last on an empty string")
        removed = None
        if n >= k:
            pos = self.start_pos + n - k
            if self._lex:
                removed = _tuple_new(FragmentPair, (self._slice(n - k, n), pos))
            else:
                removed = _tuple_new(FragmentPair, (self.back_krf, pos))
                if n == k:
                    self.front_krf = self.back_krf = None
                else:
                    cfg = self.cfg
                    self.back_krf = (self._get(n - k - 1) * cfg.base_pow
                                     + (self.back_krf - self._get(n - 1)) * cfg.base_inverse) % cfg.modulus
        self._pop_back()
        self.size -= 1
        return removed


class SemiDynamicString(_FragmentText):
    """Owned letters in a growable ring buffer (O(1) random access, amortized O(1) ends)."""

    __slots__ = ("_buf", "_mask", "_head", "_cap")

    def __init__(self, k: int, mode: OrderMode = OrderMode.KRF, cfg: Optional[HashConfig] = None,
                 letters: bytes = b"", start_pos: int = 0):
        super().__init__(k, mode, cfg, start_pos)
        cap = 16
        while cap < len(letters):
            cap <<= 1
        self._buf = bytearray(cap)
        self._cap = cap
        self._mask = cap - 1
        self._head = 0
        for a in letters:
            self.append(a)

    def _grow(self) -> None:
        data = self._slice(0, self.size)
        cap = len(self._buf) * 2
        self._buf = bytearray(cap)
        self._buf[:len(data)] = data
        self._cap = cap
        self._mask = cap - 1
        self._head = 0

    def _get(self, i: int) -> int:
        return self._buf[(self._head + i) & self._mask]

    def _slice(self, i: int, j: int) -> bytes:
        a = (self._head + i) & self._mask
        n = j - i
        end = a + n
        if end <= len(self._buf):
            return bytes(self._buf[a:end])
        return bytes(self._buf[a:]) + bytes(self._buf[:end - len(self._buf)])

    def _push_front(self, a: int) -> None:
        if self.size == len(self._buf):
            self._grow()
        self._head = (self._head - 1) & self._mask
        self._buf[self._head] = a

    def _push_back(self, a: int) -> None:
        if self.size == len(self._buf):
            self._grow()
        self._buf[(self._head + self.size) & self._mask] = a

    def _pop_front(self) -> None:
        self._head = (self._head + 1) & self._mask

    def _pop_back(self) -> None:
        pass

    # KRF-mode border modifications with the ring buffer inlined; these run
    # once per benchmark step, the generic versions handle LEX and set-up.
    def prepend(self, a: int) -> Optional[FragmentPair]:
        n = self.size
        if n < self.k or self._lex or n == self._cap:
            return _FragmentText.prepend(self, a)
        buf, mask = self._buf, self._mask
        head = self._head = (self._head - 1) & mask
        buf[head] = a
        self.size = n + 1
        pos = self.start_pos = self.start_pos - 1
        value = self.front_krf = (self._lead[a] + (self.front_krf - buf[(head + self.k) & mask])
                                  * self._inv) % self._mod
        return _tuple_new(FragmentPair, (value, pos))

    def append(self, a: int) -> Optional[FragmentPair]:
        n = self.size
        k = self.k
        if n < k or self._lex or n == self._cap:
            return _FragmentText.append(self, a)
        buf, mask, head = self._buf, self._mask, self._head
        buf[(head + n) & mask] = a
        self.size = n + 1
        value = self.back_krf = ((self.back_krf - self._lead[buf[(head + n - k) & mask]]) * self._base
                                 + a) % self._mod
        return _tuple_new(FragmentPair, (value, self.start_pos + n + 1 - k))

    def delete_first(self) -> Optional[FragmentPair]:
        n = self.size
        k = self.k
        if n <= k or self._lex:
            return _FragmentText.delete_first(self)
        buf, head = self._buf, self._head
        pos = self.start_pos
        old = self.front_krf
        self.front_krf = ((old - self._lead[buf[head]]) * self._base + buf[(head + k) & self._mask]) % self._mod
        self._head = (head + 1) & self._mask
        self.start_pos = pos + 1
        self.size = n - 1
        return _tuple_new(FragmentPair, (old, pos))

    def delete_last(self) -> Optional[FragmentPair]:
        n = self.size
        k = self.k
        if n <= k or self._lex:
            return _FragmentText.delete_last(self)
        buf, mask, head = self._buf, self._mask, self._head
        old = self.back_krf
        self.back_krf = (self._lead[buf[(head + n - k - 1) & mask]]
                         + (old - buf[(head + n - 1) & mask]) * self._inv) % self._mod
        self.size = n - 1
        return _tuple_new(FragmentPair, (old, self.start_pos + n - k))


class SourceWindow(_FragmentText):
    """A semi-dynamic window over a read-only source; letters are never copied.

    Positions are indices into `source`.  Border modifications must agree
    with the source: ``append(a)`` requires ``a == source[end_pos]``.
    """

    __slots__ = ("_src",)

    def __init__(self, source: bytes, k: int, mode: OrderMode = OrderMode.KRF,
                 cfg: Optional[HashConfig] = None, start_pos: int = 0):
        if not 0 <= start_pos <= len(source):
            raise IndexError(f"window start {start_pos} outside source of length {len(source)}")
        super().__init__(k, mode, cfg, start_pos)
        self._src = source

    def _get(self, i: int) -> int:
        return self._src[self.start_pos + i]

    def _slice(self, i: int, j: int) -> bytes:
        s = self.start_pos
        return bytes(self._src[s + i:s + j])

    def _push_front(self, a: int) -> None:
        p = self.start_pos - 1
        if p < 0 or self._src[p] != a:
            raise ValueError(f"prepended letter {a} does not match source at {p}")

    def _push_back(self, a: int) -> None:
        p = self.end_pos
        if p >= len(self._src) or self._src[p] != a:
            raise ValueError(f"appended letter {a} does not match source at {p}")

    def _pop_front(self) -> None:
        pass

    def _pop_back(self) -> None:
        pass

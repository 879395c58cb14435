"""Sequences of positive naturals under the prefix (substring) order.

Two carriers share one type: finite words, and eventually periodic infinite
words kept in canonical form (shortest preamble, primitive cycle).  Canonical
form makes equality of infinite sequences decidable, which is what keeps the
infinite half of the prefix order -- and with it antisymmetry -- decidable.

Genuinely aperiodic sequences appear only behind :class:`SeqStream`, a
memoizing index-function view used for prefix extraction.  Streams never take
part in equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable, Iterator

from .errors import InputError


class _Omega:
    """The length of an infinite sequence; totally ordered above every int."""

    __slots__ = ()

    def __le__(self, other):
        return other is OMEGA

    def __lt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, int) or other is OMEGA

    def __gt__(self, other):
        return isinstance(other, int)

    def __eq__(self, other):
        return other is OMEGA

    def __hash__(self):
        return hash("omega-length")

    def __repr__(self):
        return "w"


OMEGA = _Omega()

SeqLen = "int | _Omega"  # documentation alias; lengths are ints or OMEGA


def _check_entries(entries, what):
    for x in entries:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise InputError(f"{what} entries must be positive integers, got {x!r}")


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    """Shortest block whose repetition equals ``word``."""
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


@dataclass(frozen=True)
class Seq:
    """A nonempty finite or eventually periodic sequence of positive naturals.

    ``head`` alone encodes a finite word; a nonempty ``cycle`` encodes the
    infinite word ``head + cycle + cycle + ...``.  Construction canonicalizes:
    the cycle is reduced to its primitive root and the head is shortened while
    its last entry matches the cycle's last entry (rotating the cycle right),
    so equal sequences always compare equal structurally.
    """

    head: tuple[int, ...]
    cycle: tuple[int, ...] = ()

    def __post_init__(self):
        head = tuple(self.head)
        cycle = tuple(self.cycle)
        _check_entries(head, "sequence")
        _check_entries(cycle, "cycle")
        if not cycle:
            if not head:
                raise InputError("finite sequences must be nonempty")
        else:
            cycle = _primitive_root(cycle)
            while head and head[-1] == cycle[-1]:
                head = head[:-1]
                cycle = (cycle[-1],) + cycle[:-1]
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "cycle", cycle)

    # Introspection

    @property
    def is_finite(self) -> bool:
        return not self.cycle

    def length(self):
        """Number of entries: an int for finite words, OMEGA otherwise."""
        return len(self.head) if self.is_finite else OMEGA

    def at(self, k: int) -> int:
        """The k-th entry, 1-based.  Raises IndexError past a finite end."""
        if k < 1:
            raise IndexError(f"positions are 1-based, got {k}")
        if k <= len(self.head):
            return self.head[k - 1]
        if self.is_finite:
            raise IndexError(f"position {k} out of range for length {len(self.head)}")
        return self.cycle[(k - len(self.head) - 1) % len(self.cycle)]

    def prefix(self, k: int) -> "Seq":
        """The finite word made of the first k entries (k >= 1)."""
        if k < 1:
            raise InputError(f"prefix length must be >= 1, got {k}")
        if self.is_finite and k > len(self.head):
            raise InputError(f"prefix length {k} exceeds sequence length {len(self.head)}")
        return Seq(tuple(self.at(i) for i in range(1, k + 1)))

    def entries_upto(self, k: int) -> tuple[int, ...]:
        """The first min(k, length) entries as a tuple."""
        n = self.length()
        stop = k if n is OMEGA else min(k, n)
        return tuple(self.at(i) for i in range(1, stop + 1))

    def __str__(self):
        if self.is_finite:
            return "[" + ",".join(map(str, self.head)) + "]"
        return "[" + ",".join(map(str, self.head)) + "|" + ",".join(map(str, self.cycle)) + "]"


def finite(*entries: int) -> Seq:
    """Convenience constructor for finite words: finite(1, 5, 7, 11)."""
    if len(entries) == 1 and not isinstance(entries[0], int):
        entries = tuple(entries[0])
    return Seq(tuple(entries))


def periodic(head, cycle) -> Seq:
    """Convenience constructor for eventually periodic words."""
    return Seq(tuple(head), tuple(cycle))


def length(a: Seq):
    return a.length()


def component_index(a: Seq) -> int:
    """The first entry; sequences are order-comparable only within one component."""
    return a.at(1)


def substring_leq(a: Seq, b: Seq) -> bool:
    """The prefix order: a finite prefix of b, or a infinite and equal to b."""
    if a.is_finite:
        la = len(a.head)
        if b.is_finite and len(b.head) < la:
            return False
        return all(b.at(i) == a.head[i - 1] for i in range(1, la + 1))
    return a == b


def comparable(a: Seq, b: Seq) -> bool:
    return substring_leq(a, b) or substring_leq(b, a)


def has_upper_bound(a: Seq, b: Seq) -> bool:
    """Whether {a, b} admits a common extension.

    Decided by pointwise agreement up to the shorter length: a common
    extension forces agreement there, and agreement lets the longer word (or
    either, if both are infinite and hence equal) serve as the bound.  For two
    infinite words, agreement up to max(head) + lcm(cycles) entries already
    implies equality everywhere.
    """
    la, lb = a.length(), b.length()
    if la is OMEGA and lb is OMEGA:
        window = max(len(a.head), len(b.head)) + lcm(len(a.cycle), len(b.cycle))
    elif la is OMEGA:
        window = lb
    elif lb is OMEGA:
        window = la
    else:
        window = min(la, lb)
    return all(a.at(i) == b.at(i) for i in range(1, window + 1))


class SeqStream:
    """An infinite sequence presented as a 1-based index function.

    Supports entry lookup and prefix extraction only; a stream is not a value
    and never takes part in equality.  Lookups are memoized, so a single
    stream must not be advanced from two threads at once.
    """

    def __init__(self, fn: Callable[[int], int]):
        self._fn = fn
        self._cache: list[int] = []

    def at(self, k: int) -> int:
        if k < 1:
            raise IndexError(f"positions are 1-based, got {k}")
        while len(self._cache) < k:
            value = self._fn(len(self._cache) + 1)
            _check_entries((value,), "stream")
            self._cache.append(value)
        return self._cache[k - 1]

    def prefix(self, k: int) -> Seq:
        return Seq(tuple(self.at(i) for i in range(1, k + 1)))


def prefix_chain(a, upto: int) -> Iterator[Seq]:
    """The increasing chain of prefixes of ``a`` (a Seq or SeqStream)."""
    for k in range(1, upto + 1):
        yield a.prefix(k)


def all_finite_seqs(max_entry: int, max_len: int) -> Iterator[Seq]:
    """Every finite word with entries <= max_entry and length <= max_len."""
    level: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        level = [w + (x,) for w in level for x in range(1, max_entry + 1)]
        for w in level:
            yield Seq(w)

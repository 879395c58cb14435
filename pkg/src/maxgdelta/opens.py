"""Scott-open subsets of the spliced domain, described by compact generators.

An open is a finite union of parametric generator families; the denoted set
is the union of the principal up-sets of the described generators.  Since
the generators are compact and up-sets of compacts form a base of the Scott
topology of an algebraic domain, this loses nothing relevant while keeping
membership decidable in closed form per kind.

Arbitrary generator streams are also accepted, behind a scan budget: their
membership answers are IN or UNKNOWN, never a definitive OUT, so they can
only ever certify membership.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import InputError
from .seq import OMEGA, Seq
from .domain import Elem, is_compact, leq, plain, starred, xpoint


class Membership(enum.Enum):
    IN = "in"
    OUT = "out"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class WitnessResult:
    status: Membership
    generator: Elem | None = None


_IN_NONE = WitnessResult(Membership.OUT)


def _found(gen: Elem) -> WitnessResult:
    return WitnessResult(Membership.IN, gen)


@dataclass(frozen=True)
class XRankAtLeast:
    """Generators: every column point with finite level >= k."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError("x_rank_at_least needs k >= 1")

    def member_witness(self, u: Elem) -> WitnessResult:
        if u.is_x:
            if u.n >= self.k:
                return _found(xpoint(u.m, self.k))
            return _IN_NONE
        # a sequence dominates x(p, k) iff some entry at position p clears k
        s = u.seq
        span = len(s.head) if s.is_finite else len(s.head) + len(s.cycle)
        for p in range(1, span + 1):
            if s.at(p) >= self.k:
                return _found(xpoint(p, self.k))
        return _IN_NONE

    def generators(self, bound: int) -> Iterator[Elem]:
        for m in range(1, bound + 1):
            for j in range(self.k, bound + 1):
                yield xpoint(m, j)

    def covers_all_columns(self) -> bool:
        return True

    def covered_columns(self) -> set[int]:
        return set()

    def starred_tautology(self) -> bool:
        return self.k == 1  # every entry is >= 1


@dataclass(frozen=True)
class SigmaLenAtLeast:
    """Generators: every finite plain word of length >= k."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError("sigma_len_at_least needs k >= 1")

    def member_witness(self, u: Elem) -> WitnessResult:
        if u.is_seqlike and u.seq.length() >= self.k:
            return _found(plain(u.seq.prefix(self.k)))
        return _IN_NONE

    def generators(self, bound: int) -> Iterator[Elem]:
        from .seq import all_finite_seqs

        for s in all_finite_seqs(bound, bound):
            if len(s.head) >= self.k:
                yield plain(s)

    def covers_all_columns(self) -> bool:
        return False

    def covered_columns(self) -> set[int]:
        return set()

    def starred_tautology(self) -> bool:
        return True  # infinite payloads always reach length k


@dataclass(frozen=True)
class StarLenAtLeast:
    """Generators: every finite starred word of length >= k."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError("star_len_at_least needs k >= 1")

    def member_witness(self, u: Elem) -> WitnessResult:
        if u.is_starred and u.seq.length() >= self.k:
            return _found(starred(u.seq.prefix(self.k)))
        return _IN_NONE

    def generators(self, bound: int) -> Iterator[Elem]:
        from .seq import all_finite_seqs

        for s in all_finite_seqs(bound, bound):
            if len(s.head) >= self.k:
                yield starred(s)

    def covers_all_columns(self) -> bool:
        return False

    def covered_columns(self) -> set[int]:
        return set()

    def starred_tautology(self) -> bool:
        return True


@dataclass(frozen=True)
class XColumn:
    """Generators: the single column m from level min_n upward."""

    m: int
    min_n: int

    def __post_init__(self):
        if self.m < 1 or self.min_n < 1:
            raise InputError("x_column needs m >= 1 and min_n >= 1")

    def member_witness(self, u: Elem) -> WitnessResult:
        gen = xpoint(self.m, self.min_n)
        if leq(gen, u):
            return _found(gen)
        return _IN_NONE

    def generators(self, bound: int) -> Iterator[Elem]:
        for j in range(self.min_n, bound + 1):
            yield xpoint(self.m, j)

    def covers_all_columns(self) -> bool:
        return False

    def covered_columns(self) -> set[int]:
        return {self.m}

    def starred_tautology(self) -> bool:
        return self.min_n == 1


@dataclass(frozen=True)
class Single:
    """One explicit compact generator."""

    elem: Elem

    def __post_init__(self):
        if not is_compact(self.elem):
            raise InputError(f"generator {self.elem} is not compact")

    def member_witness(self, u: Elem) -> WitnessResult:
        if leq(self.elem, u):
            return _found(self.elem)
        return _IN_NONE

    def generators(self, bound: int) -> Iterator[Elem]:
        yield self.elem

    def covers_all_columns(self) -> bool:
        return False

    def covered_columns(self) -> set[int]:
        return {self.elem.m} if self.elem.is_x else set()

    def starred_tautology(self) -> bool:
        return self.elem.is_x and self.elem.n == 1


@dataclass(frozen=True)
class ExplicitList:
    """A finite list of compact generators."""

    elems: tuple[Elem, ...]

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(self.elems))
        for e in self.elems:
            if not is_compact(e):
                raise InputError(f"generator {e} is not compact")

    def member_witness(self, u: Elem) -> WitnessResult:
        for e in self.elems:
            if leq(e, u):
                return _found(e)
        return _IN_NONE

    def generators(self, bound: int) -> Iterator[Elem]:
        yield from self.elems

    def covers_all_columns(self) -> bool:
        return False

    def covered_columns(self) -> set[int]:
        return {e.m for e in self.elems if e.is_x}

    def starred_tautology(self) -> bool:
        return any(e.is_x and e.n == 1 for e in self.elems)


class GeneratorStream:
    """Generators given by an arbitrary stream; membership is semi-decided.

    A scan that finds a dominating generator within ``scan_budget`` steps
    answers IN; otherwise the answer is UNKNOWN.  Streams are ignored by the
    coverage check (they can only add coverage that cannot be verified), and
    unlike the declarative kinds a stream cursor must stay on one thread.
    """

    def __init__(self, factory: Callable[[], Iterator[Elem]], scan_budget: int = 1000):
        self.factory = factory
        self.scan_budget = scan_budget

    def member_witness(self, u: Elem) -> WitnessResult:
        for steps, gen in enumerate(self.factory()):
            if steps >= self.scan_budget:
                break
            if not is_compact(gen):
                raise InputError(f"stream produced a non-compact generator {gen}")
            if leq(gen, u):
                return _found(gen)
        return WitnessResult(Membership.UNKNOWN)

    def generators(self, bound: int) -> Iterator[Elem]:
        for steps, gen in enumerate(self.factory()):
            if steps >= bound:
                break
            yield gen

    def covers_all_columns(self) -> bool:
        return False

    def covered_columns(self) -> set[int]:
        return set()

    def starred_tautology(self) -> bool:
        return False


DSL_KINDS = (XRankAtLeast, SigmaLenAtLeast, StarLenAtLeast, XColumn, Single, ExplicitList)


@dataclass(frozen=True)
class OpenDesc:
    """A Scott-open set: the union of its families' generator up-sets."""

    families: tuple

    def __post_init__(self):
        object.__setattr__(self, "families", tuple(self.families))
        if not self.families:
            raise InputError("an open needs at least one generator family")

    def witness(self, u: Elem) -> WitnessResult:
        unknown = False
        for fam in self.families:
            res = fam.member_witness(u)
            if res.status is Membership.IN:
                return res
            if res.status is Membership.UNKNOWN:
                unknown = True
        return WitnessResult(Membership.UNKNOWN) if unknown else _IN_NONE

    def contains(self, u: Elem) -> bool:
        """Definite membership; UNKNOWN counts as not shown (never certifies)."""
        return self.witness(u).status is Membership.IN


def contains(o: OpenDesc, u: Elem) -> bool:
    return o.contains(u)


def uncovered_maximal(o: OpenDesc) -> Optional[Elem]:
    """A maximal element outside the open, or None when the open covers them all.

    Column tops first: without a rank family only finitely many columns are
    covered, and the first missing column top is a witness.  For the starred
    infinite sequences the remaining family constraints (entry thresholds and
    prefix extensions) confine a potential escape to a finite window, which a
    small exhaustive search settles exactly.
    """
    fams = [f for f in o.families if not isinstance(f, GeneratorStream)]
    if not any(f.covers_all_columns() for f in fams):
        covered = set().union(*(f.covered_columns() for f in fams)) if fams else set()
        m = 1
        while m in covered:
            m += 1
        return xpoint(m, OMEGA)
    if any(f.starred_tautology() for f in fams):
        return None
    word = _escaping_word(fams)
    if word is None:
        return None
    return starred(Seq(word, (1,)))


def _escaping_word(fams) -> Optional[tuple[int, ...]]:
    """A finite window whose 1-padded infinite extension avoids every family."""
    ranks = [f.k for f in fams if isinstance(f, XRankAtLeast)]
    columns: dict[int, int] = {}
    prefixes: list[tuple[int, ...]] = []
    for f in fams:
        if isinstance(f, XColumn):
            columns[f.m] = min(columns.get(f.m, 10**9), f.min_n)
        elif isinstance(f, Single):
            _escape_constraint(f.elem, columns, prefixes)
        elif isinstance(f, ExplicitList):
            for e in f.elems:
                _escape_constraint(e, columns, prefixes)
    window = max(
        [1]
        + [len(wd) for wd in prefixes]
        + [m for m in columns]
    )
    cap_global = min(ranks) - 1 if ranks else None

    def options(pos: int) -> range:
        cap = cap_global
        if pos + 1 in columns:
            col_cap = columns[pos + 1] - 1
            cap = col_cap if cap is None else min(cap, col_cap)
        fresh = max([wd[pos] for wd in prefixes if len(wd) > pos] + [0]) + 1
        top = fresh if cap is None else min(cap, fresh)
        return range(1, top + 1)

    def search(word: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        if any(len(wd) == len(word) and wd == word[: len(wd)] for wd in prefixes):
            return None  # extends a described generator: covered, back off
        if len(word) == window:
            return word
        for v in options(len(word)):
            hit = search(word + (v,))
            if hit is not None:
                return hit
        return None

    return search(())


def _escape_constraint(e: Elem, columns: dict[int, int], prefixes: list):
    if e.is_x:
        columns[e.m] = min(columns.get(e.m, 10**9), e.n)
    else:
        prefixes.append(e.seq.head)


def covers_max(o: OpenDesc) -> bool:
    """Whether every maximal element of the domain lies in the open."""
    return uncovered_maximal(o) is None


def canonical_level(k: int) -> OpenDesc:
    """Level k of the canonical indexed family: rank k column points plus all
    words (plain and starred) of length at least k."""
    if k < 1:
        raise InputError("levels are 1-based")
    return OpenDesc((XRankAtLeast(k), SigmaLenAtLeast(k), StarLenAtLeast(k)))


class OpensFamily:
    """An indexed family k -> open, the shape the diagonalizer consumes."""

    def __init__(self, name: str, at: Callable[[int], OpenDesc], depth_limit: int | None = None):
        self.name = name
        self._at = at
        self.depth_limit = depth_limit

    def open_at(self, k: int) -> OpenDesc:
        if k < 1:
            raise InputError("levels are 1-based")
        if self.depth_limit is not None and k > self.depth_limit:
            raise InputError(
                f"family {self.name!r} defines {self.depth_limit} levels; level {k} requested"
            )
        return self._at(k)

    @classmethod
    def canonical(cls) -> "OpensFamily":
        return cls("canonical", canonical_level)

    @classmethod
    def from_list(cls, opens: list[OpenDesc], name: str = "inline") -> "OpensFamily":
        opens = list(opens)
        if not opens:
            raise InputError("a family needs at least one open")
        return cls(name, lambda k: opens[k - 1], depth_limit=len(opens))

    @classmethod
    def parametric(cls, name: str, fn: Callable[[int], OpenDesc]) -> "OpensFamily":
        return cls(name, fn)


def intersection_member_prefix_check(family: OpensFamily, u: Elem, upto: int) -> bool:
    """Whether u lies in every level 1..upto of the family (vacuous for upto <= 0)."""
    return all(family.open_at(k).contains(u) for k in range(1, upto + 1))

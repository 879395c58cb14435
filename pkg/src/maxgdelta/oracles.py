"""Independent brute-force checkers used to cross-examine the closed forms.

Everything here recomputes from definitions -- entry-by-entry comparisons,
exhaustive extension searches, generator enumeration, directed-subset scans --
and deliberately shares no code path with the operations it audits.
"""

from __future__ import annotations

from itertools import chain as _chain

from .seq import OMEGA, Seq, all_finite_seqs
from .domain import Elem, leq, plain, starred, xpoint
from . import posets
from .opens import OpenDesc


def entries_agree(a: Seq, b: Seq, upto: int) -> bool:
    for i in range(1, upto + 1):
        if a.at(i) != b.at(i):
            return False
    return True


def prefix_leq_bruteforce(a: Seq, b: Seq) -> bool:
    """The order, recomputed entry by entry from the definition."""
    la, lb = a.length(), b.length()
    if la is not OMEGA:
        return lb >= la and entries_agree(a, b, la)
    if lb is not OMEGA:
        return False
    window = max(len(a.head), len(b.head)) + len(a.cycle) * len(b.cycle)
    return entries_agree(a, b, window)


def seq_upper_bound_bruteforce(a: Seq, b: Seq, max_entry: int, max_len: int) -> bool:
    """Search every finite word in the box for a common extension."""
    for w in all_finite_seqs(max_entry, max_len):
        if prefix_leq_bruteforce(a, w) and prefix_leq_bruteforce(b, w):
            return True
    return False


def elem_upper_bound_bruteforce(u: Elem, v: Elem, max_entry: int, max_len: int, max_idx: int) -> bool:
    """Search a finite box of domain elements for a common upper bound."""
    candidates = _chain(
        (plain(s) for s in all_finite_seqs(max_entry, max_len)),
        (starred(s) for s in all_finite_seqs(max_entry, max_len)),
        (xpoint(m, n) for m in range(1, max_idx + 1) for n in range(1, max_idx + 1)),
        (xpoint(m, OMEGA) for m in range(1, max_idx + 1)),
    )
    return any(leq(u, w) and leq(v, w) for w in candidates)


def open_contains_bruteforce(o: OpenDesc, u: Elem, bound: int) -> bool:
    """Membership via explicit generator enumeration up to the bound."""
    return any(leq(c, u) for fam in o.families for c in fam.generators(bound))


def noncompact_chain(u: Elem, depth: int = 8) -> list[Elem] | None:
    """The canonical strictly increasing chain converging to u, when one exists.

    Prefix chains for infinite payloads (starred prefixes under a starred
    element), the finite column levels for a column top; None for elements
    with no such chain.
    """
    if u.is_x:
        if u.n is OMEGA:
            return [xpoint(u.m, n) for n in range(1, depth + 1)]
        return None
    if u.seq.is_finite:
        return None
    build = starred if u.is_starred else plain
    return [build(u.seq.prefix(k)) for k in range(1, depth + 1)]


def compact_by_chain_oracle(u: Elem, depth: int = 8) -> bool:
    """Compactness decided against the canonical chain: u is non-compact iff
    its canonical chain rises strictly below u and no chain member dominates
    it.  Verifies the chain's shape before trusting it."""
    chain = noncompact_chain(u, depth)
    if chain is None:
        return True
    for lo, hi in zip(chain, chain[1:]):
        assert leq(lo, hi) and lo != hi, "canonical chain must rise strictly"
    assert all(leq(c, u) and c != u for c in chain), "canonical chain must sit below u"
    return any(leq(u, c) for c in chain)


def scott_open_definitional(p: posets.FinitePoset, subset) -> bool:
    """The two-clause definition, brute-forced over all directed subsets."""
    sub = p.check_membership(subset)
    if not all(y in sub for x in sub for y in p.elements if p.leq(x, y)):
        return False
    for d in posets.directed_subsets(p):
        s = posets.sup_of(p, d)
        if s is not None and s in sub and not (d & sub):
            return False
    return True


def gdelta_by_intersection(p: posets.FinitePoset, subset) -> bool:
    """A set is an intersection of opens iff it equals the intersection of
    every upper set containing it (enumerated outright)."""
    sub = p.check_membership(subset)
    meet = set(p.elements)
    n = len(p.elements)
    for mask in range(1 << n):
        cand = frozenset(p.elements[i] for i in range(n) if mask >> i & 1)
        if sub <= cand and posets.is_upper_set(p, cand):
            meet &= cand
    return frozenset(meet) == sub


# Known counts of partial orders on small labeled sets, for enumeration checks.
LABELED_POSET_COUNTS = {1: 1, 2: 3, 3: 19, 4: 219}
ISO_POSET_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16}

"""Finite and oracle-presented posets: axioms, Scott opens, way-below, Gdelta.

Finite posets carry an explicit relation table (reflexivity is always
implicit).  Oracle posets pair a countable enumerator with a decidable order
predicate; bounded questions use a truncation depth, and fixtures that admit
exact answers plug in a complete minimal-upper-bound hook.

For finite posets the Scott machinery collapses: every element is compact,
the Scott opens are exactly the upper sets, and a set is an intersection of
opens iff it is open itself -- so the maximal elements of a finite poset are
always a countable intersection of opens.  The interesting behaviour of the
spliced domain is essentially infinite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Any, Callable, Iterable, Iterator, Optional

from .errors import IndeterminateError, InputError, PosetError
from .seq import OMEGA


@dataclass(frozen=True)
class Violation:
    law: str  # "antisymmetry" | "transitivity" | "irreflexive-loop"
    elems: tuple

    def __str__(self):
        return f"{self.law}: {', '.join(map(str, self.elems))}"


class FinitePoset:
    """An explicit finite relation, reflexive pairs implicit.

    By default the constructor validates the partial-order axioms and raises
    PosetError on violations; pass validate=False to hold a raw relation
    (verify_partial_order lists its defects).
    """

    def __init__(self, elements: Iterable[Any], pairs: Iterable[tuple] = (), *, validate: bool = True):
        self.elements = tuple(dict.fromkeys(elements))
        index = set(self.elements)
        self._up = {x: {x} for x in self.elements}
        for a, b in pairs:
            if a not in index or b not in index:
                raise InputError(f"relation pair ({a!r}, {b!r}) mentions unknown elements")
            self._up[a].add(b)
        if validate:
            report = verify_partial_order(self)
            if report:
                raise PosetError(f"not a partial order ({len(report)} violations)", report)

    @classmethod
    def from_relation(cls, elements, pairs, *, close: bool = True) -> "FinitePoset":
        """Build a poset from generating pairs, applying transitive closure."""
        p = cls(elements, pairs, validate=False)
        if close:
            changed = True
            while changed:
                changed = False
                for x in p.elements:
                    grown = set().union(*(p._up[y] for y in p._up[x]))
                    if not grown <= p._up[x]:
                        p._up[x] |= grown
                        changed = True
        report = verify_partial_order(p)
        if report:
            raise PosetError(f"not a partial order ({len(report)} violations)", report)
        return p

    def leq(self, a, b) -> bool:
        return b in self._up[a]

    def pairs(self) -> set[tuple]:
        return {(a, b) for a in self.elements for b in self._up[a]}

    def check_membership(self, subset: Iterable[Any]) -> frozenset:
        sub = frozenset(subset)
        unknown = sub - set(self.elements)
        if unknown:
            raise InputError(f"unknown labels: {sorted(map(str, unknown))}")
        return sub

    def __len__(self):
        return len(self.elements)


def verify_partial_order(p: FinitePoset) -> list[Violation]:
    """All antisymmetry and transitivity defects of the stored relation.

    Reflexivity cannot fail (it is implicit); an empty report means valid.
    """
    out: list[Violation] = []
    for a in p.elements:
        for b in p._up[a]:
            if a != b and a in p._up[b]:
                if str(a) <= str(b):  # report each bad pair once
                    out.append(Violation("antisymmetry", (a, b)))
            for c in p._up[b]:
                if c not in p._up[a]:
                    out.append(Violation("transitivity", (a, b, c)))
    return out


def upset(p: FinitePoset, subset: Iterable[Any]) -> frozenset:
    sub = p.check_membership(subset)
    return frozenset(y for y in p.elements if any(p.leq(x, y) for x in sub))


def downset(p: FinitePoset, subset: Iterable[Any]) -> frozenset:
    sub = p.check_membership(subset)
    return frozenset(y for y in p.elements if any(p.leq(y, x) for x in sub))


def maximals(p: FinitePoset) -> frozenset:
    return frozenset(x for x in p.elements if all(not p.leq(x, y) or x == y for y in p.elements))


def is_upper_set(p: FinitePoset, subset: Iterable[Any]) -> bool:
    sub = p.check_membership(subset)
    return all(y in sub for x in sub for y in p.elements if p.leq(x, y))


def directed_subsets(p: FinitePoset) -> Iterator[frozenset]:
    """All nonempty directed subsets (brute force; intended for small posets)."""
    elems = p.elements
    for r in range(1, len(elems) + 1):
        for combo in combinations(elems, r):
            if all(
                any(p.leq(a, c) and p.leq(b, c) for c in combo)
                for a in combo
                for b in combo
            ):
                yield frozenset(combo)


def sup_of(p: FinitePoset, subset: Iterable[Any]):
    """Least upper bound within the poset, or None when it does not exist."""
    sub = p.check_membership(subset)
    ubs = [u for u in p.elements if all(p.leq(x, u) for x in sub)]
    for u in ubs:
        if all(p.leq(u, v) for v in ubs):
            return u
    return None


def way_below(p: FinitePoset, x, y) -> bool:
    """The definition, brute-forced: every directed set whose sup dominates y
    already contains a dominator of x.  In a finite poset this coincides with
    the order itself."""
    p.check_membership([x, y])
    for d in directed_subsets(p):
        s = sup_of(p, d)
        if s is not None and p.leq(y, s) and not any(p.leq(x, e) for e in d):
            return False
    return True


def is_scott_open(p: FinitePoset, subset: Iterable[Any]) -> bool:
    """Scott-openness; in a finite poset the directed-sup clause is automatic,
    so this is the upper-set test."""
    return is_upper_set(p, subset)


def is_gdelta(p: FinitePoset, subset: Iterable[Any]) -> bool:
    """Whether the set is a countable intersection of Scott opens; for finite
    posets that happens exactly when the set is Scott open itself."""
    return is_scott_open(p, subset)


def all_posets(n: int) -> Iterator[FinitePoset]:
    """Every partial order on the labels 0..n-1 (brute force; fine for n <= 4)."""
    labels = tuple(range(n))
    if n == 0:
        yield FinitePoset(())
        return
    offdiag = [(a, b) for a in labels for b in labels if a != b]
    for mask in range(1 << len(offdiag)):
        pairs = [offdiag[i] for i in range(len(offdiag)) if mask >> i & 1]
        p = FinitePoset(labels, pairs, validate=False)
        if not verify_partial_order(p):
            yield p


def canonical_posets(n: int) -> list[FinitePoset]:
    """One representative per isomorphism class of posets on n labels."""
    seen = set()
    out = []
    for p in all_posets(n):
        key = min(
            tuple(sorted((pi[a], pi[b]) for a, b in p.pairs()))
            for perm in permutations(range(n))
            for pi in [dict(zip(range(n), perm))]
        )
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


@dataclass(frozen=True)
class SupResult:
    kind: str  # "sup" | "no_sup"
    value: Any = None
    witness: tuple = ()
    reason: str = ""

    @classmethod
    def sup(cls, value) -> "SupResult":
        return cls("sup", value=value)

    @classmethod
    def none(cls, reason: str, witness: tuple = ()) -> "SupResult":
        return cls("no_sup", reason=reason, witness=witness)


@dataclass
class OraclePoset:
    """A countable poset given by an enumerator and a decidable order predicate.

    ``minimal_upper_bounds`` is an optional exact hook: given a query it
    returns the complete set of minimal upper bounds (every upper bound lies
    above one of them), or None when it cannot answer.  Without a conclusive
    hook, sup questions on a genuinely infinite universe are indeterminate.
    """

    universe: Callable[[], Iterator[Any]]
    leq: Callable[[Any, Any], bool]
    truncation: int = 64
    minimal_upper_bounds: Optional[Callable[[Any], Optional[list]]] = None

    def enumerate(self, depth: int | None = None) -> tuple[list, bool]:
        """First ``depth`` elements and whether that exhausted the universe."""
        depth = self.truncation if depth is None else depth
        out = []
        it = self.universe()
        for x in it:
            out.append(x)
            if len(out) > depth:
                return out[:depth], False
        return out, True

    def check_axioms(self, depth: int | None = None) -> list[Violation]:
        """Partial-order defects on the enumerated prefix."""
        prefix, _ = self.enumerate(depth)
        out = []
        for a in prefix:
            if not self.leq(a, a):
                out.append(Violation("irreflexive-loop", (a,)))
        for a, b in product(prefix, repeat=2):
            if a != b and self.leq(a, b) and self.leq(b, a):
                out.append(Violation("antisymmetry", (a, b)))
        for a, b, c in product(prefix, repeat=3):
            if self.leq(a, b) and self.leq(b, c) and not self.leq(a, c):
                out.append(Violation("transitivity", (a, b, c)))
        return out


def sup_in_oracle(p: OraclePoset, targets) -> SupResult:
    """Supremum of ``targets`` (a finite label collection, or a symbolic query
    the oracle's hook understands).

    Uses the exact hook when it answers; otherwise decides within the
    enumerated universe when enumeration exhausts it, and raises
    IndeterminateError when the truncation cannot settle the question.
    """
    if p.minimal_upper_bounds is not None:
        mubs = p.minimal_upper_bounds(targets)
        if mubs is not None:
            if not mubs:
                return SupResult.none("no upper bound")
            if len(mubs) == 1:
                return SupResult.sup(mubs[0])
            return SupResult.none("incomparable minimal upper bounds", tuple(mubs[:2]))
    if isinstance(targets, str):
        raise InputError(f"symbolic query {targets!r} needs an oracle hook")
    targets = list(targets)
    if not targets:
        raise InputError("sup of the empty set is not supported")
    prefix, complete = p.enumerate()
    if not complete:
        raise IndeterminateError(
            f"truncation {p.truncation} does not exhaust the universe; cannot decide sup"
        )
    known = set(prefix)
    missing = [t for t in targets if t not in known]
    if missing:
        raise InputError(f"unknown labels: {missing}")
    ubs = [u for u in prefix if all(p.leq(t, u) for t in targets)]
    if not ubs:
        return SupResult.none("no upper bound")
    for u in ubs:
        if all(p.leq(u, v) for v in ubs):
            return SupResult.sup(u)
    minimal = [u for u in ubs if not any(v != u and p.leq(v, u) for v in ubs)]
    return SupResult.none("incomparable minimal upper bounds", tuple(minimal[:2]))


X_CHAIN = "x-chain"
Y_CHAIN = "y-chain"


class ChainPairPoset:
    """Two parallel chains x1 <= x2 <= ... <= xw and y1 <= y2 <= ... <= yw with
    the cross relations xm <= yn for finite m <= n (hence xm <= yw).

    In the base order the two tops are incomparable, so the x-chain has two
    minimal upper bounds and no supremum.  The extended order adds the single
    pair xw <= yw, and the very same chain then converges to xw.  Everything
    is index arithmetic, so answers are exact -- no truncation artifacts.
    """

    def __init__(self, extended: bool):
        self.extended = extended

    @staticmethod
    def label(side: str, n) -> str:
        return f"{side}w" if n is OMEGA else f"{side}{n}"

    @staticmethod
    def parse_label(text: str):
        side = text[:1]
        if side not in ("x", "y") or len(text) < 2:
            raise InputError(f"bad chain-pair label {text!r} (expect e.g. x3, yw)")
        rest = text[1:]
        if rest == "w":
            return side, OMEGA
        if not rest.isdigit() or int(rest) < 1:
            raise InputError(f"bad chain-pair index in {text!r}")
        return side, int(rest)

    def leq(self, a: str, b: str) -> bool:
        sa, na = self.parse_label(a)
        sb, nb = self.parse_label(b)
        if sa == sb:
            return na <= nb
        if sa == "x" and sb == "y":
            if na is OMEGA:
                return self.extended and nb is OMEGA
            return na <= nb
        return False

    def universe(self) -> Iterator[str]:
        yield "xw"
        yield "yw"
        n = 1
        while True:
            yield f"x{n}"
            yield f"y{n}"
            n += 1

    def minimal_upper_bounds(self, targets) -> Optional[list[str]]:
        """Complete minimal upper bounds for a finite label set or a whole chain."""
        if targets == X_CHAIN:
            # upper bounds are exactly the two tops
            if self.extended:
                return ["xw"]
            return ["xw", "yw"]
        if targets == Y_CHAIN:
            return ["yw"]
        if isinstance(targets, str):
            return None
        parsed = [self.parse_label(t) for t in targets]
        if not parsed:
            return None
        indices = {n for _, n in parsed if n is not OMEGA}
        candidates = [
            self.label(side, n)
            for side in ("x", "y")
            for n in sorted(indices) + [OMEGA]
        ]
        labels = [self.label(s, n) for s, n in parsed]
        ubs = [c for c in candidates if all(self.leq(t, c) for t in labels)]
        return [u for u in ubs if not any(v != u and self.leq(v, u) for v in ubs)]

    def as_oracle(self, truncation: int = 64) -> OraclePoset:
        return OraclePoset(
            universe=self.universe,
            leq=self.leq,
            truncation=truncation,
            minimal_upper_bounds=self.minimal_upper_bounds,
        )

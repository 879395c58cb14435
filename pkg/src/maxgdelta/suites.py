"""Named invariant suites over the sequence order, the spliced domain and the
finite-poset theory.

Each check recomputes a law from scratch (exhaustively on a truncation, or on
seeded random samples) and reports case counts plus any violations found.
The randomized parts draw from a fixed default seed so transcripts are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError
from .seq import OMEGA, Seq, SeqStream, all_finite_seqs, comparable, has_upper_bound, substring_leq
from . import domain
from .domain import (
    IndexSet,
    directed_restriction_check,
    is_compact,
    is_maximal,
    leq,
    min_upper_generators,
    plain,
    refute_chain_upper_bound,
    star,
    starred,
    truncation,
    xpoint,
    xpoint_star_equivalence,
    star_order_equivalence,
    chain_sup_x,
)
from . import posets, oracles
from .posets import ChainPairPoset, X_CHAIN, Y_CHAIN, all_posets, canonical_posets, maximals, sup_in_oracle

DEFAULT_SEED = 20260
MAX_REPORTED = 5

SCOPES = ("seq", "L", "finite", "all")


@dataclass
class CheckResult:
    check_id: str
    description: str
    cases: int
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class SuiteReport:
    scope: str
    params: dict
    results: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def _note(result: CheckResult, message: str):
    if len(result.violations) < MAX_REPORTED:
        result.violations.append(message)
    else:  # keep counting without growing the report
        result.violations[-1] = "... more violations suppressed"


def check_partial_order_elems(elems, leq_fn):
    """Exhaustive axiom check via relation bitmasks; logically the full pair
    and triple scan, reported with exact counts."""
    n = len(elems)
    rows = []
    for a in elems:
        row = 0
        for j, b in enumerate(elems):
            if leq_fn(a, b):
                row |= 1 << j
        rows.append(row)
    violations = []
    for i in range(n):
        if not rows[i] >> i & 1:
            violations.append(f"reflexivity: {elems[i]}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] >> j & 1 and rows[j] >> i & 1 and elems[i] != elems[j]:
                violations.append(f"antisymmetry: {elems[i]} / {elems[j]}")
    for i in range(n):
        row_i = rows[i]
        for j in range(n):
            if row_i >> j & 1:
                gap = rows[j] & ~row_i
                if gap:
                    c = gap.bit_length() - 1
                    violations.append(
                        f"transitivity: {elems[i]} <= {elems[j]} <= {elems[c]} but not {elems[i]} <= {elems[c]}"
                    )
    return violations, n * n, n * n * n


def random_seq(rng: random.Random, max_entry: int = 6, max_len: int = 5, periodic_share: float = 0.4) -> Seq:
    if rng.random() < periodic_share:
        head = tuple(rng.randint(1, max_entry) for _ in range(rng.randint(0, max_len - 1)))
        cycle = tuple(rng.randint(1, max_entry) for _ in range(rng.randint(1, max_len)))
        return Seq(head, cycle)
    return Seq(tuple(rng.randint(1, max_entry) for _ in range(rng.randint(1, max_len))))


def _periodic_payloads(bound: int) -> tuple[Seq, ...]:
    return (Seq((), (1,)), Seq((), (1, 2)), Seq((min(2, bound),), (1,)))


# --- sequence scope -------------------------------------------------------


def _seq_order_axioms(samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    pool = [random_seq(rng) for _ in range(max(12, samples // 10))]
    pool += list(all_finite_seqs(2, 2))
    pool = list(dict.fromkeys(pool))
    out = CheckResult("seq-order-axioms", "prefix order is reflexive, antisymmetric, transitive", 0)
    violations, pairs, triples = check_partial_order_elems(pool, substring_leq)
    out.cases = triples
    for v in violations:
        _note(out, v)
    return out


def _seq_compacts(samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 1)
    out = CheckResult(
        "seq-compacts-are-finite-words",
        "finite words are compact along prefix chains; infinite words are not",
        0,
    )
    targets = [random_seq(rng, periodic_share=1.0) for _ in range(10)]
    targets_streams = [SeqStream(lambda k: k), SeqStream(lambda k: (k % 3) + 1)]
    for t in targets:
        for k in range(1, 7):
            a = t.prefix(k)
            # a below the chain limit: some chain member dominates a
            out.cases += 1
            if not substring_leq(a, t.prefix(k + 2)):
                _note(out, f"prefix {a} not dominated within the chain of {t}")
        # the infinite word itself is not compact: no prefix dominates it
        out.cases += 1
        if any(substring_leq(t, t.prefix(k)) for k in range(1, 9)):
            _note(out, f"infinite {t} dominated by one of its prefixes")
    for st in targets_streams:
        for k in range(1, 7):
            out.cases += 1
            if not substring_leq(st.prefix(k), st.prefix(k + 1)):
                _note(out, "stream prefixes fail to chain upward")
    return out


def _seq_prefix_sup(samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 2)
    out = CheckResult(
        "seq-infinite-is-prefix-sup",
        "an infinite word sits above all its prefixes and below any common bound",
        0,
    )
    for _ in range(20):
        a = random_seq(rng, periodic_share=1.0)
        for k in range(1, 7):
            out.cases += 1
            if not substring_leq(a.prefix(k), a):
                _note(out, f"prefix {k} of {a} not below it")
        # candidate bounds: a itself and perturbed periodic words
        for b in (a, random_seq(rng, periodic_share=1.0)):
            window = max(len(a.head), len(b.head)) + len(a.cycle) * len(b.cycle)
            above_all = all(substring_leq(a.prefix(k), b) for k in range(1, window + 1))
            out.cases += 1
            if above_all and not substring_leq(a, b):
                _note(out, f"{b} bounds every prefix of {a} yet not {a}")
    return out


def _seq_bounded_iff_comparable(bound: int = 3, depth: int = 3) -> CheckResult:
    out = CheckResult(
        "seq-bounded-iff-comparable",
        "two words share an upper bound exactly when one extends the other",
        0,
    )
    words = list(all_finite_seqs(bound, depth))
    for a in words:
        for b in words:
            out.cases += 1
            if has_upper_bound(a, b) != comparable(a, b):
                _note(out, f"bounded/comparable disagree on {a}, {b}")
    return out


def _seq_component(bound: int = 3, depth: int = 3) -> CheckResult:
    out = CheckResult(
        "seq-prefix-fixes-component",
        "the order never crosses first-entry components",
        0,
    )
    words = list(all_finite_seqs(bound, depth))
    for a in words:
        for b in words:
            out.cases += 1
            if substring_leq(a, b) and a.at(1) != b.at(1):
                _note(out, f"{a} <= {b} crosses components")
    return out


# --- spliced-domain scope -------------------------------------------------


def _domain_axioms(bound: int, depth: int) -> CheckResult:
    elems = truncation(bound, depth, _periodic_payloads(bound))
    out = CheckResult(
        "domain-order-axioms",
        f"order axioms exhaustively on the truncation ({len(elems)} elements)",
        0,
    )
    violations, pairs, triples = check_partial_order_elems(elems, leq)
    out.cases = triples
    for v in violations:
        _note(out, v)
    return out


def _domain_star_membership(bound: int, depth: int, samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 3)
    out = CheckResult(
        "star-membership-transport",
        "a column point sits below a word iff it sits below the starred word",
        0,
    )
    payloads = list(all_finite_seqs(bound, depth)) + list(_periodic_payloads(bound))
    for k in range(1, bound + 1):
        for n in range(1, bound + 1):
            for a in payloads:
                out.cases += 1
                if not xpoint_star_equivalence(k, n, a):
                    _note(out, f"transport fails for x({k},{n}) under {a}")
    for _ in range(samples):
        k, n = rng.randint(1, 9), rng.randint(1, 9)
        a = random_seq(rng)
        out.cases += 1
        if not xpoint_star_equivalence(k, n, a):
            _note(out, f"transport fails for x({k},{n}) under {a}")
    return out


def _domain_star_order(bound: int, depth: int, samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 4)
    out = CheckResult(
        "star-order-transport",
        "plain<=plain, plain<=starred, starred<=starred and payload prefix coincide",
        0,
    )
    payloads = list(all_finite_seqs(bound, depth)) + list(_periodic_payloads(bound))
    for a in payloads:
        for b in payloads:
            out.cases += 1
            if not star_order_equivalence(a, b):
                _note(out, f"the four renderings disagree on {a}, {b}")
    for _ in range(samples):
        a, b = random_seq(rng), random_seq(rng)
        out.cases += 1
        if not star_order_equivalence(a, b):
            _note(out, f"the four renderings disagree on {a}, {b}")
    return out


def _domain_lower_upper_sets(bound: int, depth: int) -> CheckResult:
    elems = truncation(bound, depth, _periodic_payloads(bound))
    out = CheckResult(
        "plain-part-lower-starred-part-upper",
        "column points and plain words form a lower set; starred words an upper set",
        0,
    )
    for u in elems:
        for v in elems:
            if not leq(u, v):
                continue
            out.cases += 1
            if not v.is_starred and u.is_starred:
                _note(out, f"lower set broken: {u} <= {v}")
            if u.is_starred and not v.is_starred:
                _note(out, f"upper set broken: {u} <= {v}")
    return out


def _maximality_candidates(u, elems, bound):
    yield from elems
    if u.is_x:
        if u.n is not OMEGA:
            yield xpoint(u.m, u.n + 1)
            yield xpoint(u.m, OMEGA)
    else:
        if u.seq.is_finite:
            for j in range(1, bound + 1):
                ext = Seq(u.seq.head + (j,))
                yield plain(ext) if u.is_plain else starred(ext)
                yield starred(ext)
        if u.is_plain:
            yield star(u)


def _domain_maximality(bound: int, depth: int) -> CheckResult:
    elems = truncation(bound, depth, _periodic_payloads(bound))
    out = CheckResult(
        "maximality-closed-form",
        "the maximality test agrees with a no-strictly-above search",
        0,
    )
    for u in elems:
        out.cases += 1
        above = any(v != u and leq(u, v) for v in _maximality_candidates(u, elems, bound))
        if is_maximal(u) == above:
            _note(out, f"maximality disagrees for {u}")
    return out


def _domain_generator_antichain(bound: int = 3) -> CheckResult:
    out = CheckResult(
        "minimal-cover-antichain",
        "distinct minimal covers of a column point share no upper bound",
        0,
    )
    for k in (1, 2):
        for m in range(1, bound + 1):
            covers = min_upper_generators(k, m)
            members = [s for s in all_finite_seqs(bound + m, k) if covers.contains(s)]
            for a in members:
                for b in members:
                    if a == b:
                        continue
                    out.cases += 1
                    if domain.has_upper_bound(plain(a), plain(b)):
                        _note(out, f"covers {a}, {b} of x({k},{m}) are bounded")
            for s in members:
                out.cases += 1
                if not leq(xpoint(k, m), plain(s)):
                    _note(out, f"claimed cover {s} not above x({k},{m})")
    return out


def _domain_compactness(bound: int, depth: int, samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 5)
    out = CheckResult(
        "compactness-chain-oracle",
        "the compactness test agrees with the canonical-chain oracle",
        0,
    )
    elems = truncation(bound, depth, _periodic_payloads(bound))
    extra = []
    for _ in range(samples // 6):
        payload = random_seq(rng, periodic_share=1.0)
        extra.append(plain(payload))
        extra.append(starred(payload))
    for u in elems + extra:
        out.cases += 1
        if is_compact(u) != oracles.compact_by_chain_oracle(u):
            _note(out, f"compactness disagrees for {u}")
    return out


def _domain_chain_refutation(samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 6)
    out = CheckResult(
        "column-chain-refutation",
        "no sequence bounds an unbounded column chain; refutations verify",
        0,
    )
    index_sets = [
        IndexSet.naturals(),
        IndexSet.evens(),
        IndexSet.odds(),
        IndexSet.primes(),
        IndexSet.arithmetic(5, 7),
    ]
    for ns in index_sets:
        for _ in range(max(4, samples // 25)):
            m = rng.randint(1, 5)
            payload = random_seq(rng, max_entry=9, max_len=6)
            cand = plain(payload) if rng.random() < 0.5 else starred(payload)
            res = refute_chain_upper_bound(m, ns, cand)
            out.cases += 1
            if res is None:
                _note(out, f"{cand} reported as a bound of column {m} over {ns}")
            elif leq(xpoint(m, res.index), cand):
                _note(out, f"refutation {res.index} for {cand} fails the direct order check")
        out.cases += 1
        if chain_sup_x(2, ns) != xpoint(2, OMEGA):
            _note(out, f"column chain over {ns} does not converge to the top")
    return out


def _domain_parts_subdcpo(seed: int) -> CheckResult:
    rng = random.Random(seed + 7)
    out = CheckResult(
        "parts-closed-under-sups",
        "each part keeps the sups of its directed subsets",
        0,
    )
    # finite directed sets have a greatest member, which stays in the part
    for _ in range(40):
        w = random_seq(rng)
        part = plain if rng.random() < 0.5 else starred
        chain = [part(w.prefix(k)) for k in range(1, (len(w.head) + len(w.cycle)) or 2)]
        if not chain:
            continue
        out.cases += 1
        top = chain[-1]
        if not all(leq(c, top) for c in chain):
            _note(out, f"prefix chain of {w} broken")
        if top.kind != chain[0].kind:
            _note(out, f"sup of a chain escaped its part for {w}")
    # periodic limits: every prefix of an infinite word stays below it
    for _ in range(20):
        w = random_seq(rng, periodic_share=1.0)
        out.cases += 1
        if not all(substring_leq(w.prefix(k), w) for k in range(1, 8)):
            _note(out, f"{w} fails to bound its prefixes")
    return out


def _domain_cofinality(samples: int, seed: int) -> CheckResult:
    rng = random.Random(seed + 8)
    out = CheckResult(
        "bounded-directed-cofinality",
        "in a directed set bounded inside a sequence part, that part is cofinal",
        0,
    )
    for _ in range(max(20, samples // 10)):
        w = random_seq(rng, max_entry=4, max_len=5)
        target_starred = rng.random() < 0.5
        top = starred(w) if target_starred else plain(w)
        members = [top]
        for k in range(1, (len(w.head) or 1)):
            members.append(plain(w.prefix(k)))
        width = w.head[0] if w.head else w.at(1)
        members.append(xpoint(1, rng.randint(1, width)))
        members = [m for m in members if leq(m, top)]
        try:
            ok = directed_restriction_check(members, top.kind)
        except InputError:
            continue  # sampled set failed a precondition; not a counterexample
        out.cases += 1
        if not ok:
            _note(out, f"cofinality fails for bound {top}")
    return out


# --- finite-poset scope ----------------------------------------------------


def _finite_counts(max_elems: int) -> CheckResult:
    out = CheckResult(
        "poset-enumeration-counts",
        "enumeration reproduces the known counts of small partial orders",
        0,
    )
    for n in range(1, max_elems + 1):
        labeled = sum(1 for _ in all_posets(n))
        out.cases += 1
        if labeled != oracles.LABELED_POSET_COUNTS[n]:
            _note(out, f"{labeled} labeled posets on {n} points, expected {oracles.LABELED_POSET_COUNTS[n]}")
        classes = len(canonical_posets(n))
        out.cases += 1
        if classes != oracles.ISO_POSET_COUNTS[n]:
            _note(out, f"{classes} classes on {n} points, expected {oracles.ISO_POSET_COUNTS[n]}")
    return out


def _finite_way_below(max_elems: int) -> CheckResult:
    out = CheckResult(
        "way-below-is-order",
        "in finite posets the way-below relation is the order itself",
        0,
    )
    for n in range(1, max_elems + 1):
        for p in all_posets(n):
            for x in p.elements:
                for y in p.elements:
                    out.cases += 1
                    if posets.way_below(p, x, y) != p.leq(x, y):
                        _note(out, f"way-below mismatch at {x},{y} in {sorted(p.pairs())}")
    return out


def _finite_scott_open(max_elems: int) -> CheckResult:
    out = CheckResult(
        "scott-open-is-upper",
        "finite Scott opens are exactly the upper sets (vs. the definition)",
        0,
    )
    for n in range(1, max_elems + 1):
        for p in canonical_posets(n):
            for mask in range(1 << n):
                subset = frozenset(p.elements[i] for i in range(n) if mask >> i & 1)
                out.cases += 1
                lhs = posets.is_scott_open(p, subset)
                if lhs != oracles.scott_open_definitional(p, subset):
                    _note(out, f"openness mismatch on {sorted(subset)} in {sorted(p.pairs())}")
                if lhs != posets.is_upper_set(p, subset):
                    _note(out, f"upper-set mismatch on {sorted(subset)}")
    return out


def _finite_gdelta(max_elems: int) -> CheckResult:
    out = CheckResult(
        "gdelta-is-open",
        "finite countable intersections of opens are open (vs. enumeration)",
        0,
    )
    for n in range(1, max_elems + 1):
        for p in canonical_posets(n):
            for mask in range(1 << n):
                subset = frozenset(p.elements[i] for i in range(n) if mask >> i & 1)
                out.cases += 1
                if posets.is_gdelta(p, subset) != oracles.gdelta_by_intersection(p, subset):
                    _note(out, f"gdelta mismatch on {sorted(subset)} in {sorted(p.pairs())}")
    return out


def _finite_max_gdelta(max_elems: int) -> CheckResult:
    out = CheckResult(
        "finite-max-always-gdelta",
        "the maximal points of every finite poset are an intersection of opens",
        0,
    )
    for n in range(1, max_elems + 1):
        for p in all_posets(n):
            out.cases += 1
            if not posets.is_gdelta(p, maximals(p)):
                _note(out, f"max not gdelta in {sorted(p.pairs())}")
    return out


def _finite_chain_pair() -> CheckResult:
    out = CheckResult(
        "chain-pair-sup-dichotomy",
        "the twin-chain fixture: no sup of the x-chain without the extra pair, sup xw with it",
        0,
    )
    base = ChainPairPoset(extended=False)
    ext = ChainPairPoset(extended=True)
    res = sup_in_oracle(base.as_oracle(), X_CHAIN)
    out.cases += 1
    if not (res.kind == "no_sup" and set(res.witness) == {"xw", "yw"}):
        _note(out, f"base order: expected incomparable tops, got {res}")
    res = sup_in_oracle(ext.as_oracle(), X_CHAIN)
    out.cases += 1
    if not (res.kind == "sup" and res.value == "xw"):
        _note(out, f"extended order: expected sup xw, got {res}")
    for fixture in (base, ext):
        res = sup_in_oracle(fixture.as_oracle(), Y_CHAIN)
        out.cases += 1
        if not (res.kind == "sup" and res.value == "yw"):
            _note(out, f"y-chain sup wrong in {fixture.extended=}: {res}")
    # the two orders differ in exactly one pair
    labels = [f"{s}{i}" for s in "xy" for i in range(1, 11)] + ["xw", "yw"]
    for a in labels:
        for b in labels:
            out.cases += 1
            expected_extra = (a, b) == ("xw", "yw")
            if ext.leq(a, b) != (base.leq(a, b) or expected_extra):
                _note(out, f"order extension differs at ({a},{b})")
    return out


# --- driver ----------------------------------------------------------------


def run_suites(
    scope: str,
    *,
    bound: int = 3,
    depth: int = 3,
    max_elems: int = 4,
    samples: int = 300,
    seed: int = DEFAULT_SEED,
) -> SuiteReport:
    if scope not in SCOPES:
        raise InputError(f"scope must be one of {SCOPES}, got {scope!r}")
    if bound < 2 or depth < 1:
        raise InputError("truncation needs bound >= 2 and depth >= 1")
    if max_elems < 1 or max_elems > 5:
        raise InputError("finite-poset enumeration supports 1..5 elements")
    results: list[CheckResult] = []
    if scope in ("seq", "all"):
        results += [
            _seq_order_axioms(samples, seed),
            _seq_compacts(samples, seed),
            _seq_prefix_sup(samples, seed),
            _seq_bounded_iff_comparable(),
            _seq_component(),
        ]
    if scope in ("L", "all"):
        results += [
            _domain_axioms(bound, depth),
            _domain_star_membership(bound, depth, samples, seed),
            _domain_star_order(bound, depth, samples, seed),
            _domain_lower_upper_sets(bound, depth),
            _domain_maximality(bound, depth),
            _domain_generator_antichain(bound),
            _domain_compactness(bound, depth, samples, seed),
            _domain_chain_refutation(samples, seed),
            _domain_parts_subdcpo(seed),
            _domain_cofinality(samples, seed),
        ]
    if scope in ("finite", "all"):
        results += [
            _finite_counts(max_elems),
            _finite_way_below(max_elems),
            _finite_scott_open(max_elems),
            _finite_gdelta(max_elems),
            _finite_max_gdelta(max_elems),
            _finite_chain_pair(),
        ]
    return SuiteReport(
        scope=scope,
        params={"bound": bound, "depth": depth, "max_elems": max_elems, "samples": samples, "seed": seed},
        results=results,
    )

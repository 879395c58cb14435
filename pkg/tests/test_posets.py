import random

import pytest

from maxgdelta import oracles
from maxgdelta.errors import IndeterminateError, InputError, PosetError
from maxgdelta.seq import OMEGA
from maxgdelta.domain import leq as domain_leq, truncation
from maxgdelta.posets import (
    ChainPairPoset,
    FinitePoset,
    OraclePoset,
    X_CHAIN,
    Y_CHAIN,
    all_posets,
    canonical_posets,
    downset,
    is_gdelta,
    is_scott_open,
    maximals,
    sup_in_oracle,
    sup_of,
    upset,
    verify_partial_order,
    way_below,
)


def chain(*labels):
    pairs = [(a, b) for i, a in enumerate(labels) for b in labels[i + 1 :]]
    return FinitePoset(labels, pairs)


class TestVerification:
    def test_two_chain_is_valid(self):
        p = FinitePoset(["a", "b"], [("a", "b")], validate=False)
        assert verify_partial_order(p) == []

    def test_antisymmetry_violation(self):
        p = FinitePoset(["a", "b"], [("a", "b"), ("b", "a")], validate=False)
        laws = {v.law for v in verify_partial_order(p)}
        assert laws == {"antisymmetry"}

    def test_transitivity_violation(self):
        p = FinitePoset(["a", "b", "c"], [("a", "b"), ("b", "c")], validate=False)
        report = verify_partial_order(p)
        assert [v.law for v in report] == ["transitivity"]
        assert report[0].elems == ("a", "b", "c")

    def test_constructor_validates_by_default(self):
        with pytest.raises(PosetError):
            FinitePoset(["a", "b"], [("a", "b"), ("b", "a")])

    def test_closure_loader(self):
        p = FinitePoset.from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert p.leq("a", "c")
        with pytest.raises(PosetError):
            FinitePoset.from_relation(["a", "b"], [("a", "b"), ("b", "a")])

    def test_unknown_labels_rejected(self):
        with pytest.raises(InputError):
            FinitePoset(["a"], [("a", "z")], validate=False)


class TestSetOperations:
    def test_upset_downset(self):
        p = chain("a", "b", "c")
        assert upset(p, {"b"}) == {"b", "c"}
        assert upset(p, set()) == frozenset()
        anti = FinitePoset(["a", "b"])
        assert downset(anti, {"a"}) == {"a"}
        with pytest.raises(InputError):
            upset(p, {"nope"})

    def test_maximals(self):
        assert maximals(chain("a", "b", "c")) == {"c"}
        assert maximals(FinitePoset(["a", "b"])) == {"a", "b"}

    def test_maximals_of_column_truncation(self):
        # columns m, n <= 2 plus their tops, under the domain order
        elems = [u for u in truncation(2, 0)]
        labels = [str(u) for u in elems]
        by_label = dict(zip(labels, elems))
        pairs = [
            (a, b)
            for a in labels
            for b in labels
            if domain_leq(by_label[a], by_label[b])
        ]
        p = FinitePoset(labels, pairs)
        assert maximals(p) == {"x(1,w)", "x(2,w)"}


class TestWayBelowAndOpens:
    def test_way_below_examples(self):
        two = chain("a", "b")
        assert way_below(two, "a", "b")
        anti = FinitePoset(["a", "b"])
        assert not way_below(anti, "a", "b")

    def test_way_below_is_order_up_to_four(self):
        for n in range(1, 5):
            for p in canonical_posets(n):
                for x in p.elements:
                    for y in p.elements:
                        assert way_below(p, x, y) == p.leq(x, y)

    def test_way_below_is_order_on_random_five_posets(self):
        rng = random.Random(11)
        produced = 0
        while produced < 60:
            pairs = [
                (a, b)
                for a in range(5)
                for b in range(5)
                if a != b and rng.random() < 0.3
            ]
            try:
                p = FinitePoset.from_relation(range(5), pairs)
            except PosetError:
                continue
            produced += 1
            for x in p.elements:
                for y in p.elements:
                    assert way_below(p, x, y) == p.leq(x, y)

    def test_scott_open_examples(self):
        two = chain("a", "b")
        assert is_scott_open(two, {"b"})
        assert not is_scott_open(two, {"a"})

    def test_open_iff_upper_iff_definitional(self):
        for n in range(1, 5):
            for p in canonical_posets(n):
                for mask in range(1 << n):
                    subset = frozenset(p.elements[i] for i in range(n) if mask >> i & 1)
                    assert is_scott_open(p, subset) == oracles.scott_open_definitional(p, subset)

    def test_gdelta_examples(self):
        two = chain("a", "b")
        assert not is_gdelta(two, {"a"})
        assert is_gdelta(two, {"a", "b"})
        assert is_gdelta(two, maximals(two))

    def test_gdelta_iff_open_with_intersection_oracle(self):
        for n in range(1, 5):
            for p in canonical_posets(n):
                for mask in range(1 << n):
                    subset = frozenset(p.elements[i] for i in range(n) if mask >> i & 1)
                    assert is_gdelta(p, subset) == oracles.gdelta_by_intersection(p, subset)

    def test_max_always_gdelta(self):
        for n in range(1, 5):
            for p in all_posets(n):
                assert is_gdelta(p, maximals(p))


class TestEnumeration:
    def test_labeled_counts(self):
        for n, expected in oracles.LABELED_POSET_COUNTS.items():
            assert sum(1 for _ in all_posets(n)) == expected

    def test_iso_counts(self):
        for n, expected in oracles.ISO_POSET_COUNTS.items():
            assert len(canonical_posets(n)) == expected


class TestSups:
    def test_sup_in_finite_poset(self):
        p = chain("a", "b")
        assert sup_of(p, {"a", "b"}) == "b"
        v = FinitePoset(["a", "b", "t"], [("a", "t"), ("b", "t")])
        assert sup_of(v, {"a", "b"}) == "t"
        anti = FinitePoset(["a", "b"])
        assert sup_of(anti, {"a", "b"}) is None

    def test_finite_universe_oracle(self):
        p = chain("a", "b")
        op = OraclePoset(universe=lambda: iter(["a", "b"]), leq=p.leq, truncation=10)
        assert sup_in_oracle(op, ["a", "b"]).value == "b"

    def test_infinite_universe_without_hook_is_indeterminate(self):
        def naturals():
            n = 0
            while True:
                yield n
                n += 1

        op = OraclePoset(universe=naturals, leq=lambda a, b: a <= b, truncation=32)
        with pytest.raises(IndeterminateError):
            sup_in_oracle(op, [3, 5])

    def test_oracle_axiom_check_on_column_poset(self):
        def column_universe():
            for m in range(1, 6):
                yield ("x", m, OMEGA)
                for n in range(1, 6):
                    yield ("x", m, n)

        def col_leq(a, b):
            return a[1] == b[1] and a[2] <= b[2]

        op = OraclePoset(universe=column_universe, leq=col_leq, truncation=30)
        assert op.check_axioms() == []


class TestChainPair:
    def test_base_order_has_no_sup_of_the_x_chain(self):
        base = ChainPairPoset(extended=False)
        res = sup_in_oracle(base.as_oracle(), X_CHAIN)
        assert res.kind == "no_sup"
        assert set(res.witness) == {"xw", "yw"}

    def test_extended_order_gives_xw(self):
        ext = ChainPairPoset(extended=True)
        res = sup_in_oracle(ext.as_oracle(), X_CHAIN)
        assert res.kind == "sup" and res.value == "xw"

    def test_y_chain_converges_in_both(self):
        for extended in (False, True):
            res = sup_in_oracle(ChainPairPoset(extended).as_oracle(), Y_CHAIN)
            assert res.kind == "sup" and res.value == "yw"

    def test_orders_differ_in_exactly_one_pair(self):
        base, ext = ChainPairPoset(False), ChainPairPoset(True)
        labels = [f"{s}{i}" for s in "xy" for i in range(1, 11)] + ["xw", "yw"]
        for a in labels:
            for b in labels:
                extra = (a, b) == ("xw", "yw")
                assert ext.leq(a, b) == (base.leq(a, b) or extra)

    def test_cross_relations(self):
        base = ChainPairPoset(False)
        assert base.leq("x3", "y3") and base.leq("x3", "y7") and not base.leq("x7", "y3")
        assert base.leq("x3", "yw") and not base.leq("y3", "xw")
        assert not base.leq("xw", "yw")

    def test_finite_set_sups(self):
        base = ChainPairPoset(False)
        assert sup_in_oracle(base.as_oracle(), ["x2", "y1"]).value == "y2"
        assert sup_in_oracle(base.as_oracle(), ["x1", "x3"]).value == "x3"
        res = sup_in_oracle(base.as_oracle(), ["xw", "y1"])
        assert res.kind == "no_sup" and res.reason == "no upper bound"
        ext = ChainPairPoset(True)
        assert sup_in_oracle(ext.as_oracle(), ["xw", "y1"]).value == "yw"

    def test_axioms_on_prefix(self):
        for extended in (False, True):
            assert ChainPairPoset(extended).as_oracle(24).check_axioms() == []

    def test_bad_labels(self):
        with pytest.raises(InputError):
            ChainPairPoset(False).leq("z1", "x2")
        with pytest.raises(InputError):
            ChainPairPoset(False).leq("x0", "x2")

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from maxgdelta.seq import Seq
from maxgdelta.opens import (
    OpenDesc,
    OpensFamily,
    SigmaLenAtLeast,
    Single,
    StarLenAtLeast,
    XColumn,
    XRankAtLeast,
)
from maxgdelta.domain import xpoint

settings.register_profile(
    "det",
    derandomize=True,
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("det")


finite_words = st.lists(st.integers(1, 8), min_size=1, max_size=6).map(
    lambda xs: Seq(tuple(xs))
)
periodic_words = st.tuples(
    st.lists(st.integers(1, 8), max_size=4),
    st.lists(st.integers(1, 8), min_size=1, max_size=4),
).map(lambda t: Seq(tuple(t[0]), tuple(t[1])))
words = st.one_of(finite_words, periodic_words)


def extra_families() -> list[tuple[OpensFamily, "callable"]]:
    """The refutation fleet: families passing the coverage screen, paired with
    the closed form of their least level index (derived from the generator
    shapes and spot-checked against direct membership in the tests)."""
    return [
        (OpensFamily.canonical(), lambda k: k),
        (
            OpensFamily.parametric(
                "rank-shift-3",
                lambda k: OpenDesc((XRankAtLeast(k + 3), StarLenAtLeast(1), SigmaLenAtLeast(1))),
            ),
            lambda k: k + 3,
        ),
        (
            OpensFamily.parametric(
                "rank-doubled",
                lambda k: OpenDesc((XRankAtLeast(2 * k), SigmaLenAtLeast(k))),
            ),
            lambda k: 2 * k,
        ),
        (
            OpensFamily.parametric("rank-floor", lambda k: OpenDesc((XRankAtLeast(1),))),
            lambda k: 1,
        ),
        (
            OpensFamily.parametric(
                "column-boosted",
                lambda k: OpenDesc((XRankAtLeast(k), XColumn(1, 1), SigmaLenAtLeast(2 * k))),
            ),
            lambda k: 1 if k == 1 else k,
        ),
        (
            OpensFamily.parametric(
                "staircase-5",
                lambda k: OpenDesc((XRankAtLeast(5 * k), StarLenAtLeast(3 * k), SigmaLenAtLeast(7))),
            ),
            lambda k: 5 * k,
        ),
        (
            OpensFamily.parametric(
                "single-floor",
                lambda k: OpenDesc((XRankAtLeast(k), Single(xpoint(1, 1)))),
            ),
            lambda k: 1 if k == 1 else k,
        ),
    ]

"""Shared strategies for the property-based tests."""

from hypothesis import strategies as st

from prodex import ProductExpansion, make_series

small_ints = st.integers(min_value=-9, max_value=9)


def unit_series(max_order=64):
    """Random integer series with constant term 1, order 1..max_order."""
    return st.lists(small_ints, min_size=1, max_size=max_order).map(
        lambda tail: make_series([1] + tail)
    )


def expansions(max_order=64):
    """Random integer exponent sequences m_1..m_N."""
    return st.lists(small_ints, min_size=1, max_size=max_order).map(
        lambda exps: ProductExpansion(tuple(exps))
    )


@st.composite
def unit_series_pairs(draw, max_order=64):
    """Two random unit series sharing one truncation order."""
    n = draw(st.integers(min_value=1, max_value=max_order))
    tails = st.lists(small_ints, min_size=n, max_size=n)
    return (
        make_series([1] + draw(tails)),
        make_series([1] + draw(tails)),
    )


@st.composite
def series_triples(draw, max_order=24):
    """Three random integer series sharing one truncation order."""
    n = draw(st.integers(min_value=1, max_value=max_order))
    rows = st.lists(small_ints, min_size=n + 1, max_size=n + 1)
    return tuple(make_series(draw(rows)) for _ in range(3))

"""Shared hypothesis strategies."""

import hypothesis.strategies as st

from coretower import Partition


def partitions(max_part: int = 10, max_len: int = 8):
    """Random partitions with bounded part size and length."""
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True)))
    )


def moduli(lo: int = 2, hi: int = 5):
    return st.integers(lo, hi)


def small_series_coeffs(order: int = 8):
    return st.lists(
        st.integers(-9, 9), min_size=order + 1, max_size=order + 1
    )

import pytest

from skewsupport.shapes import enumerate_shapes

try:
    from hypothesis import strategies as st

    HAVE_HYPOTHESIS = True
except ImportError:
    HAVE_HYPOTHESIS = False


def all_shapes_upto(n: int):
    for size in range(1, n + 1):
        yield from enumerate_shapes(size)


if HAVE_HYPOTHESIS:
    _POOL = [s for s in all_shapes_upto(6)]

    def shape_strategy():
        return st.sampled_from(_POOL)

    def partition_strategy(max_part=6, max_len=6):
        return st.lists(
            st.integers(min_value=1, max_value=max_part),
            min_size=0, max_size=max_len,
        ).map(lambda parts: tuple(sorted(parts, reverse=True)))

    def composition_strategy(max_part=5, max_len=5):
        return st.lists(
            st.integers(min_value=1, max_value=max_part),
            min_size=1, max_size=max_len,
        ).map(tuple)


@pytest.fixture(scope="session")
def small_shapes():
    """Every canonical shape with at most 5 boxes."""
    return list(all_shapes_upto(5))

from collections import Counter

from hypothesis import HealthCheck, settings, strategies as st

from wedgekit.partitions import Partition

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partition_st(draw, max_n=12, min_n=0):
    """Random partition: drop n balls into k bins and sort the counts."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


def P(*parts):
    return Partition(tuple(parts))

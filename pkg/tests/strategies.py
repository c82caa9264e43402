import numpy as np
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from specnorm.graphs import Graph, pair_index


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=len(pair_index(n)), max_size=len(pair_index(n))))
    a = np.zeros((n, n), dtype=np.uint8)
    for (i, j), b in zip(pair_index(n), bits):
        a[i, j] = a[j, i] = b
    return Graph(a)


def matrices(max_side=8, lo=-3.0, hi=3.0):
    shapes = st.tuples(st.integers(1, max_side), st.integers(1, max_side))
    elems = st.floats(lo, hi, allow_nan=False, allow_infinity=False, width=64)
    return shapes.flatmap(lambda s: hnp.arrays(np.float64, s, elements=elems))


def sign_matrices(max_side=8):
    shapes = st.tuples(st.integers(1, max_side), st.integers(1, max_side))
    return shapes.flatmap(lambda s: hnp.arrays(np.int64, s, elements=st.sampled_from([-1, 1])))


def scaled_matrices(min_side=1, max_side=6, lo=-1.0, hi=1.0):
    """Entries are 0 or at least 1e-3 in size, so the matrix scale stays well above
    the absolute 1e-9 tolerance floor used to decide equality."""
    mag = st.floats(1e-3, max(abs(lo), abs(hi)), allow_nan=False)
    elems = st.one_of(st.just(0.0), mag.map(lambda x: -x) if lo < 0 else st.nothing(), mag if hi > 0 else st.nothing())
    shapes = st.tuples(st.integers(min_side, max_side), st.integers(min_side, max_side))
    return shapes.flatmap(lambda s: hnp.arrays(np.float64, s, elements=elems))

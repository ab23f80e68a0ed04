import itertools
from fractions import Fraction

import pytest

from voganlab.orbits import enumerate_orbits
from voganlab.variety import Chain, build_variety


def dim_vectors(max_total=6, max_grid=5):
    """All single-chain dimension vectors with the given bounds."""
    for total in range(1, max_total + 1):
        for k in range(1, min(total, max_grid) + 1):
            for cuts in itertools.combinations(range(1, total), k - 1):
                parts, prev = [], 0
                for c in list(cuts) + [total]:
                    parts.append(c - prev)
                    prev = c
                yield tuple(parts)


@pytest.fixture(scope="session")
def chain_suite():
    """Every single-chain variety with total dimension <= 6 on <= 5 grades,
    with its orbit table (built once per session)."""
    suite = []
    for dims in dim_vectors():
        v = build_variety([Chain(Fraction(0), dims)], "gl")
        suite.append((dims, v, enumerate_orbits(v)))
    return suite

import pytest

from relnerve.fincat import (SSetDiagram, arrow_category, span_category,
                             terminal_category)
from relnerve.sset import (constant_map, discrete, identity_map,
                           standard_simplex, SimplicialMap)


def span_diagram(cap=3):
    """a <- c -> b with a two-point fiber over the apex; the relative nerve
    and the bar construction of this diagram are both a circle."""
    C = span_category()
    pt_a = standard_simplex(0, cap)
    pt_b = standard_simplex(0, cap)
    two = discrete(2, cap)
    maps = [identity_map(pt_a), identity_map(pt_b), identity_map(two),
            constant_map(two, pt_a, 0), constant_map(two, pt_b, 0)]
    return SSetDiagram(C, [pt_a, pt_b, two], maps)


def arrow_diagram(X0, X1, f01):
    """A diagram over the poset [1]."""
    C = arrow_category()
    return SSetDiagram(C, [X0, X1],
                       [identity_map(X0), f01, identity_map(X1)])


def identity_arrow_diagram(X, cap):
    """[1]-shaped diagram with both values X and the identity transport."""
    Y = X
    f = SimplicialMap(X, Y, [list(range(X.counts[n]))
                             for n in range(cap + 1)])
    return arrow_diagram(X, Y, f)


def terminal_diagram(X):
    T = terminal_category()
    return SSetDiagram(T, [X], [identity_map(X)])


@pytest.fixture
def span3():
    return span_diagram(3)

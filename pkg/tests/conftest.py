import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from majtourn.core import Profile


@st.composite
def profiles(draw, min_n=1, max_n=12, ks=(1, 3, 5)):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.sampled_from(ks))
    orders = [draw(st.permutations(range(n))) for _ in range(k)]
    return Profile(orders)


def naive_cyclic(d, vertices):
    """Cycle detection by DFS over an explicit vertex list; shares no code with the package."""
    vs = set(vertices)
    colour = {v: 0 for v in vs}

    def visit(u):
        colour[u] = 1
        for w in vs:
            if d.has_edge(u, w):
                if colour[w] == 1 or (colour[w] == 0 and visit(w)):
                    return True
        colour[u] = 2
        return False

    return any(colour[v] == 0 and visit(v) for v in sorted(vs))


def naive_max_acyclic(d):
    """Largest acyclic subset by combinations, largest size first."""
    for size in range(d.n, 0, -1):
        for combo in combinations(range(d.n), size):
            if not naive_cyclic(d, combo):
                return size
    return 0


@pytest.fixture
def rng():
    return random.Random(20111)

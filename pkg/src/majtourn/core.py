"""Linear orders, preference profiles and their k-majority digraphs.

Vertices are dense ids ``0..n-1``. A digraph stores every out- and
in-neighbourhood as an ``int`` bitset so that subset intersection is a single
``&``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError

MAX_VERTICES = 128


def _check_n(n: int) -> None:
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")


@dataclass(frozen=True)
class LinearOrder:
    """A ranking of ``0..n-1``; position 0 is ranked first."""

    ranking: tuple[int, ...]
    positions: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, ranking: Iterable[int]):
        ranking = tuple(int(v) for v in ranking)
        n = len(ranking)
        positions = [-1] * n
        for p, v in enumerate(ranking):
            if not 0 <= v < n or positions[v] != -1:
                raise InputError(f"ranking {list(ranking)} is not a permutation of 0..{n - 1}")
            positions[v] = p
        object.__setattr__(self, "ranking", ranking)
        object.__setattr__(self, "positions", tuple(positions))

    def __len__(self) -> int:
        return len(self.ranking)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranking)

    @classmethod
    def identity(cls, n: int) -> "LinearOrder":
        return cls(range(n))

    def reversed(self) -> "LinearOrder":
        return LinearOrder(self.ranking[::-1])

    def before(self, u: int, v: int) -> bool:
        return before(self, u, v)


def before(order: LinearOrder, u: int, v: int) -> bool:
    """True iff ``order`` ranks ``u`` ahead of ``v``."""
    n = len(order)
    if not (0 <= u < n and 0 <= v < n):
        raise InputError(f"vertex ids ({u}, {v}) out of range for n={n}")
    return order.positions[u] < order.positions[v]


@dataclass(frozen=True)
class Profile:
    """k linear orders over one ground set, with optional external labels."""

    orders: tuple[LinearOrder, ...]
    labels: tuple[str, ...] | None = None

    def __init__(self, orders: Iterable[LinearOrder | Sequence[int]], labels: Sequence[str] | None = None):
        orders = tuple(o if isinstance(o, LinearOrder) else LinearOrder(o) for o in orders)
        if not orders:
            raise InputError("a profile needs at least one order (k >= 1)")
        n = len(orders[0])
        if any(len(o) != n for o in orders):
            raise InputError("all orders in a profile must have the same length")
        _check_n(n)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InputError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise InputError("labels must be distinct")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "labels", labels)

    @property
    def k(self) -> int:
        return len(self.orders)

    @property
    def n(self) -> int:
        return len(self.orders[0])

    def label(self, v: int) -> str | int:
        return self.labels[v] if self.labels is not None else v

    def reversed(self) -> "Profile":
        return Profile([o.reversed() for o in self.orders], self.labels)


class MajorityDigraph:
    """Dense digraph on ``0..n-1`` with bitset neighbourhoods.

    ``out[u]`` has bit ``v`` set iff there is an edge ``u -> v``; ``inn`` is the
    transpose. Instances are immutable.
    """

    __slots__ = ("n", "out", "inn")

    def __init__(self, n: int, out: Sequence[int]):
        _check_n(n)
        if len(out) != n:
            raise InputError(f"expected {n} out-neighbourhoods, got {len(out)}")
        full = (1 << n) - 1
        inn = [0] * n
        for u, row in enumerate(out):
            if row & ~full:
                raise InputError(f"vertex {u} has an out-neighbour outside 0..{n - 1}")
            if row >> u & 1:
                raise InputError(f"self-loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                inn[low.bit_length() - 1] |= 1 << u
                r ^= low
        for u in range(n):
            if out[u] & inn[u]:
                raise InputError(f"vertex {u} has an antiparallel edge pair")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out", tuple(out))
        object.__setattr__(self, "inn", tuple(inn))

    def __setattr__(self, name, value):
        raise AttributeError("MajorityDigraph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "MajorityDigraph":
        _check_n(n)
        out = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            out[u] |= 1 << v
        return cls(n, out)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges, ascending by tail then head."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out[u])]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def full_set(self) -> int:
        return (1 << self.n) - 1

    def induced(self, vertices: Sequence[int]) -> "MajorityDigraph":
        """Subdigraph on ``vertices``, relabelled ``0..len-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return MajorityDigraph.from_edges(
            len(vertices),
            [(index[u], index[v]) for u in vertices for v in iter_bits(self.out[u]) if v in index],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MajorityDigraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        return hash((self.n, self.out))

    def __repr__(self) -> str:
        return f"MajorityDigraph(n={self.n}, edges={self.num_edges()})"


def iter_bits(bits: int) -> Iterator[int]:
    """Indices of set bits in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(vertices: Iterable[int]) -> int:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def build_majority_digraph(profile: Profile) -> MajorityDigraph:
    """Edge ``u -> v`` iff strictly more than k/2 orders put ``u`` before ``v``.

    For even k an exact tie leaves the pair unconnected.
    """
    n, k = profile.n, profile.k
    # wins[u][v] counts orders ranking u before v; each order adds the suffix
    # mask of vertices it places after u.
    counts = [[0] * n for _ in range(n)]
    for order in profile.orders:
        rank = order.ranking
        for p, u in enumerate(rank):
            row = counts[u]
            for v in rank[p + 1:]:
                row[v] += 1
    out = [0] * n
    for u in range(n):
        row = counts[u]
        bits = 0
        for v in range(n):
            if 2 * row[v] > k:
                bits |= 1 << v
        out[u] = bits
    return MajorityDigraph(n, out)


def transitive_tournament(order: LinearOrder) -> MajorityDigraph:
    """The tournament in which ``u -> v`` iff ``order`` ranks u first."""
    n = len(order)
    out = [0] * n
    later = 0
    for u in reversed(order.ranking):
        out[u] = later
        later |= 1 << u
    return MajorityDigraph(n, out)


def is_tournament(d: MajorityDigraph, subset: int | None = None) -> bool:
    """Exactly one edge between every pair of distinct vertices (of ``subset``)."""
    s = d.full_set() if subset is None else subset
    for u in iter_bits(s):
        if (d.out[u] | d.inn[u] | 1 << u) & s != s:
            return False
    return True

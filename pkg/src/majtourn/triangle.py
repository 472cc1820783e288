"""Triangular-lattice 3-majority tournament G_r.

Points of the triangle with ``r`` points per side carry barycentric-style
coordinates ``(x, y, z)`` with ``x + y + z = r - 1``. Three lexicographic orders
(x then y, y then z, z then x) make a 3-majority tournament whose largest
transitive subtournament has exactly ``r`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .core import MAX_VERTICES, MajorityDigraph, Profile, build_majority_digraph
from .errors import CapacityError, InputError

# largest r with r(r+1)/2 <= MAX_VERTICES
MAX_R = 15


class TriPoint(NamedTuple):
    x: int
    y: int
    z: int


def num_points(r: int) -> int:
    return r * (r + 1) // 2


def _check_r(r: int) -> None:
    if r < 0:
        raise InputError(f"r must be non-negative, got {r}")
    if r > MAX_R:
        raise CapacityError(f"r={r} gives n={num_points(r)} > {MAX_VERTICES}; max r is {MAX_R}")


def enumerate_points(r: int) -> list[TriPoint]:
    """Nonnegative solutions of ``x + y + z = r - 1``, sorted by ``(x, y)``."""
    if r < 0:
        raise InputError(f"r must be non-negative, got {r}")
    return [TriPoint(x, y, r - 1 - x - y) for x in range(r) for y in range(r - x)]


def _order_keys():
    return (
        lambda p: (p.x, p.y),
        lambda p: (p.y, p.z),
        lambda p: (p.z, p.x),
    )


def lex_orders(r: int) -> Profile:
    """The three lexicographic orders over the canonical point ids."""
    _check_r(r)
    if r == 0:
        raise InputError("r=0 has no points and no profile")
    points = enumerate_points(r)
    ids = range(len(points))
    orders = [sorted(ids, key=lambda i, key=key: key(points[i])) for key in _order_keys()]
    return Profile(orders)


def compass_precedes(p: TriPoint, q: TriPoint) -> bool:
    """True iff ``p -> q`` under the six-case rule."""
    x1, y1, z1 = p
    x2, y2, z2 = q
    return (
        (x1 < x2 and y1 < y2)
        or (y1 < y2 and z1 < z2)
        or (z1 < z2 and x1 < x2)
        or (x1 == x2 and y1 < y2)
        or (y1 == y2 and z1 < z2)
        or (z1 == z2 and x1 < x2)
    )


def compass_edge(p: TriPoint, q: TriPoint) -> tuple[TriPoint, TriPoint]:
    """Return ``(tail, head)`` of the edge between two distinct lattice points."""
    p, q = TriPoint(*p), TriPoint(*q)
    if p == q:
        raise InputError(f"compass_edge needs distinct points, got {p} twice")
    if sum(p) != sum(q) or min(p) < 0 or min(q) < 0:
        raise InputError(f"{p} and {q} are not points of one triangle")
    return (p, q) if compass_precedes(p, q) else (q, p)


def build_compass_digraph(r: int) -> MajorityDigraph:
    """G_r built pairwise from the six-case rule, independently of any order."""
    _check_r(r)
    points = enumerate_points(r)
    n = len(points)
    out = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if compass_precedes(points[i], points[j]):
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return MajorityDigraph(n, out)


def build_triangle_tournament(r: int) -> MajorityDigraph:
    """3-majority tournament of ``lex_orders(r)``."""
    _check_r(r)
    if r == 0:
        return MajorityDigraph(0, [])
    return build_majority_digraph(lex_orders(r))


@dataclass(frozen=True)
class TriangleConstruction:
    r: int

    def __post_init__(self):
        _check_r(self.r)
        if self.r == 0:
            raise InputError("TriangleConstruction needs r >= 1")

    @cached_property
    def points(self) -> list[TriPoint]:
        return enumerate_points(self.r)

    @cached_property
    def profile(self) -> Profile:
        return lex_orders(self.r)

    @cached_property
    def digraph(self) -> MajorityDigraph:
        return build_majority_digraph(self.profile)

    @property
    def n(self) -> int:
        return num_points(self.r)

    def vertex(self, p: TriPoint) -> int:
        return self.points.index(TriPoint(*p))

    def line(self, axis: str, value: int) -> list[int]:
        """Ids of points whose ``axis`` coordinate equals ``value``, in edge order.

        Each such line is a transitive subtournament; the side ``x = 0`` has r
        points and certifies ``a(G_r) >= r``.
        """
        if axis not in ("x", "y", "z"):
            raise InputError(f"axis must be x, y or z, got {axis!r}")
        # along x = c the edges run by increasing y (case 4), along y = c by
        # increasing z (case 5), along z = c by increasing x (case 6)
        follow = {"x": "y", "y": "z", "z": "x"}[axis]
        ids = [i for i, p in enumerate(self.points) if getattr(p, axis) == value]
        return sorted(ids, key=lambda i: getattr(self.points[i], follow))

    def side_witness(self) -> list[int]:
        return self.line("x", 0)

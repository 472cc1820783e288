"""Bounds on f_3(n) and Erdős–Szekeres witnesses for pairs of orders."""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Literal, Sequence

from .core import LinearOrder
from .errors import CapacityError, InputError
from .solver import max_acyclic_set
from .triangle import MAX_R, build_triangle_tournament, num_points

DEFAULT_VERIFY_MAX_R = 8


def f3_upper_bound(n: int) -> float:
    """sqrt(2n) + 1/2."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    return math.sqrt(2 * n) + 0.5


def below_upper_bound(r: int, n: int) -> bool:
    """``r < sqrt(2n) + 1/2`` in exact integer arithmetic."""
    if r < 1:
        # r - 1/2 is negative, the inequality holds trivially
        return True
    return (2 * r - 1) ** 2 < 8 * n


def cited_lower_bound(n: int) -> int:
    """ceil(sqrt(n)), the cited Milans-Schreiber-West floor on f_3(n)."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    return math.isqrt(n - 1) + 1


def r_for_n(n: int) -> int:
    """The unique r with r(r-1)/2 < n <= r(r+1)/2."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    r = (math.isqrt(8 * n + 1) - 1) // 2
    if num_points(r) < n:
        r += 1
    return r


@dataclass(frozen=True)
class BoundReport:
    n: int
    r: int
    achieved: int
    upper: float
    lower: int
    time_ms: float = 0.0

    @property
    def within_upper(self) -> bool:
        return below_upper_bound(self.r, self.n)

    @property
    def satisfied(self) -> bool:
        return self.lower <= self.achieved <= self.r and self.within_upper


def verify_construction(r: int, *, max_r: int = DEFAULT_VERIFY_MAX_R) -> BoundReport:
    """Build G_r, solve it exactly and compare with the bounds."""
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    if r > min(max_r, MAX_R):
        raise CapacityError(f"r={r} is outside the exact-solve range 1..{min(max_r, MAX_R)}")
    n = num_points(r)
    result = max_acyclic_set(build_triangle_tournament(r))
    return BoundReport(
        n=n,
        r=r,
        achieved=result.size,
        upper=f3_upper_bound(n),
        lower=cited_lower_bound(n),
        time_ms=result.wall_time * 1000.0,
    )


@dataclass(frozen=True)
class ESWitness:
    kind: Literal["consistent", "neutral"]
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def longest_increasing(seq: Sequence[int]) -> list[int]:
    """Indices of one longest strictly increasing subsequence (patience sorting)."""
    tails: list[int] = []  # tails[j]: value ending the best run of length j+1
    tail_idx: list[int] = []
    parent = [-1] * len(seq)
    for i, value in enumerate(seq):
        j = bisect_left(tails, value)
        if j == len(tails):
            tails.append(value)
            tail_idx.append(i)
        else:
            tails[j] = value
            tail_idx[j] = i
        parent[i] = tail_idx[j - 1] if j else -1
    out = []
    i = tail_idx[-1] if tail_idx else -1
    while i != -1:
        out.append(i)
        i = parent[i]
    return out[::-1]


def _paired(a: LinearOrder, b: LinearOrder) -> list[int]:
    if len(a) != len(b):
        raise InputError(f"orders have different lengths {len(a)} and {len(b)}")
    return [b.positions[v] for v in a.ranking]


def longest_consistent(a: LinearOrder, b: LinearOrder) -> ESWitness:
    """Largest set ordered identically by ``a`` and ``b``, listed in a's order."""
    seq = _paired(a, b)
    return ESWitness("consistent", tuple(a.ranking[i] for i in longest_increasing(seq)))


def longest_neutral(a: LinearOrder, b: LinearOrder) -> ESWitness:
    """Largest set that ``b`` orders exactly opposite to ``a``, listed in a's order."""
    seq = _paired(a, b)
    return ESWitness("neutral", tuple(a.ranking[i] for i in longest_increasing([-x for x in seq])))


def is_valid_witness(w: ESWitness, a: LinearOrder, b: LinearOrder) -> bool:
    """Check the witness definition pairwise against both orders."""
    m = w.members
    if len(set(m)) != len(m) or any(not 0 <= v < len(a) for v in m):
        return False
    for i in range(len(m)):
        for j in range(i + 1, len(m)):
            same = a.before(m[i], m[j]) == b.before(m[i], m[j])
            if same != (w.kind == "consistent"):
                return False
    return True


def erdos_szekeres_witness(a: LinearOrder, b: LinearOrder, r: int, s: int) -> ESWitness:
    """A consistent set of size >= r or a neutral set of size >= s.

    Needs ``n > (r-1)(s-1)``; the consistent witness wins when both exist.
    """
    n = len(a)
    if n <= (r - 1) * (s - 1):
        raise InputError(f"n={n} must exceed (r-1)(s-1)={(r - 1) * (s - 1)} for a guaranteed witness")
    consistent = longest_consistent(a, b)
    if consistent.size >= r:
        return consistent
    neutral = longest_neutral(a, b)
    if neutral.size >= s:
        return neutral
    raise AssertionError(
        f"no witness: consistent {consistent.size} < {r} and neutral {neutral.size} < {s} with n={n}"
    )

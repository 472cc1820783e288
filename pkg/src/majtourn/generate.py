"""Seeded random profiles and a random-restart probe of f_k(n).

Randomness comes from :class:`random.Random` (Mersenne Twister) whose
``shuffle`` is a Fisher-Yates shuffle; a seed fixes every output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bounds import cited_lower_bound
from .core import MAX_VERTICES, Profile, build_majority_digraph
from .errors import CapacityError, InputError
from .solver import SolveResult, max_acyclic_set


def random_profile(n: int, k: int, seed: int | random.Random) -> Profile:
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    orders = []
    for _ in range(k):
        order = list(range(n))
        rng.shuffle(order)
        orders.append(order)
    return Profile(orders)


@dataclass(frozen=True)
class SearchResult:
    best_profile: Profile
    best: SolveResult
    iterations: int
    lower_bound: int

    @property
    def anomaly(self) -> bool:
        """True if a 3-majority tournament beat the cited sqrt(n) floor."""
        return self.best_profile.k == 3 and self.best.size < self.lower_bound


def search_min_acyclic(n: int, k: int, seed: int, iterations: int) -> SearchResult:
    """Random restarts keeping the first profile that minimises a(T)."""
    if k % 2 == 0:
        raise InputError(f"search needs odd k, got {k}")
    if iterations < 1:
        raise InputError("iterations must be >= 1")
    rng = random.Random(seed)
    best_profile, best = None, None
    done = 0
    floor = cited_lower_bound(n)
    for done in range(1, iterations + 1):
        profile = random_profile(n, k, rng)
        result = max_acyclic_set(build_majority_digraph(profile))
        if best is None or result.size < best.size:
            best_profile, best = profile, result
        if best.size == 1:
            break
    assert best_profile is not None and best is not None
    return SearchResult(best_profile, best, done, floor)

"""Exact maximum acyclic sets.

In a tournament every acyclic set has a unique source beating all its other
members, so

    a(S) = 1 + max_{v in S} a(S & out(v)),   a(0) = 0.

:func:`max_acyclic_set` evaluates this recursion over bitset subsets with a
bounded LRU memo and popcount pruning. :func:`brute_force_max_acyclic` is an
independent oracle over all ``2^n`` subsets that also accepts non-tournaments.
"""

from __future__ import annotations

import os
import threading
import time
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import MajorityDigraph, bits_of, is_tournament, iter_bits
from .errors import CapacityError, InputError, NotATournamentError

DEFAULT_MEMO_CAP = 1 << 22
MEMO_CAP_ENV = "MAJTOURN_MEMO_CAP"
ORACLE_MAX_N = 20


@dataclass(frozen=True)
class SolveResult:
    size: int
    witness: tuple[int, ...]
    nodes_explored: int
    memo_hits: int
    wall_time: float = 0.0
    method: str = "recursion"

    @property
    def witness_bits(self) -> int:
        return bits_of(self.witness)


def _as_bits(d: MajorityDigraph, s) -> int:
    if s is None:
        return d.full_set()
    if isinstance(s, int):
        bits = s
    else:
        bits = bits_of(s)
    if bits < 0 or bits >> d.n:
        raise InputError(f"vertex set has members outside 0..{d.n - 1}")
    return bits


def is_acyclic(d: MajorityDigraph, s=None) -> bool:
    """True iff the subgraph induced by ``s`` (bitset or iterable) has no cycle."""
    s = _as_bits(d, s)
    inn = d.inn
    while s:
        removed = 0
        for v in iter_bits(s):
            if not inn[v] & s:
                removed |= 1 << v
        if not removed:
            return False
        s &= ~removed
    return True


def topological_order(d: MajorityDigraph, s) -> list[int]:
    """Members of acyclic ``s`` sources first, ties by ascending id."""
    s = _as_bits(d, s)
    order = []
    while s:
        for v in iter_bits(s):
            if not d.inn[v] & s:
                break
        else:
            raise InputError("vertex set is not acyclic")
        order.append(v)
        s &= ~(1 << v)
    return order


def find_directed_triangle(d: MajorityDigraph, s=None) -> Optional[tuple[int, int, int]]:
    """Some ``u -> v -> w -> u`` inside ``s``, or None.

    Requires the subgraph on ``s`` to be a tournament; there, a missing
    triangle is equivalent to acyclicity.
    """
    s = _as_bits(d, s)
    if not is_tournament(d, s):
        raise NotATournamentError("find_directed_triangle needs a tournament on the given set")
    out, inn = d.out, d.inn
    for u in iter_bits(s):
        back = inn[u] & s
        for v in iter_bits(out[u] & s):
            closing = out[v] & back
            if closing:
                return (u, v, (closing & -closing).bit_length() - 1)
    return None


def _memo_cap_from_env() -> int:
    raw = os.environ.get(MEMO_CAP_ENV)
    if raw is None:
        return DEFAULT_MEMO_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{MEMO_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError(f"{MEMO_CAP_ENV} must be positive")
    return cap


class _Memo:
    """LRU table ``subset -> (a(subset), chosen source)``; thread-safe."""

    def __init__(self, cap: int):
        self.cap = cap
        self.table: OrderedDict[int, tuple[int, int]] = OrderedDict()
        self.lock = threading.Lock()
        self.hits = 0

    def get(self, key: int):
        with self.lock:
            entry = self.table.get(key)
            if entry is not None:
                self.table.move_to_end(key)
                self.hits += 1
            return entry

    def put(self, key: int, value: tuple[int, int]) -> None:
        with self.lock:
            self.table[key] = value
            self.table.move_to_end(key)
            if len(self.table) > self.cap:
                self.table.popitem(last=False)


class _Search:
    def __init__(self, d: MajorityDigraph, memo: _Memo):
        self.out = d.out
        self.memo = memo
        self.nodes = 0

    def solve(self, s: int) -> tuple[int, int]:
        """Return ``(a(s), v)`` with v the smallest-id optimal source (-1 if empty)."""
        if not s:
            return 0, -1
        if s & (s - 1) == 0:
            return 1, s.bit_length() - 1
        entry = self.memo.get(s)
        if entry is not None:
            return entry
        self.nodes += 1
        out = self.out
        # large children first, ascending id on ties
        children = sorted((-((out[v] & s).bit_count()), v) for v in iter_bits(s))
        best, best_v = 0, -1
        for neg_size, v in children:
            bound = 1 - neg_size
            # children are sorted, so no later one can beat (or tie lower than) best
            if bound < best or (bound == best and v > best_v):
                break
            value = 1 + self.solve(out[v] & s)[0]
            if value > best or (value == best and v < best_v):
                best, best_v = value, v
        self.memo.put(s, (best, best_v))
        return best, best_v

    def witness(self, s: int) -> list[int]:
        chain = []
        while s:
            _, v = self.solve(s)
            chain.append(v)
            s &= self.out[v]
        return chain


def max_acyclic_set(
    d: MajorityDigraph,
    *,
    memo_cap: int | None = None,
    threads: int = 1,
) -> SolveResult:
    """Exact a(d) for a tournament, with the canonical witness.

    The witness lists the acyclic set in edge order: each vertex beats every
    later one. Among optimal sets the source is chosen with the smallest id at
    every level, so the result does not depend on ``threads``.
    """
    if not is_tournament(d):
        raise NotATournamentError(
            "max_acyclic_set needs a tournament (odd k); use brute_force_max_acyclic for general digraphs"
        )
    if threads < 1:
        raise InputError("threads must be >= 1")
    memo = _Memo(memo_cap if memo_cap is not None else _memo_cap_from_env())
    start = time.perf_counter()
    full = d.full_set()
    root = _Search(d, memo)
    nodes = 0
    if threads > 1 and d.n > 1:
        searches = []

        def branch(v: int) -> int:
            search = _Search(d, memo)
            searches.append(search)
            return 1 + search.solve(d.out[v] & full)[0]

        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(branch, range(d.n)))
        best = max(values)
        best_v = values.index(best)
        memo.put(full, (best, best_v))
        nodes = 1 + sum(s.nodes for s in searches)
    witness = root.witness(full)
    nodes += root.nodes
    return SolveResult(
        size=len(witness),
        witness=tuple(witness),
        nodes_explored=nodes,
        memo_hits=memo.hits,
        wall_time=time.perf_counter() - start,
    )


def brute_force_max_acyclic(d: MajorityDigraph) -> SolveResult:
    """Exact a(d) for any digraph with n <= 20 by classifying every subset.

    A set is acyclic iff it is empty or has a source whose removal leaves an
    acyclic set. The table is filled one vertex-removal layer at a time, then
    subsets are scanned from largest size down; the witness is the smallest
    bitmask of maximum size.
    """
    n = d.n
    if n > ORACLE_MAX_N:
        raise CapacityError(f"brute-force oracle is limited to n <= {ORACLE_MAX_N}, got {n}")
    start = time.perf_counter()
    if n == 0:
        return SolveResult(0, (), 1, 0, time.perf_counter() - start, "brute-force")
    masks = np.arange(1 << n, dtype=np.int64)
    popcount = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        popcount += ((masks >> v) & 1).astype(np.int8)
    acyclic = np.zeros(1 << n, dtype=bool)
    acyclic[0] = True
    member = [((masks >> v) & 1).astype(bool) for v in range(n)]
    source = [member[v] & ((masks & d.inn[v]) == 0) for v in range(n)]
    for size in range(1, n + 1):
        layer = popcount == size
        hit = np.zeros(1 << n, dtype=bool)
        for v in range(n):
            cand = layer & source[v]
            hit[cand] |= acyclic[masks[cand] ^ (1 << v)]
        acyclic |= hit
    best_size = 0
    best_mask = 0
    for size in range(n, 0, -1):
        found = np.flatnonzero(acyclic & (popcount == size))
        if found.size:
            best_size, best_mask = size, int(found[0])
            break
    witness = topological_order(d, best_mask)
    assert len(witness) == best_size
    return SolveResult(
        size=best_size,
        witness=tuple(witness),
        nodes_explored=1 << n,
        memo_hits=0,
        wall_time=time.perf_counter() - start,
        method="brute-force",
    )

"""Exact domination, 2-domination, independence, and power domination.

All solvers scan ascending by cardinality with lexicographic tie-break, so
witnesses are deterministic.  An isolated vertex can never be k-dominated
from outside, so it belongs to every k-dominating witness; that falls out of
the definition with no special casing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .forcing import ClosureCache, _masks_of_size
from .graphs import Graph, bits


@dataclass(frozen=True)
class DominationResult:
    value: int
    witness: int
    k: int


def _is_k_dominating(adj: tuple[int, ...], full: int, m: int, k: int) -> bool:
    outside = full & ~m
    while outside:
        low = outside & -outside
        outside ^= low
        if (adj[low.bit_length() - 1] & m).bit_count() < k:
            return False
    return True


def k_domination_number(g: Graph, k: int) -> DominationResult:
    """Minimum set whose outside vertices all have >= k neighbors inside."""
    if k not in (1, 2):
        raise PreconditionError(f"k-domination implemented for k in {{1, 2}}, got {k}")
    for size in range(g.n + 1):
        for m in _masks_of_size(g.n, size):
            if _is_k_dominating(g.adj, g.full, m, k):
                return DominationResult(size, m, k)
    raise AssertionError("the full vertex set is k-dominating")


def independence_number(g: Graph) -> tuple[int, int]:
    """Maximum independent set size with a deterministic witness."""
    adj = g.adj

    # greedy incumbent by ascending index
    best = 0
    cand = g.full
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        best |= low
        cand &= ~(adj[v] | low)
    best_size = best.bit_count()

    def grow(cur: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            took = cur | low
            took_size = size + 1
            if took_size > best_size:
                best, best_size = took, took_size
            grow(took, took_size, cand & ~adj[v])

    grow(0, 0, g.full)
    return best_size, best


def power_domination_number(g: Graph) -> tuple[int, int]:
    """Minimum seed set whose closed neighborhood forces the whole graph."""
    cache = ClosureCache(g)
    adj = g.adj
    for size in range(1, g.n + 1):
        for m in _masks_of_size(g.n, size):
            seed = m
            for v in bits(m):
                seed |= adj[v]
            if cache.closure(seed) == g.full:
                return size, m
    raise AssertionError("the full vertex set power dominates")

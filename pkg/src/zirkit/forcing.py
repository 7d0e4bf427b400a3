"""Zero-forcing closure, forts, and the exact forcing numbers.

All vertex sets are int bitmasks.  The color change rule: a blue vertex with
exactly one white neighbor colors that neighbor blue.  The closure of a set
is the unique fixed point of the rule; a set is zero forcing when its closure
is the whole vertex set.  A fort is a nonempty set F such that no outside
vertex has exactly one neighbor in F; a set is zero forcing exactly when it
meets every fort, which is the duality the test suite exercises from both
sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import BudgetError, PreconditionError
from .graphs import Graph, bits

FORT_ENUM_MAX_ORDER = 20


@dataclass(frozen=True)
class ForceStep:
    """One application of the color change rule."""

    forcer: int
    forced: int
    step: int

    def to_dict(self) -> dict:
        return {"forcer": self.forcer, "forced": self.forced, "step": self.step}


def _close(adj: tuple[int, ...], blue: int) -> int:
    """Fixed point of the color change rule starting from ``blue``."""
    while True:
        prev = blue
        m = blue
        while m:
            low = m & -m
            m ^= low
            w = adj[low.bit_length() - 1] & ~blue
            if w and not (w & (w - 1)):
                blue |= w
        if blue == prev:
            return blue


class ClosureCache:
    """Memoized closures for one graph; at most 2^n entries."""

    __slots__ = ("adj", "_memo")

    def __init__(self, g: Graph):
        self.adj = g.adj
        self._memo: dict[int, int] = {}

    def closure(self, blue: int) -> int:
        got = self._memo.get(blue)
        if got is None:
            got = self._memo[blue] = _close(self.adj, blue)
        return got


def closure(g: Graph, blue: int) -> int:
    """Final coloring of ``blue`` under repeated color changes."""
    return _close(g.adj, blue)


def closure_with_chronicle(g: Graph, blue: int) -> tuple[int, list[ForceStep]]:
    """Closure plus the force sequence produced by ascending-index scans.

    The final set does not depend on the order of forces; the chronicle is
    deterministic so debug output is reproducible.
    """
    adj = g.adj
    steps: list[ForceStep] = []
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if (blue >> v) & 1:
                w = adj[v] & ~blue
                if w and not (w & (w - 1)):
                    forced = w.bit_length() - 1
                    blue |= w
                    steps.append(ForceStep(v, forced, len(steps)))
                    changed = True
    return blue, steps


def is_zero_forcing_set(g: Graph, b: int, cache: ClosureCache | None = None) -> bool:
    cl = cache.closure(b) if cache else _close(g.adj, b)
    return cl == g.full


def is_fort(g: Graph, f: int) -> bool:
    """True iff f is nonempty and no outside vertex has exactly one neighbor in f."""
    if not f:
        return False
    adj = g.adj
    outside = g.full & ~f
    while outside:
        low = outside & -outside
        outside ^= low
        if (adj[low.bit_length() - 1] & f).bit_count() == 1:
            return False
    return True


def max_fort_avoiding(g: Graph, a: int, cache: ClosureCache | None = None) -> int | None:
    """The largest fort disjoint from ``a``, or None if no such fort exists.

    This is the complement of the closure of ``a``: forcing from ``a`` can
    never enter a fort it does not meet, and the uncolored remainder (when
    nonempty) is itself a fort.
    """
    cl = cache.closure(a) if cache else _close(g.adj, a)
    rest = g.full & ~cl
    return rest if rest else None


def _masks_of_size(n: int, k: int) -> Iterator[int]:
    """All k-subsets of 0..n-1 as masks, lexicographic by vertex tuple."""
    for combo in combinations(range(n), k):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def zero_forcing_number(g: Graph, cache: ClosureCache | None = None) -> tuple[int, int]:
    """Minimum size of a zero forcing set and the lexicographically least witness."""
    cache = cache or ClosureCache(g)
    for k in range(g.n + 1):
        for m in _masks_of_size(g.n, k):
            if cache.closure(m) == g.full:
                return k, m
    raise AssertionError("the full vertex set always forces")


def is_minimal_zfs(g: Graph, b: int, cache: ClosureCache | None = None) -> bool:
    """True iff b forces and no single removal still forces."""
    cache = cache or ClosureCache(g)
    if cache.closure(b) != g.full:
        return False
    for x in bits(b):
        if cache.closure(b & ~(1 << x)) == g.full:
            return False
    return True


def upper_zero_forcing_number(g: Graph, cache: ClosureCache | None = None) -> tuple[int, int]:
    """Maximum size of a minimal zero forcing set, with its first witness.

    Descends by cardinality; the first minimal zero forcing set found (in
    lexicographic order within a cardinality) is returned.
    """
    cache = cache or ClosureCache(g)
    for k in range(g.n, 0, -1):
        for m in _masks_of_size(g.n, k):
            if is_minimal_zfs(g, m, cache):
                return k, m
    raise AssertionError("every graph of order >= 1 has a minimal zero forcing set")


def enumerate_forts(g: Graph) -> list[int]:
    """All forts, ascending by (size, lexicographic vertex order)."""
    if g.n > FORT_ENUM_MAX_ORDER:
        raise BudgetError(
            f"fort enumeration supports n <= {FORT_ENUM_MAX_ORDER}, got {g.n}")
    out = []
    for k in range(1, g.n + 1):
        for m in _masks_of_size(g.n, k):
            if is_fort(g, m):
                out.append(m)
    return out


def enumerate_minimal_forts(g: Graph) -> list[int]:
    """All inclusion-minimal forts, ascending by (size, lexicographic).

    Ascends by cardinality and keeps a fort only when it contains no smaller
    kept fort; same-size forts can never nest, so the kept list is exactly
    the minimal forts.
    """
    if g.n > FORT_ENUM_MAX_ORDER:
        raise BudgetError(
            f"minimal fort enumeration supports n <= {FORT_ENUM_MAX_ORDER}, got {g.n}")
    minimal: list[int] = []
    for k in range(1, g.n + 1):
        for m in _masks_of_size(g.n, k):
            if any(f & m == f for f in minimal):
                continue
            if is_fort(g, m):
                minimal.append(m)
    return minimal


def is_z_irrelevant(g: Graph, v: int) -> bool:
    """True iff v lies in no minimal fort (equivalently, in no minimal
    zero forcing set)."""
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range")
    return all(not (f >> v) & 1 for f in enumerate_minimal_forts(g))

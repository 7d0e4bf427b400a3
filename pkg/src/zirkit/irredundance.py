"""Private forts and the exact lower/upper ZIr numbers.

A fort F is a private fort of x relative to S when F meets S exactly in
{x}.  S is a ZIr-set when every member owns a private fort; the property is
hereditary under subsets.  zir(G) and ZIR(G) are the minimum and maximum
sizes of a maximal ZIr-set.

The privacy test runs through the forcing closure: a private fort of x
relative to S exists iff x survives outside the closure of S - {x}, in which
case the uncolored remainder is the unique maximum such fort.  The test
suite verifies this against definition-level fort enumeration on every small
graph, so the fast path is gated by an independent oracle rather than
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domination import k_domination_number
from .errors import PreconditionError
from .forcing import ClosureCache, is_zero_forcing_set, max_fort_avoiding
from .graphs import Graph, bit_list, bits


@dataclass(frozen=True)
class PrivateFortCertificate:
    """A fort meeting ``relative_to`` exactly in its owner."""

    owner: int
    fort: int
    relative_to: int

    def to_dict(self) -> dict:
        return {"owner": self.owner, "fort": bit_list(self.fort)}


@dataclass(frozen=True)
class ZirWitness:
    """A ZIr-set with one private-fort certificate per member."""

    members: int
    certificates: tuple[PrivateFortCertificate, ...]
    maximal: bool

    def to_dict(self) -> dict:
        return {
            "set": bit_list(self.members),
            "certificates": [c.to_dict() for c in self.certificates],
            "maximal": self.maximal,
        }


def has_private_fort(g: Graph, s: int, x: int,
                     cache: ClosureCache | None = None) -> PrivateFortCertificate | None:
    """Certificate that x has a private fort relative to s, or None.

    The returned fort is the maximum private fort of x: the complement of
    the closure of s - {x}.
    """
    bx = 1 << x
    if not s & bx:
        raise PreconditionError(f"vertex {x} is not a member of the set")
    cache = cache or ClosureCache(g)
    cl = cache.closure(s & ~bx)
    if cl & bx:
        return None
    return PrivateFortCertificate(owner=x, fort=g.full & ~cl, relative_to=s)


def minimal_private_fort(g: Graph, s: int, x: int,
                         cache: ClosureCache | None = None) -> int | None:
    """An inclusion-minimal private fort of x relative to s, or None.

    Shrinks the maximum private fort by visiting vertices in descending
    index order: dropping v is allowed when some fort containing x still
    lives inside F - {v}, and the surviving region (complement of the
    closure of everything else) becomes the new F.  Single-vertex deletion
    alone can get stuck above a smaller fort, so each step recloses against
    the whole remainder; afterwards no member vertex is removable, which is
    exactly inclusion-minimality.
    """
    cert = has_private_fort(g, s, x, cache)
    if cert is None:
        return None
    cache = cache or ClosureCache(g)
    bx = 1 << x
    fort = cert.fort
    for v in reversed(bit_list(fort)):
        bv = 1 << v
        if bv == bx or not fort & bv:
            continue
        cl = cache.closure(g.full & ~(fort & ~bv))
        if not cl & bx:
            fort = g.full & ~cl
    return fort


def is_zir_set(g: Graph, s: int, cache: ClosureCache | None = None) -> bool:
    """True iff every member of s has a private fort (vacuously true for empty s)."""
    cache = cache or ClosureCache(g)
    for x in bits(s):
        if cache.closure(s & ~(1 << x)) & (1 << x):
            return False
    return True


def is_maximal_zir_set(g: Graph, s: int, cache: ClosureCache | None = None) -> bool:
    cache = cache or ClosureCache(g)
    if not is_zir_set(g, s, cache):
        return False
    for v in bits(g.full & ~s):
        if is_zir_set(g, s | (1 << v), cache):
            return False
    return True


def _certify(g: Graph, members: int, cache: ClosureCache,
             maximal: bool) -> ZirWitness:
    certs = tuple(has_private_fort(g, members, x, cache) for x in bits(members))
    if any(c is None for c in certs):
        raise AssertionError("witness lost a private fort; solver bug")
    return ZirWitness(members=members, certificates=certs, maximal=maximal)


def _zir_upper_bound(g: Graph) -> int:
    """Cheap valid upper bounds on ZIR used for early exit."""
    ub = g.n
    if g.size() > 0:
        ub = g.n - 1
    if g.n >= 2 and g.is_connected():
        gamma = k_domination_number(g, 1).value
        dmax = g.max_degree()
        ub = min(ub, g.n - gamma, (dmax * g.n) // (dmax + 1))
    return ub


def upper_zir_number(g: Graph, cache: ClosureCache | None = None) -> tuple[int, ZirWitness]:
    """ZIR(G): maximum size of a ZIr-set, with certificates.

    Branch and bound over vertices in index order.  The initial incumbent is
    the complement of a minimum 2-dominating set D, which is always a
    ZIr-set (D plus any one outside vertex is one of its private forts).
    Heredity makes the search tree downward closed: only ZIr prefixes are
    extended.  Any ZIr-set of maximum size is automatically maximal.
    """
    cache = cache or ClosureCache(g)
    n, full = g.n, g.full

    seed = full & ~k_domination_number(g, 2).witness
    best_mask = seed
    best_size = seed.bit_count()
    ub = _zir_upper_bound(g)

    def member_keeps_fort(t: int, x: int) -> bool:
        return not cache.closure(t & ~(1 << x)) & (1 << x)

    def grow(s: int, size: int, start: int) -> None:
        nonlocal best_mask, best_size
        for v in range(start, n):
            if best_size >= ub:
                return
            if size + (n - v) <= best_size:
                return
            t = s | (1 << v)
            if not member_keeps_fort(t, v):
                continue
            if any(not member_keeps_fort(t, x) for x in bits(s)):
                continue
            if size + 1 > best_size:
                best_mask, best_size = t, size + 1
            grow(t, size + 1, v + 1)

    grow(0, 0, 0)
    return best_size, _certify(g, best_mask, cache, maximal=True)


def lower_zir_number(g: Graph, cache: ClosureCache | None = None) -> tuple[int, ZirWitness]:
    """zir(G): minimum size of a maximal ZIr-set, with certificates.

    Enumerates candidate sets ascending by (cardinality, lexicographic
    order), extending only ZIr prefixes (valid pruning by heredity), and
    returns the first candidate that is maximal.
    """
    cache = cache or ClosureCache(g)
    n = g.n

    def find(s: int, size: int, start: int, k: int) -> int | None:
        if size == k:
            return s if is_maximal_zir_set(g, s, cache) else None
        for v in range(start, n - (k - size) + 1):
            t = s | (1 << v)
            if not is_zir_set(g, t, cache):
                continue
            got = find(t, size + 1, v + 1, k)
            if got is not None:
                return got
        return None

    for k in range(1, n + 1):
        got = find(0, 0, 0, k)
        if got is not None:
            return k, _certify(g, got, cache, maximal=True)
    raise AssertionError("every graph has a maximal ZIr-set")


def abandons_fort(g: Graph, s: int, cache: ClosureCache | None = None) -> int | None:
    """The largest fort disjoint from the maximal ZIr-set s, or None.

    Present exactly when s is not a zero forcing set.  Abandonment is only
    meaningful relative to maximal ZIr-sets, so the precondition is enforced.
    """
    cache = cache or ClosureCache(g)
    if not is_maximal_zir_set(g, s, cache):
        raise PreconditionError("abandons_fort requires a maximal ZIr-set")
    return max_fort_avoiding(g, s, cache)


def graph_abandons_fort(g: Graph, cache: ClosureCache | None = None
                        ) -> tuple[bool, tuple[ZirWitness, int] | None]:
    """Whether some maximum-size ZIr-set fails to be a zero forcing set.

    Scans every ZIr-set of size ZIR(G) in lexicographic order; the first one
    that is not a zero forcing set is returned with its abandoned fort.
    """
    cache = cache or ClosureCache(g)
    target, _ = upper_zir_number(g, cache)
    n = g.n

    def scan(s: int, size: int, start: int) -> int | None:
        if size == target:
            if not is_zero_forcing_set(g, s, cache):
                return s
            return None
        for v in range(start, n - (target - size) + 1):
            t = s | (1 << v)
            if not is_zir_set(g, t, cache):
                continue
            got = scan(t, size + 1, v + 1)
            if got is not None:
                return got
        return None

    found = scan(0, 0, 0)
    if found is None:
        return False, None
    fort = max_fort_avoiding(g, found, cache)
    if fort is None:
        raise AssertionError("non-forcing set must leave a fort uncolored")
    return True, (_certify(g, found, cache, maximal=True), fort)

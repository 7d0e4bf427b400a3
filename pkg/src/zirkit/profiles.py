"""Parameter profiles, bound checks, and structural recognizers.

A profile gathers every exact parameter of one graph together with
witnesses; the check layer evaluates each bound or characterization whose
hypotheses hold and reports pass/fail/skip per check.  Structural
recognizers (path, star, clique-plus-isolated-vertices, and the complement
decomposition behind the near-extreme zero forcing characterization) are
pure graph predicates used by both the checks and the survey.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .domination import k_domination_number, independence_number, power_domination_number
from .families import FamilySpec, generate
from .forcing import (ClosureCache, is_minimal_zfs, is_zero_forcing_set,
                      upper_zero_forcing_number, zero_forcing_number)
from .graphs import (Graph, bit_list, bits, complement, join as join_graph,
                     mask_of, to_graph6)
from .irredundance import (graph_abandons_fort, is_maximal_zir_set, is_zir_set,
                           lower_zir_number, upper_zir_number)

PARAM_NAMES = ("zir", "Z", "Zbar", "ZIR", "gamma", "gamma2", "alpha", "gammaP")
DEFAULT_PROFILE_MAX_ORDER = 15
SUBSET_CHECK_MAX_ORDER = 10


@dataclass
class ParamProfile:
    """All computed parameters of one graph, with witnesses and flags."""

    graph_id: str
    n: int
    min_degree: int
    max_degree: int
    has_edge: bool
    connected: bool
    isolated_free: bool
    values: dict[str, int] = field(default_factory=dict)
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    omitted: list[str] = field(default_factory=list)

    def to_dict(self, include_witnesses: bool = True) -> dict:
        out = {
            "graph": self.graph_id,
            "n": self.n,
            "delta": self.min_degree,
            "Delta": self.max_degree,
            "has_edge": self.has_edge,
            "connected": self.connected,
            "isolated_free": self.isolated_free,
        }
        out.update({p: self.values[p] for p in PARAM_NAMES if p in self.values})
        if include_witnesses:
            out["witnesses"] = dict(self.witnesses)
        if self.omitted:
            out["omitted"] = list(self.omitted)
        return out


@dataclass
class CheckReport:
    """Outcome of one named check on one scope."""

    check: str
    scope: str
    status: str  # pass | fail | skip | finding | info
    detail: str = ""
    counterexample: dict | None = None
    stats: dict | None = None

    def to_dict(self) -> dict:
        out = {"check": self.check, "scope": self.scope, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.stats is not None:
            out["stats"] = self.stats
        return out


def parameter_profile(g: Graph, params: tuple[str, ...] | None = None,
                      max_order: int = DEFAULT_PROFILE_MAX_ORDER,
                      graph_id: str | None = None,
                      with_witnesses: bool = True) -> ParamProfile:
    """Compute the requested parameters (default: all) with witnesses.

    Above ``max_order`` the exact solvers are skipped and the requested
    parameters are listed in ``omitted`` instead of silently running an
    open-ended search.
    """
    wanted = PARAM_NAMES if params is None else tuple(params)
    for p in wanted:
        if p not in PARAM_NAMES:
            raise ValueError(f"unknown parameter {p!r}; known: {', '.join(PARAM_NAMES)}")
    profile = ParamProfile(
        graph_id=graph_id if graph_id is not None else to_graph6(g),
        n=g.n,
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
        has_edge=g.size() > 0,
        connected=g.is_connected(),
        isolated_free=g.isolated_vertices() == 0,
    )
    if g.n > max_order:
        profile.omitted = list(wanted)
        return profile

    cache = ClosureCache(g)

    def record(name: str, value: int, witness: int) -> None:
        profile.values[name] = value
        if with_witnesses:
            profile.witnesses[name] = bit_list(witness)

    for p in wanted:
        if p == "zir":
            value, wit = lower_zir_number(g, cache)
            record(p, value, wit.members)
        elif p == "Z":
            record(p, *zero_forcing_number(g, cache))
        elif p == "Zbar":
            record(p, *upper_zero_forcing_number(g, cache))
        elif p == "ZIR":
            value, wit = upper_zir_number(g, cache)
            record(p, value, wit.members)
        elif p == "gamma":
            result = k_domination_number(g, 1)
            record(p, result.value, result.witness)
        elif p == "gamma2":
            result = k_domination_number(g, 2)
            record(p, result.value, result.witness)
        elif p == "alpha":
            record(p, *independence_number(g))
        elif p == "gammaP":
            record(p, *power_domination_number(g))
    return profile


# -- structural recognizers ----------------------------------------------


def is_path_graph(g: Graph) -> bool:
    """True iff g is a path (any order >= 1)."""
    if not g.is_connected():
        return False
    if g.n == 1:
        return g.size() == 0
    degs = g.degrees()
    return g.size() == g.n - 1 and degs.count(1) == 2 and max(degs) <= 2


def is_star_graph(g: Graph) -> bool:
    """True iff g is a star K_{1,n-1} (order >= 2), or K_1."""
    if g.n == 1:
        return g.size() == 0
    if not g.is_connected():
        return False
    return g.size() == g.n - 1 and g.max_degree() == g.n - 1


def is_clique_plus_isolated(g: Graph) -> bool:
    """True iff g is a complete graph on >= 2 vertices plus isolated vertices."""
    core = [v for v in range(g.n) if g.adj[v]]
    if len(core) < 2:
        return False
    core_mask = mask_of(core)
    return all(g.adj[v] == core_mask & ~(1 << v) for v in core)


@dataclass(frozen=True)
class ComplementDecomposition:
    """Complement shape: (complete pieces ⊔ complete-bipartite pieces) ∨ K_r.

    ``complete_sizes`` lists clique components of size >= 3 (descending);
    ``bipartite_parts`` lists (q, p) with p >= q, ordered by q descending,
    with all isolated complement vertices pooled into a single trailing
    (0, m) piece; ``universal_count`` is r, the number of vertices adjacent
    to everything else in the complement.
    """

    complete_sizes: tuple[int, ...]
    bipartite_parts: tuple[tuple[int, int], ...]
    universal_count: int

    def to_dict(self) -> dict:
        return {
            "complete_sizes": list(self.complete_sizes),
            "bipartite_parts": [list(qp) for qp in self.bipartite_parts],
            "universal_count": self.universal_count,
        }


def _bipartition(adj_in_comp: dict[int, int], comp: int) -> tuple[int, int] | None:
    """2-color a connected component given its internal adjacency; None if odd cycle."""
    start = (comp & -comp).bit_length() - 1
    color = {start: 0}
    queue = [start]
    sides = [1 << start, 0]
    while queue:
        v = queue.pop()
        for u in bits(adj_in_comp[v]):
            if u in color:
                if color[u] == color[v]:
                    return None
            else:
                color[u] = 1 - color[v]
                sides[color[u]] |= 1 << u
                queue.append(u)
    return sides[0], sides[1]


def recognize_zn2_complement_form(g: Graph
                                  ) -> tuple[bool, ComplementDecomposition | None, bool]:
    """Test whether the complement is (cliques ⊔ complete-bipartite) ∨ K_r.

    Returns ``(matches, decomposition, lower_form)``.  ``matches`` is
    equivalent to Z(G) >= n-2 for n >= 3.  ``lower_form`` additionally
    requires no clique pieces and (q_1 >= 2, or q_1 = 1 with at least two
    bipartite pieces), which for n >= 3 characterizes zir(G) = n-2.
    Singleton and K_2 components count as bipartite pieces (0,1) and (1,1),
    and all (0,*) pieces merge into one.
    """
    c = complement(g)
    universal = [v for v in range(c.n) if c.adj[v] == c.full & ~(1 << v)]
    r = len(universal)
    rest = c.full & ~mask_of(universal)

    complete_sizes: list[int] = []
    bipartite: list[tuple[int, int]] = []
    pooled_empty = 0

    if rest:
        inner = {v: c.adj[v] & rest for v in bits(rest)}
        seen = 0
        for v in bits(rest):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            while True:
                grow = comp
                for u in bits(comp):
                    grow |= inner[u]
                if grow == comp:
                    break
                comp = grow
            seen |= comp
            size = comp.bit_count()
            if size == 1:
                pooled_empty += 1
                continue
            if all(inner[u] == comp & ~(1 << u) for u in bits(comp)):
                if size == 2:
                    bipartite.append((1, 1))
                else:
                    complete_sizes.append(size)
                continue
            sides = _bipartition(inner, comp)
            if sides is None:
                return False, None, False
            a, b = sides
            edges = sum((inner[u] & b).bit_count() for u in bits(a))
            if edges != a.bit_count() * b.bit_count():
                return False, None, False
            q, p = sorted((a.bit_count(), b.bit_count()))
            bipartite.append((q, p))

    bipartite.sort(key=lambda qp: (-qp[0], -qp[1]))
    if pooled_empty:
        bipartite.append((0, pooled_empty))
    decomp = ComplementDecomposition(
        complete_sizes=tuple(sorted(complete_sizes, reverse=True)),
        bipartite_parts=tuple(bipartite),
        universal_count=r,
    )
    t, k = len(decomp.complete_sizes), len(decomp.bipartite_parts)
    lower_form = (t == 0 and k >= 1
                  and (bipartite[0][0] >= 2 or (bipartite[0][0] == 1 and k >= 2)))
    return True, decomp, lower_form


# -- bound checks ---------------------------------------------------------


def _report(check: str, scope: str, ok: bool, detail: str,
            counterexample: dict | None = None) -> CheckReport:
    return CheckReport(check, scope, "pass" if ok else "fail", detail,
                       None if ok else counterexample)


def _skip(check: str, scope: str, why: str) -> CheckReport:
    return CheckReport(check, scope, "skip", why)


def check_bounds(profile: ParamProfile, g: Graph,
                 spec: FamilySpec | None = None,
                 factor_max_order: int = 13) -> list[CheckReport]:
    """Evaluate every applicable bound on one profile.

    Join and corona bounds only apply when ``spec`` describes the graph as a
    product, since they compare against parameters of the factors.
    """
    scope = profile.graph_id
    v = profile.values
    n = profile.n
    reports: list[CheckReport] = []

    def need(*names: str) -> bool:
        return all(name in v for name in names)

    if need("zir", "Z", "Zbar", "ZIR"):
        ok = v["zir"] <= v["Z"] <= v["Zbar"] <= v["ZIR"]
        reports.append(_report(
            "chain", scope, ok,
            f"zir={v['zir']} Z={v['Z']} Zbar={v['Zbar']} ZIR={v['ZIR']}"))
    if need("zir"):
        reports.append(_report(
            "min-degree", scope, profile.min_degree <= v["zir"],
            f"delta={profile.min_degree} zir={v['zir']}"))
    if need("ZIR"):
        if profile.has_edge:
            reports.append(_report("edge-upper", scope, v["ZIR"] <= n - 1,
                                   f"ZIR={v['ZIR']} n={n}"))
        else:
            reports.append(_skip("edge-upper", scope, "graph has no edge"))
    if need("ZIR", "gamma", "gamma2"):
        if n >= 2 and profile.isolated_free:
            ok = n - v["gamma2"] <= v["ZIR"] <= n - v["gamma"]
            reports.append(_report(
                "domination-sandwich", scope, ok,
                f"n-gamma2={n - v['gamma2']} ZIR={v['ZIR']} n-gamma={n - v['gamma']}"))
        else:
            reports.append(_skip("domination-sandwich", scope,
                                 "needs n >= 2 and no isolated vertices"))
    if need("ZIR"):
        if profile.min_degree >= 3 and n >= 2:
            reports.append(_report("min-degree-3-half", scope, 2 * v["ZIR"] >= n,
                                   f"ZIR={v['ZIR']} n={n}"))
        else:
            reports.append(_skip("min-degree-3-half", scope, "needs delta >= 3"))
        if profile.min_degree == 2 and n >= 3:
            reports.append(_report("min-degree-2-third", scope, 3 * v["ZIR"] > n,
                                   f"ZIR={v['ZIR']} n={n}"))
        else:
            reports.append(_skip("min-degree-2-third", scope, "needs delta = 2"))
        if profile.connected and n >= 2:
            dmax = profile.max_degree
            reports.append(_report(
                "max-degree-ratio", scope, v["ZIR"] * (dmax + 1) <= dmax * n,
                f"ZIR={v['ZIR']} Delta={dmax} n={n}"))
        else:
            reports.append(_skip("max-degree-ratio", scope, "needs a connected graph"))
        cubic = profile.connected and profile.min_degree == 3 == profile.max_degree
        if cubic and n >= 4:
            ok = n <= 2 * v["ZIR"] and 4 * v["ZIR"] <= 3 * n
            reports.append(_report("cubic-range", scope, ok,
                                   f"ZIR={v['ZIR']} n={n}"))
        else:
            reports.append(_skip("cubic-range", scope, "needs a connected cubic graph"))
        reports.append(_cut_vertex_bound(profile, g))
    reports.extend(_product_bounds(profile, g, spec, factor_max_order))
    return reports


def _cut_vertex_bound(profile: ParamProfile, g: Graph) -> CheckReport:
    """ZIR(G) >= sum of the top l-1 component values after removing a
    cut-vertex that splits into l >= 3 components."""
    scope = profile.graph_id
    if "ZIR" not in profile.values or not profile.connected or g.n < 4:
        return _skip("cut-vertex", scope, "needs ZIR and a connected graph on >= 4 vertices")
    best: tuple[int, int] | None = None  # (required lower bound, cut vertex)
    for c in range(g.n):
        rest = g.full & ~(1 << c)
        sub = g.induced(rest)
        comps = sub.components()
        if len(comps) < 3:
            continue
        values = sorted((upper_zir_number(sub.induced(comp))[0] for comp in comps),
                        reverse=True)
        bound = sum(values[:-1])
        if best is None or bound > best[0]:
            best = (bound, c)
    if best is None:
        return _skip("cut-vertex", scope, "no cut vertex splits into >= 3 components")
    ok = profile.values["ZIR"] >= best[0]
    return _report("cut-vertex", scope, ok,
                   f"ZIR={profile.values['ZIR']} >= {best[0]} (cut vertex {best[1]})")


def _product_bounds(profile: ParamProfile, g: Graph, spec: FamilySpec | None,
                    factor_max_order: int) -> list[CheckReport]:
    scope = profile.graph_id
    reports: list[CheckReport] = []
    if spec is None or spec.kind not in ("join", "corona") or "ZIR" not in profile.values:
        return reports
    left = generate(spec.parts[0])
    right = generate(spec.parts[1])
    zir_total = profile.values["ZIR"]

    if spec.kind == "join":
        if left.n >= 2 and right.n >= 2:
            ok = left.n + right.n - 4 <= zir_total <= left.n + right.n - 1
            reports.append(_report("join-range", scope, ok,
                                   f"{left.n + right.n - 4} <= ZIR={zir_total} <= "
                                   f"{left.n + right.n - 1}"))
        else:
            reports.append(_skip("join-range", scope, "needs both factors of order >= 2"))
        base, hub = (left, right) if right.n == 1 else (right, left)
        if hub.n == 1 and base.n >= 1 and base.isolated_vertices() == 0:
            if base.n <= factor_max_order:
                gamma = k_domination_number(base, 1).value
                ok = base.n - gamma <= zir_total <= base.n - gamma + 1
                reports.append(_report(
                    "join-hub-range", scope, ok,
                    f"{base.n - gamma} <= ZIR={zir_total} <= {base.n - gamma + 1}"))
            else:
                reports.append(_skip("join-hub-range", scope, "factor beyond budget"))
        else:
            reports.append(_skip("join-hub-range", scope,
                                 "needs join with K_1 and isolated-free base"))
        return reports

    # corona bounds; all need the factor parameters
    if max(left.n, right.n + 1) > factor_max_order:
        reports.append(_skip("corona-bounds", scope, "factor beyond budget"))
        return reports
    hull = join_graph(right, Graph(1))
    zir_hull = upper_zir_number(hull)[0]
    zir_left = upper_zir_number(left)[0]
    zir_right = upper_zir_number(right)[0]
    alpha_left = independence_number(left)[0]
    if right.isolated_vertices() == 0:
        reports.append(_report(
            "corona-upper", scope, zir_total <= left.n * zir_hull,
            f"ZIR={zir_total} <= {left.n}*{zir_hull}"))
        lb = zir_left * zir_hull + (left.n - zir_left) * zir_right
        reports.append(_report("corona-lower", scope, zir_total >= lb,
                               f"ZIR={zir_total} >= {lb}"))
    else:
        reports.append(_skip("corona-upper", scope, "attached factor has isolated vertices"))
        reports.append(_skip("corona-lower", scope, "attached factor has isolated vertices"))
    lb2 = alpha_left * zir_hull + (left.n - alpha_left) * (zir_right - 1)
    reports.append(_report("corona-alpha-lower", scope, zir_total >= lb2,
                           f"ZIR={zir_total} >= {lb2}"))
    return reports


# -- characterization checks ----------------------------------------------


def check_characterizations(g: Graph, profile: ParamProfile,
                            spec: FamilySpec | None = None) -> list[CheckReport]:
    """Check each structural characterization whose hypothesis applies."""
    scope = profile.graph_id
    v = profile.values
    n = profile.n
    reports: list[CheckReport] = []

    if all(p in v for p in ("zir", "ZIR")):
        edgeless = not profile.has_edge
        ok = (v["zir"] == n) == edgeless == (v["ZIR"] == n)
        reports.append(_report("extreme-n", scope, ok,
                               f"zir={v['zir']} ZIR={v['ZIR']} edgeless={edgeless}"))
    if n >= 2 and all(p in v for p in PARAM_NAMES[:4]):
        shape = is_clique_plus_isolated(g)
        flags = [v[p] == n - 1 for p in ("zir", "Z", "Zbar", "ZIR")]
        ok = all(f == shape for f in flags)
        reports.append(_report("extreme-n-minus-1", scope, ok,
                               f"values-at-n-1={flags} clique-plus-isolated={shape}"))
    if n >= 3 and "zir" in v:
        _, decomp, lower_form = recognize_zn2_complement_form(g)
        ok = (v["zir"] == n - 2) == lower_form
        reports.append(_report(
            "zir-n-minus-2-form", scope, ok,
            f"zir={v['zir']} n-2={n - 2} recognizer={lower_form}",
            {"decomposition": decomp.to_dict() if decomp else None}))
    if n >= 3 and "Z" in v:
        matches, _, _ = recognize_zn2_complement_form(g)
        ok = (v["Z"] >= n - 2) == matches
        reports.append(_report("z-n-minus-2-form", scope, ok,
                               f"Z={v['Z']} n-2={n - 2} recognizer={matches}"))
    if "zir" in v:
        shape = is_path_graph(g) or is_star_graph(g)
        reports.append(_report("zir1-characterization", scope,
                               (v["zir"] == 1) == shape,
                               f"zir={v['zir']} path-or-star={shape}"))
    if n <= SUBSET_CHECK_MAX_ORDER:
        reports.append(_minimal_zfs_equivalence(g, scope))
    else:
        reports.append(_skip("minimal-zfs-equivalence", scope,
                             f"subset sweep limited to n <= {SUBSET_CHECK_MAX_ORDER}"))
    reports.append(_leaf_zir_check(g, profile, spec))
    if n <= SUBSET_CHECK_MAX_ORDER and all(p in v for p in ("Zbar", "ZIR")):
        abandons, _ = graph_abandons_fort(g)
        if abandons:
            reports.append(_skip("abandonment-identity", scope, "graph abandons a fort"))
        else:
            reports.append(_report("abandonment-identity", scope,
                                   v["ZIR"] == v["Zbar"],
                                   f"ZIR={v['ZIR']} Zbar={v['Zbar']} (no abandoned fort)"))
    return reports


def _minimal_zfs_equivalence(g: Graph, scope: str) -> CheckReport:
    """Minimal zero forcing sets are exactly the maximal ZIr-sets that force."""
    cache = ClosureCache(g)
    for s in range(g.full + 1):
        lhs = is_minimal_zfs(g, s, cache)
        rhs = is_maximal_zir_set(g, s, cache) and is_zero_forcing_set(g, s, cache)
        if lhs != rhs:
            return _report("minimal-zfs-equivalence", scope, False,
                           f"set {bit_list(s)} minimal-zfs={lhs} maximal-zir-and-zfs={rhs}",
                           {"set": bit_list(s)})
    return _report("minimal-zfs-equivalence", scope, True, "all subsets agree")


def _leaf_zir_check(g: Graph, profile: ParamProfile,
                    spec: FamilySpec | None) -> CheckReport:
    """For coronas H∘tK_1 (H connected, order >= 3, t >= 2): some maximum
    ZIr-set uses only leaves."""
    scope = profile.graph_id
    applies = (spec is not None and spec.kind == "corona"
               and spec.parts[1].kind == "empty" and spec.parts[1].params[0] >= 2)
    if applies:
        h = generate(spec.parts[0])
        applies = h.is_connected() and h.n >= 3
    if not applies or "ZIR" not in profile.values:
        return _skip("leaf-zir-set", scope,
                     "needs corona(H, empty:t) with connected H of order >= 3 and t >= 2")
    leaves = mask_of(v for v in range(g.n) if g.degree(v) == 1)
    target = profile.values["ZIR"]
    cache = ClosureCache(g)
    leaf_bits = bit_list(leaves)

    def grow(s: int, size: int, idx: int) -> bool:
        if size == target:
            return True
        for i in range(idx, len(leaf_bits) - (target - size) + 1):
            t = s | (1 << leaf_bits[i])
            if is_zir_set(g, t, cache) and grow(t, size + 1, i + 1):
                return True
        return False

    ok = grow(0, 0, 0)
    return _report("leaf-zir-set", scope, ok,
                   f"all-leaf ZIr-set of size ZIR={target} exists={ok}")

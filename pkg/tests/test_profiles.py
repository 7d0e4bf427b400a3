import pytest

from zirkit.families import generate, parse_family_expr
from zirkit.graphs import disjoint_union, parse_graph6
from zirkit.profiles import (check_bounds, check_characterizations,
                             is_clique_plus_isolated, is_path_graph,
                             is_star_graph, parameter_profile,
                             recognize_zn2_complement_form)



def _values(expr, params=("zir", "Z", "Zbar", "ZIR")):
    g = generate(expr)
    profile = parameter_profile(g, params=params, graph_id=expr)
    return tuple(profile.values[p] for p in params)


def test_profile_values_for_small_families():
    assert _values("cycle:7") == (2, 2, 2, 3)
    assert _values("h_rs:3,5") == (2, 3, 4, 5)
    assert _values("empty:4") == (4, 4, 4, 4)
    assert _values("complete:5") == (4, 4, 4, 4)


def test_profile_flags_and_structure():
    g = generate("union(complete:3,empty:2)")
    p = parameter_profile(g, params=("zir",), graph_id="demo")
    assert p.n == 5 and p.has_edge and not p.connected and not p.isolated_free
    assert p.min_degree == 0 and p.max_degree == 2
    d = p.to_dict()
    assert d["graph"] == "demo" and d["zir"] == p.values["zir"]


def test_profile_budget_produces_omissions():
    g = generate("cycle:12")
    p = parameter_profile(g, max_order=10)
    assert p.values == {} and set(p.omitted) == {"zir", "Z", "Zbar", "ZIR",
                                                 "gamma", "gamma2", "alpha", "gammaP"}


def test_profile_rejects_unknown_parameter():
    with pytest.raises(ValueError):
        parameter_profile(generate("path:3"), params=("zzz",))


def test_path_and_star_recognizers():
    assert is_path_graph(generate("path:1"))
    assert is_path_graph(generate("path:6"))
    assert not is_path_graph(generate("cycle:6"))
    assert is_star_graph(generate("star:4"))
    assert is_star_graph(generate("complete:2"))
    assert not is_star_graph(generate("path:4"))
    assert not is_path_graph(disjoint_union(generate("path:2"), generate("path:2")))


def test_clique_plus_isolated_recognizer():
    assert is_clique_plus_isolated(generate("complete:4"))
    assert is_clique_plus_isolated(generate("union(complete:3,empty:2)"))
    assert not is_clique_plus_isolated(generate("path:3"))
    assert not is_clique_plus_isolated(generate("empty:3"))


def test_complement_form_recognizer_fig5():
    matches, decomp, lower = recognize_zn2_complement_form(generate("fig5"))
    assert matches
    assert decomp.complete_sizes == (3,)
    assert decomp.bipartite_parts == ((2, 2),)
    assert decomp.universal_count == 0
    assert not lower  # a clique piece rules out the lower form


def test_complement_form_recognizer_negative():
    assert recognize_zn2_complement_form(generate("path:4"))[0] is False
    assert recognize_zn2_complement_form(generate("cycle:6"))[0] is False


def test_complement_form_recognizer_complete_graph():
    matches, decomp, lower = recognize_zn2_complement_form(generate("complete:5"))
    assert matches
    assert decomp.bipartite_parts == ((0, 5),)
    assert not lower


def test_complement_form_matches_zero_forcing_threshold(small_graphs, rng):
    from zirkit.forcing import zero_forcing_number
    for g in rng.sample([g for g in small_graphs if g.n >= 3], 200):
        matches, _, _ = recognize_zn2_complement_form(g)
        assert matches == (zero_forcing_number(g)[0] >= g.n - 2)


def test_complement_form_lower_flag_matches_zir(small_graphs, rng):
    from zirkit.irredundance import lower_zir_number
    for g in rng.sample([g for g in small_graphs if g.n >= 3], 120):
        _, _, lower = recognize_zn2_complement_form(g)
        assert lower == (lower_zir_number(g)[0] == g.n - 2)


def test_check_bounds_statuses():
    expr = "necklace:3"
    g = generate(expr)
    profile = parameter_profile(g, graph_id=expr)
    reports = {r.check: r for r in check_bounds(profile, g, parse_family_expr(expr))}
    assert reports["chain"].status == "pass"
    assert reports["min-degree-3-half"].status == "pass"
    assert reports["cubic-range"].status == "pass"
    assert reports["min-degree-2-third"].status == "skip"
    # the half bound is tight on the necklace
    assert profile.values["ZIR"] * 2 == g.n


def test_check_bounds_gates_disconnected():
    g = generate("union(cycle:3,cycle:3)")
    profile = parameter_profile(g)
    reports = {r.check: r for r in check_bounds(profile, g)}
    assert reports["max-degree-ratio"].status == "skip"
    assert reports["domination-sandwich"].status == "pass"  # isolated-free holds


def test_cubic_upper_bound_tight_on_k4():
    g = generate("complete:4")
    profile = parameter_profile(g)
    assert profile.values["ZIR"] == 3  # equals 3n/4
    reports = {r.check: r for r in check_bounds(profile, g)}
    assert reports["cubic-range"].status == "pass"


def test_join_and_corona_bounds():
    for expr in ("join(path:3,path:4)", "join(cycle:5,complete:1)",
                 "corona(cycle:3,complete:2)", "corona(complete:2,cycle:4)"):
        spec = parse_family_expr(expr)
        g = generate(expr)
        profile = parameter_profile(g, graph_id=expr)
        reports = check_bounds(profile, g, spec)
        failures = [r for r in reports if r.status == "fail"]
        assert not failures, failures
        names = {r.check for r in reports}
        if spec.kind == "join":
            assert "join-range" in names
        else:
            assert "corona-upper" in names and "corona-alpha-lower" in names


def test_cut_vertex_bound_three_components():
    # each cycle vertex of C_4 ∘ 2K_1 cuts off its two leaves plus the rest
    g = generate("corona(cycle:4,empty:2)")
    profile = parameter_profile(g, params=("ZIR",), graph_id="corona(cycle:4,empty:2)")
    reports = {r.check: r for r in check_bounds(profile, g)}
    assert reports["cut-vertex"].status == "pass"
    # one leaf per vertex leaves only two components, so the bound is gated
    g = generate("pentasun")
    profile = parameter_profile(g, params=("ZIR",), graph_id="pentasun")
    reports = {r.check: r for r in check_bounds(profile, g)}
    assert reports["cut-vertex"].status == "skip"


def test_characterizations_on_examples():
    # complete graph plus isolated vertices sits at the n-1 extreme
    g = disjoint_union(generate("complete:5"), generate("empty:2"))
    profile = parameter_profile(g)
    assert profile.values["zir"] == 6 == profile.values["ZIR"]
    reports = {r.check: r for r in check_characterizations(g, profile)}
    assert reports["extreme-n-minus-1"].status == "pass"
    assert reports["zir1-characterization"].status == "pass"

    expr = "corona(path:3,empty:2)"
    g = generate(expr)
    profile = parameter_profile(g, graph_id=expr)
    reports = {r.check: r for r in
               check_characterizations(g, profile, parse_family_expr(expr))}
    assert reports["leaf-zir-set"].status == "pass"

    g = generate("friendship:3")
    profile = parameter_profile(g)
    reports = {r.check: r for r in check_characterizations(g, profile)}
    assert reports["abandonment-identity"].status == "pass"
    assert profile.values["ZIR"] == profile.values["Zbar"] == 4


def test_characterizations_hold_on_random_graphs(small_graphs, rng):
    for g in rng.sample(small_graphs, 40):
        profile = parameter_profile(g)
        for report in check_characterizations(g, profile):
            assert report.status in ("pass", "skip"), (report.check, report.detail)


def test_profile_graph_id_defaults_to_graph6():
    g = parse_graph6("D?{")
    assert parameter_profile(g, params=("Z",)).graph_id == "D?{"

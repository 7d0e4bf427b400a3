import pytest

from zirkit.errors import BudgetError, SizeCapError
from zirkit.families import (complete_graph, cycle_graph, empty_graph,
                             fig5_graph, necklace_graph, path_graph)
from zirkit.graphs import (Graph, canonical_form, complement, corona,
                           disjoint_union, enumerate_labeled_graphs, join,
                           twin_classes)


def test_graph_rejects_loops_and_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(SizeCapError):
        Graph(65)


def test_from_adj_validates_symmetry():
    with pytest.raises(ValueError):
        Graph.from_adj((0b010, 0b000, 0b000))


def test_union_counts():
    u = disjoint_union(Graph(1), Graph(1))
    assert u.n == 2 and u.size() == 0
    u = disjoint_union(path_graph(3), cycle_graph(3))
    assert u.n == 6 and u.size() == 5
    three_k2 = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                              complete_graph(2))
    assert three_k2.n == 6 and all(d == 1 for d in three_k2.degrees())


def test_join_counts_and_edges():
    for g, h in [(path_graph(3), cycle_graph(4)), (complete_graph(2), empty_graph(3))]:
        j = join(g, h)
        assert j.n == g.n + h.n
        assert j.size() == g.size() + h.size() + g.n * h.n
    assert join(path_graph(2), path_graph(2)) == complete_graph(4)


def test_wheel_as_join_degree_sequence():
    w6 = join(cycle_graph(5), complete_graph(1))
    assert sorted(w6.degrees()) == [3, 3, 3, 3, 3, 5]


def test_corona_layout():
    c = corona(cycle_graph(3), empty_graph(2))
    assert c.n == 9
    # each cycle vertex has two private leaves
    for i in range(3):
        for a in range(2):
            leaf = 3 + 2 * i + a
            assert c.degree(leaf) == 1
            assert c.has_edge(i, leaf)
    # corona with K_1 on a single base vertex is the join with a hub
    left = corona(complete_graph(1), path_graph(3))
    right = join(path_graph(3), complete_graph(1))
    perm = [3, 0, 1, 2]  # corona puts the base vertex first, the join puts it last
    assert left.relabel(perm) == right


def test_size_caps_on_products():
    with pytest.raises(SizeCapError):
        disjoint_union(empty_graph(40), empty_graph(40))
    with pytest.raises(SizeCapError):
        corona(empty_graph(10), empty_graph(10))


def test_complement_involution_and_complete():
    assert complement(complete_graph(5)) == empty_graph(5)
    for g in (path_graph(5), cycle_graph(6), fig5_graph()):
        assert complement(complement(g)) == g


def test_fig5_complement_structure():
    # complement splits into a triangle on {u1,u2,u3} and a 4-cycle on the rest
    c = complement(fig5_graph())
    assert sorted(c.edges()) == [(0, 1), (0, 2), (1, 2),
                                 (3, 4), (3, 6), (4, 5), (5, 6)]


def test_enumeration_counts():
    assert len(list(enumerate_labeled_graphs(1))) == 1
    assert len(list(enumerate_labeled_graphs(3))) == 8
    graphs4 = list(enumerate_labeled_graphs(4))
    assert len(graphs4) == 64
    assert sum(1 for g in graphs4 if g.is_connected()) == 38
    with pytest.raises(BudgetError):
        next(enumerate_labeled_graphs(8))


def test_enumeration_connected_filter():
    conn = list(enumerate_labeled_graphs(4, connected_only=True))
    assert len(conn) == 38
    assert all(g.is_connected() for g in conn)


def test_enumeration_is_in_edge_mask_order():
    graphs = list(enumerate_labeled_graphs(3))
    # slots are (0,1), (0,2), (1,2); mask 0 is empty, mask 1 is the lone
    # edge (0,1), mask 3 has edges (0,1) and (0,2)
    assert graphs[0].size() == 0
    assert sorted(graphs[1].edges()) == [(0, 1)]
    assert sorted(graphs[3].edges()) == [(0, 1), (0, 2)]
    assert graphs[7].size() == 3


def test_canonical_form_counts_isomorphism_classes():
    classes = {canonical_form(g) for g in enumerate_labeled_graphs(4)}
    assert len(classes) == 11  # unlabeled graphs on four vertices


def test_components_and_connectivity():
    u = disjoint_union(path_graph(2), cycle_graph(3))
    comps = u.components()
    assert comps == [0b00011, 0b11100]
    assert not u.is_connected()
    assert cycle_graph(5).is_connected()
    assert u.induced(0b11100) == cycle_graph(3)


def test_twin_classes_partite_sets():
    from zirkit.families import complete_bipartite_graph
    classes = twin_classes(complete_bipartite_graph(2, 3))
    assert classes == [(0, 1), (2, 3, 4)]


def test_twin_classes_necklace_pairs():
    classes = twin_classes(necklace_graph(3))
    pairs = [c for c in classes if len(c) == 2]
    assert pairs == [(1, 3), (5, 7), (9, 11)]  # the (b_i, d_i) pairs


def test_twin_classes_path_singletons():
    assert twin_classes(path_graph(4)) == [(0,), (1,), (2,), (3,)]
    part = twin_classes(path_graph(3))
    assert (0, 2) in part and (1,) in part


def test_twin_classes_partition_every_vertex():
    for g in (fig5_graph(), necklace_graph(2), cycle_graph(6)):
        classes = twin_classes(g)
        seen = sorted(v for cls in classes for v in cls)
        assert seen == list(range(g.n))

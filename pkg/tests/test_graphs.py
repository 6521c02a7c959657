"""Graph construction and chromatic polynomial tests.

Closed forms and the deletion-contraction evaluator are checked against each
other and against an independent brute-force enumeration written here.
"""

from __future__ import annotations

from itertools import product

import pytest

from lcftools import (
    BudgetExceededError,
    Graph,
    GraphFamily,
    UnsupportedFamilyError,
    chromatic_polynomial,
    chrompoly_k2l,
    closed_form_chromatic_polynomial,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
)


def _brute_chrompoly(g: Graph, m: int) -> int:
    edges = g.sorted_edges()
    return sum(
        1
        for combo in product(range(1, m + 1), repeat=g.num_vertices)
        if all(combo[u] != combo[v] for u, v in edges)
    )


def test_complete_bipartite_layout():
    g = make_complete_bipartite(2, 4)
    assert g.num_vertices == 6
    assert len(g.edges) == 8
    # small side first, every cross pair present
    assert g.edges == frozenset((i, 2 + j) for i in range(2) for j in range(4))


def test_constructors_validate():
    with pytest.raises(ValueError):
        make_complete_bipartite(0, 3)
    with pytest.raises(ValueError):
        make_cycle(2)
    with pytest.raises(ValueError):
        make_complete(0)
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(0, frozenset())
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 1)}))  # not normalized


def test_edge_normalization():
    g = Graph.from_edges(3, [(2, 0), (1, 0)])
    assert g.edges == frozenset({(0, 2), (0, 1)})


def test_graph_json_round_trip():
    g = make_complete_bipartite(3, 2)
    again = Graph.from_json(g.to_json())
    assert again == g


def test_family_validation():
    with pytest.raises(ValueError):
        GraphFamily.cycle(2)
    with pytest.raises(ValueError):
        GraphFamily.tree(3, [(0, 1)])  # disconnected
    with pytest.raises(ValueError):
        GraphFamily.tree(3, [(0, 1), (1, 2), (0, 2)])  # has a cycle
    fam = GraphFamily.tree(4, [(0, 1), (1, 2), (1, 3)])
    assert fam.build().num_vertices == 4


def test_closed_form_anchors():
    # P(K_{2,4}, 3) = 54; frozen from brute-force enumeration
    fam = GraphFamily.complete_bipartite(2, 4)
    assert closed_form_chromatic_polynomial(fam, 3) == 54
    assert chrompoly_k2l(4, 3) == 54
    assert closed_form_chromatic_polynomial(GraphFamily.complete(3), 3) == 6
    assert closed_form_chromatic_polynomial(GraphFamily.cycle(4), 2) == 2
    assert closed_form_chromatic_polynomial(GraphFamily.cycle(4), 3) == 18


def test_closed_form_rejects_wide_bipartite():
    fam = GraphFamily.complete_bipartite(3, 2)
    with pytest.raises(UnsupportedFamilyError):
        closed_form_chromatic_polynomial(fam, 3)


def test_closed_forms_match_brute_force():
    families = [
        GraphFamily.complete(1),
        GraphFamily.complete(3),
        GraphFamily.complete(4),
        GraphFamily.cycle(3),
        GraphFamily.cycle(5),
        GraphFamily.tree(1, []),
        GraphFamily.tree(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
        GraphFamily.tree(5, [(0, 1), (0, 2), (0, 3), (0, 4)]),
        GraphFamily.complete_bipartite(2, 3),
    ]
    for fam in families:
        g = fam.build()
        for m in range(0, 4):
            assert closed_form_chromatic_polynomial(fam, m) == _brute_chrompoly(g, m), (
                fam,
                m,
            )


def test_deletion_contraction_matches_closed_forms():
    # the full corpus sweep: every family instance with <= 8 vertices, m in 0..6
    families = [
        GraphFamily.complete(n) for n in range(1, 6)
    ] + [
        GraphFamily.cycle(n) for n in (3, 4, 5, 6, 8)
    ] + [
        GraphFamily.tree(2, [(0, 1)]),
        GraphFamily.tree(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
        GraphFamily.tree(7, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6)]),
    ] + [
        GraphFamily.complete_bipartite(2, l) for l in range(1, 6)
    ]
    for fam in families:
        g = fam.build()
        for m in range(0, 7):
            assert chromatic_polynomial(g, m) == closed_form_chromatic_polynomial(
                fam, m
            ), (fam, m)


def test_deletion_contraction_recurrence():
    # P(G, m) = P(G - e, m) - P(G / e, m), with both sides rebuilt here
    g = make_complete_bipartite(2, 3)
    e = min(g.edges)
    deleted = Graph(g.num_vertices, g.edges - {e})

    u, v = e
    contracted_edges = set()
    for a, b in g.edges:
        if (a, b) == e:
            continue
        a2 = u if a == v else (a - 1 if a > v else a)
        b2 = u if b == v else (b - 1 if b > v else b)
        if a2 != b2:
            contracted_edges.add((min(a2, b2), max(a2, b2)))
    contracted = Graph(g.num_vertices - 1, frozenset(contracted_edges))

    for m in range(0, 5):
        assert chromatic_polynomial(g, m) == chromatic_polynomial(
            deleted, m
        ) - chromatic_polynomial(contracted, m)


def test_chrompoly_edge_cases():
    assert chromatic_polynomial(make_complete(3), 0) == 0
    assert chromatic_polynomial(make_cycle(5), 1) == 0
    single = Graph(1, frozenset())
    assert chromatic_polynomial(single, 0) == 0
    assert chromatic_polynomial(single, 7) == 7
    g = make_complete_bipartite(2, 2)
    for m in range(5):
        assert 0 <= chromatic_polynomial(g, m) <= m**g.num_vertices
    with pytest.raises(ValueError):
        chromatic_polynomial(g, -1)


def test_chrompoly_budget():
    g = make_complete(5)
    with pytest.raises(BudgetExceededError):
        chromatic_polynomial(g, 3, max_nodes=5)


def test_path_is_tree():
    g = make_path(4)
    assert chromatic_polynomial(g, 3) == 3 * 2**3

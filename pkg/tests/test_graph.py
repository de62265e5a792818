from __future__ import annotations

import pytest

from ldal.graph import (FAMILIES, Graph, GraphError, ParseError, bistar, blowup, center,
                        complete, complete_bipartite, cycle, disjoint_union, edge_count_formula,
                        empty, fan, friendship, gen_family, join, lexicographic, matching,
                        order_formula, parse_graph, path, product_index, same_by_tags,
                        serialize_graph, star, subdivision, wheel)


def test_cycle4_is_2_regular():
    G = gen_family("cycle 4")
    assert (G.order, G.size) == (4, 4)
    assert G.is_regular() and list(G.degrees) == [2, 2, 2, 2]


def test_friendship2_counts():
    G = friendship(2)
    assert (G.order, G.size) == (5, 6)
    assert G.degree(0) == 4


def test_bistar22_counts():
    G = bistar(2, 2)
    assert (G.order, G.size) == (6, 5)
    assert G.has_edge(0, 1) and G.degree(0) == G.degree(1) == 3


@pytest.mark.parametrize("desc", ["cycle 2", "path 0", "bistar 1 3", "friendship 0", "wheel 2"])
def test_family_minimums(desc):
    with pytest.raises(GraphError):
        gen_family(desc)


def test_unknown_family_and_trailing_tokens():
    with pytest.raises(GraphError):
        gen_family("hypercube 3")
    with pytest.raises(GraphError):
        gen_family("cycle 4 5")


def test_join_examples():
    G = join(complete(2), empty(2))
    assert (G.order, G.size) == (4, 5)
    assert join(empty(1), empty(1)).edges == complete(2).edges
    W = join(cycle(4), center())
    assert W.degree(4) == 4
    assert W.edges == wheel(4).edges


def test_lexicographic_examples():
    G = blowup(cycle(4), 2)
    assert G.order == 8 and set(G.degrees) == {4}
    H = cycle(5)
    assert lexicographic(complete(1), H).edges == H.edges
    P = blowup(path(3), 2)
    assert (P.order, P.size) == (6, 8)


def test_lexicographic_tags_and_index():
    G = blowup(path(3), 2)
    # v_i^j sits at (j-1)n + (i-1)
    assert G.tags[product_index(2, 1, 2)] == ("v", 2, "x", 1)
    assert G.index_of(("v", 3, "x", 2)) == 5


def test_lexicographic_with_edges_in_h():
    G = lexicographic(complete(2), complete(2))
    assert G.edges == complete(4).edges


def test_parse_p3():
    G = parse_graph("3 2\n0 1\n1 2\n")
    assert G.edges == path(3).edges


def test_serialize_c3():
    assert serialize_graph(cycle(3)) == "3 3\n0 1\n0 2\n1 2\n"


@pytest.mark.parametrize("text,line", [
    ("2 1\n0 0\n", 2),
    ("3 2\n0 1\n0 1\n", 3),
    ("3 1\n0 5\n", 2),
    ("3 1\n0 x\n", 2),
    ("x y\n", 1),
])
def test_parse_errors_have_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.lineno == line


def test_parse_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_graph("3 3\n0 1\n1 2\n")


def test_parse_comments_and_tags_roundtrip():
    G = friendship(2)
    text = serialize_graph(G, with_tags=True)
    H = parse_graph("# a comment\n" + text)
    assert H.edges == G.edges
    assert H.tags == G.tags


def test_round_trip_all_families():
    for name, (ctor, arity) in FAMILIES.items():
        args = (3,) * arity if name != "path" else (4,)
        G = ctor(*args)
        assert parse_graph(serialize_graph(G)).edges == G.edges


@pytest.mark.parametrize("name,params", [
    ("path", (5,)), ("cycle", (7,)), ("complete", (6,)), ("empty", (3,)), ("star", (4,)),
    ("bistar", (2, 5)), ("friendship", (4,)), ("wheel", (6,)), ("fan", (5,)),
    ("bipartite", (3, 4)), ("matching", (3,)),
])
def test_family_formula_tables(name, params):
    ctor, _ = FAMILIES[name]
    G = ctor(*params)
    assert G.order == order_formula(name, *params)
    assert G.size == edge_count_formula(name, *params)


def test_bipartition_stored_and_bfs():
    assert complete_bipartite(2, 3).bipartition() == ((0, 1), (2, 3, 4))
    assert cycle(5).bipartition() is None
    assert star(3).bipartition() is not None


def test_parts_must_be_independent():
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 2)), parts=((0, 1), (2,)))


def test_distributivity_by_tags():
    for G in (path(4), cycle(5), matching(2)):
        for n in (2, 3):
            lhs = blowup(join(G, center()), n)
            rhs = join(blowup(G, n), blowup(center(), n))
            assert same_by_tags(lhs, rhs)


def test_fan_and_wheel():
    assert fan(4).degree(4) == 4 and fan(4).size == 7
    assert wheel(5).size == 10


def test_matching_and_helpers():
    M = matching(3)
    assert M.size == 3 and set(M.degrees) == {1}
    U = disjoint_union(star(2), star(2))
    assert (U.order, U.size) == (6, 4)
    S = subdivision(complete(4))
    assert (S.order, S.size) == (10, 12)
    assert sorted(set(S.degrees)) == [2, 3]


def test_is_tree():
    assert path(5).is_tree() and star(4).is_tree() and bistar(2, 3).is_tree()
    assert not cycle(4).is_tree()

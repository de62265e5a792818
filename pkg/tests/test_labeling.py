from __future__ import annotations

import json

import pytest

from ldal.graph import bistar, complete, complete_bipartite, cycle, empty, path, star
from ldal.labeling import (IsolatedVertexError, LabelingError, certify, clique_lower_bound,
                           handshake_sum, is_ldal, load_certificate, parse_labeling,
                           serialize_labeling, symdiff_pairs, symdiff_rule,
                           tree_leaf_lower_bound, weigh)


def test_weigh_p3():
    prof = weigh(path(3), (1, 2, 3))
    assert prof.weights == (2, 4, 2)
    assert prof.conflicts == ()


def test_weigh_k2():
    assert weigh(complete(2), (1, 2)).weights == (2, 1)


def test_weigh_c4_two_colours():
    prof = weigh(cycle(4), (1, 2, 3, 4))
    assert prof.weights == (6, 4, 6, 4)
    assert prof.valid and prof.distinct_count == 2


def test_is_ldal_examples():
    assert is_ldal(cycle(4), (1, 2, 3, 4)) == (True, 2)
    assert is_ldal(complete(2), (1, 2)) == (True, 2)
    # endpoints tie but are not adjacent
    assert weigh(path(3), (2, 1, 3)).weights == (1, 5, 1)
    assert is_ldal(path(3), (2, 1, 3)) == (True, 2)


def test_invalid_labeling_keeps_full_profile():
    prof = weigh(path(3), (1, 3, 2))
    assert prof.weights == (3, 3, 3)
    assert prof.conflicts == ((0, 1), (1, 2))
    assert not prof.valid and prof.distinct_count == 1


@pytest.mark.parametrize("labels", [(1, 1), (0, 1), (1, 2, 3), (2, 3)])
def test_non_bijection_rejected(labels):
    with pytest.raises(LabelingError):
        weigh(complete(2), labels)


def test_isolated_vertices_rejected():
    with pytest.raises(IsolatedVertexError):
        is_ldal(empty(2), (1, 2))
    assert is_ldal(empty(2), (1, 2), allow_isolated=True) == (True, 1)  # no edges, nothing to separate


def test_symdiff_examples():
    P4 = path(4)
    assert symdiff_rule(P4, 1, 3)
    assert not symdiff_rule(path(3), 0, 2)
    assert not symdiff_rule(cycle(4), 0, 2)
    with pytest.raises(ValueError):
        symdiff_rule(P4, 1, 1)


def test_symdiff_pairs_p4():
    assert (1, 3) in symdiff_pairs(path(4))
    assert (0, 2) in symdiff_pairs(path(4))


def test_tree_leaf_bound():
    assert tree_leaf_lower_bound(star(4)) == 2
    assert tree_leaf_lower_bound(bistar(2, 2)) == 3
    assert tree_leaf_lower_bound(path(4)) == 3
    with pytest.raises(ValueError):
        tree_leaf_lower_bound(cycle(4))


def test_clique_bound():
    assert clique_lower_bound(complete(5)) == 5
    assert clique_lower_bound(cycle(5)) == 2
    assert clique_lower_bound(complete_bipartite(3, 4)) == 2


def test_handshake_example():
    G = path(4)
    labels = (4, 1, 3, 2)
    assert sum(weigh(G, labels).weights) == handshake_sum(G, labels)


def test_labeling_file_roundtrip():
    text = serialize_labeling((3, 1, 2))
    assert text == "0 3\n1 1\n2 2\n"
    assert parse_labeling("# c\n" + text, 3) == (3, 1, 2)


@pytest.mark.parametrize("text", ["0 1\n0 2\n", "0\n", "0 1\n5 2\n", "0 1 2\n"])
def test_labeling_file_errors(text):
    with pytest.raises(LabelingError):
        parse_labeling(text, 2)


def test_certificate_json_key_order_and_reload():
    cert = certify(cycle(4), (1, 2, 3, 4), "hand")
    data = json.loads(cert.to_json())
    assert list(data)[:6] == ["graph", "labeling", "weights", "valid", "colors", "provenance"]
    again = load_certificate(cert.to_json())
    assert again.weights == cert.weights and again.colors == 2


def test_tampered_certificate_rejected():
    data = json.loads(certify(cycle(4), (1, 2, 3, 4)).to_json())
    data["weights"][0] += 1
    with pytest.raises(LabelingError):
        load_certificate(json.dumps(data))


def test_certificate_text():
    text = certify(path(3), (1, 3, 2)).to_text()
    assert "verdict: INVALID" in text and "conflict 0 1" in text

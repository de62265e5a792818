from __future__ import annotations

import random

import pytest

from ldal.graph import (bistar, complete, complete_bipartite, complete_multipartite, cycle,
                        empty, fan, friendship, path, star, wheel)
from ldal.labeling import IsolatedVertexError
from ldal.oracle import (CapExceeded, OracleError, OracleResult, SearchBudget, chi_exact,
                         chi_ld_exact, find_labeling, lower_bound, min_colors_witness_check)


def test_oracle_examples():
    assert chi_ld_exact(cycle(4)).value == 2
    assert chi_ld_exact(path(5)).value == 3
    assert chi_ld_exact(cycle(5)).value == 5
    assert chi_ld_exact(cycle(7)).value == 5
    assert chi_ld_exact(complete(5)).value == 5


def test_chi_exact_examples():
    assert chi_exact(cycle(5)) == 3
    assert chi_exact(complete_bipartite(3, 3)) == 2
    assert chi_exact(wheel(4)) == 3
    assert chi_exact(complete(6)) == 6
    assert chi_exact(empty(3)) == 1


def test_cap_and_isolated():
    with pytest.raises(CapExceeded):
        chi_ld_exact(cycle(11))
    with pytest.raises(IsolatedVertexError):
        chi_ld_exact(empty(3))


def test_witness_reverifies():
    rng = random.Random(3)
    graphs = [cycle(6), path(7), bistar(2, 3), friendship(2), fan(4), star(5), wheel(5)]
    for G in rng.sample(graphs, 3):
        res = chi_ld_exact(G)
        assert res.exact and min_colors_witness_check(res, G)


def test_witness_check_catches_mismatch():
    G = cycle(4)
    res = chi_ld_exact(G)
    bad = OracleResult(res.lower, res.upper + 1, res.witness, "exact")
    with pytest.raises(OracleError):
        min_colors_witness_check(bad, G)


def test_known_values():
    assert chi_ld_exact(bistar(2, 2)).value == 4
    assert chi_ld_exact(friendship(2)).value == 5
    assert chi_ld_exact(star(4)).value == 2
    assert chi_ld_exact(complete_multipartite([1, 2, 2])).value == 3


def test_lower_bound_respects_symdiff():
    # P4: pairs (0,2), (1,3) and (0,3) all qualify, so every pair is separated
    assert lower_bound(path(4)) == 4 == chi_ld_exact(path(4)).value
    assert lower_bound(path(4), use_symdiff=False) == 3  # tree leaf bound


def test_budget_exhaustion_brackets():
    res = chi_ld_exact(cycle(7), SearchBudget(max_nodes=1), use_symmetry=False)
    assert res.status == "budget" and not res.exact
    assert res.lower <= 5 <= res.upper
    assert min_colors_witness_check(res, cycle(7))
    assert "budget" in res.describe()


def test_time_limit_bracket_or_exact():
    res = chi_ld_exact(path(10), SearchBudget(time_limit=0.0))
    assert res.status in ("exact", "budget")
    if res.exact:
        assert res.value == 4


def test_find_labeling():
    labels = find_labeling(cycle(6), 4)
    assert labels is not None
    assert find_labeling(cycle(5), 4) is None


def test_threads_match_sequential():
    for G in (path(6), cycle(7), bistar(2, 3)):
        a = chi_ld_exact(G, SearchBudget(threads=1))
        b = chi_ld_exact(G, SearchBudget(threads=2))
        assert a.value == b.value

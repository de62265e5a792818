"""Acceptance criteria, one check per criterion.

Each check returns (ok, detail).  Under pytest every check is a test and the
terminal summary prints one PASS/FAIL line per criterion (see conftest.py);
``python tests/test_acceptance.py`` prints the same lines directly.
"""

from __future__ import annotations

import random
import time

from ldal.construct import (complete_bipartite_weights, complete_lexi_weight,
                            label_biregular_bipartite_lexi, label_complete_lexi,
                            label_friendship_join_empty, label_join,
                            label_lexi_lift, label_regular_bipartite_lexi, lift_weight,
                            nested_neighborhood_bound, regular_bipartite_weights)
from ldal.construct.grid import run_grid
from ldal.construct.joins import join_weights
from ldal.graph import (blowup, complete, complete_bipartite, complete_multipartite, cycle,
                        empty, fan, friendship, join, matching, path, star)
from ldal.labeling import certify, handshake_sum, symdiff_pairs, weigh
from ldal.oracle import SearchBudget, chi_ld_exact
from ldal.rectangles import b_column_sum, c_column_sum, matrix_a, matrix_b, matrix_c

RESULTS: dict[str, tuple[bool, str]] = {}

CYCLES = {3: 3, 4: 2, 5: 5, 6: 4, 7: 5, 8: 4, 9: 5, 10: 4}
PATHS = {2: 2, 3: 2, 4: 4, 5: 3, 6: 4, 7: 4, 8: 4, 9: 4, 10: 4}
# rows beyond desk scale: exact value or an allowed range
CYCLES_EXT = {11: (4, 5), 12: (3, 3), 13: (4, 5), 14: (4, 4)}
PATHS_EXT = {11: (3, 3), 12: (4, 5), 13: (4, 6), 14: (4, 5)}


def _record(key, ok, detail):
    RESULTS[key] = (ok, detail)
    return ok, detail


def check_rectangles():
    start = time.perf_counter()
    bad = []
    for n in range(2, 21, 2):
        for m in range(1, 21):
            A = matrix_a(n, m)
            if not A.is_bijective() or set(A.column_sums()) != {n * (n * m + 1) // 2}:
                bad.append(("A", n, m))
    for n in range(3, 20, 2):
        for m in range(1, 21):
            B, C = matrix_b(n, m), matrix_c(n, m)
            if set(B.column_sums()) != {m * n * n - 4 * m + 2} or b_column_sum(n, m) != m * n * n - 4 * m + 2:
                bad.append(("B", n, m))
            if set(C.column_sums()) != {m * n * n + 4 * m + n - 2} or c_column_sum(n, m) != m * n * n + 4 * m + n - 2:
                bad.append(("C", n, m))
            if sorted(B.values() + C.values()) != list(range(1, 2 * n * m + 1)):
                bad.append(("BC", n, m))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    return _record("1 rectangles", ok, f"{len(bad)} bad arrays, {elapsed:.3f}s (limit 1s)")


def _table_rows(table, family, budget):
    bad, brackets = [], []
    for n, want in table.items():
        res = chi_ld_exact(family(n), budget)
        lo, hi = want if isinstance(want, tuple) else (want, want)
        if res.exact:
            if not lo <= res.value <= hi:
                bad.append((family(n).name, res.value, want))
        elif res.status == "budget":
            up = res.upper if res.upper is not None else float("inf")
            if res.lower > hi or up < lo:
                bad.append((family(n).name, (res.lower, res.upper), want))
            brackets.append(f"{family(n).name} in [{res.lower},{res.upper}]")
        else:
            bad.append((family(n).name, res.status, want))
    return bad, brackets


def check_oracle_tables():
    budget = SearchBudget(max_order=10)
    bad, _ = _table_rows(CYCLES, cycle, budget)
    bad += _table_rows(PATHS, path, budget)[0]
    for n in range(2, 8):
        if chi_ld_exact(complete(n)).value != n:
            bad.append((f"K{n}", None, n))
    for sizes in ([1, 2, 2], [2, 2, 2], [1, 1, 3], [2, 2, 3]):
        G = complete_multipartite(sizes)
        if chi_ld_exact(G).value != 3:
            bad.append((G.name, None, 3))
    ext = SearchBudget(max_order=14, time_limit=60.0)
    bad_c, br_c = _table_rows(CYCLES_EXT, cycle, ext)
    bad_p, br_p = _table_rows(PATHS_EXT, path, ext)
    bad += bad_c + bad_p
    brackets = br_c + br_p
    note = f"; brackets: {', '.join(brackets)}" if brackets else "; rows 11-14 exact"
    return _record("2 oracle tables", not bad, f"mismatches {bad}{note}")


def check_construction_sweep():
    rows, elapsed = run_grid(12, 6)
    fails = [r for r in rows if r.status == "FAIL"]
    passed = sum(r.status == "PASS" for r in rows)
    skipped = sum(r.status == "SKIP" for r in rows)
    ok = not fails and elapsed < 60.0
    detail = f"{passed} pass, {len(fails)} fail, {skipped} outside hypotheses, {elapsed:.2f}s"
    if fails:
        detail += f"; first: {fails[0].name}: {fails[0].detail}"
    return _record("3 construction sweep", ok, detail)


def check_closed_forms():
    bad = []
    # join
    for G, f, H, g in [(complete(2), (1, 2), empty(2), (1, 2)),
                       (friendship(2), (1, 2, 3, 4, 5), empty(6), tuple(range(1, 7))),
                       (cycle(4), (1, 2, 3, 4), complete_bipartite(3, 3), (1, 4, 2, 3, 5, 6))]:
        cert = label_join(G, f, H, g)
        if list(cert.weights) != join_weights(G, f, H, g):
            bad.append(("join", G.name, H.name))
    # lexi lift
    for G, f in [(complete(2), (1, 2)), (star(3), (1, 2, 3, 4)), (cycle(4), (1, 2, 3, 4))]:
        wf = certify(G, f).weights
        for n in range(2, 7):
            cert = label_lexi_lift(G, f, n)
            want = [lift_weight(n, G.degree(j), wf[j]) for j in range(G.order) for _ in range(n)]
            if list(cert.weights) != want:
                bad.append(("lift", G.name, n))
    # regular bipartite
    for G in [cycle(4), cycle(6), cycle(8), complete_bipartite(3, 3), matching(4)]:
        us, _ = G.bipartition()
        s, r = len(us), G.degree(0)
        for n in range(2, 7):
            cert = label_regular_bipartite_lexi(G, n)
            wu, wv = regular_bipartite_weights(n, s, r)
            want = [wu if j in us else wv for j in range(G.order) for _ in range(n)]
            if list(cert.weights) != want:
                bad.append(("regular-bipartite", G.name, n))
    # K_{a,b}
    for a in range(1, 6):
        for b in range(a + 1, 7):
            for n in range(2, 7):
                cert = label_biregular_bipartite_lexi(complete_bipartite(a, b), n)
                wa, wb = complete_bipartite_weights(a, b, n)
                if list(cert.weights) != [wa] * (a * n) + [wb] * (b * n):
                    bad.append(("K_ab", a, b, n))
    # K_m[H]
    for H, f in [(empty(3), (1, 2, 3)), (cycle(4), (1, 2, 3, 4)), (matching(2), (1, 2, 3, 4)),
                 (cycle(5), (1, 2, 3, 4, 5))]:
        if not certify(H, f).valid:
            f = chi_ld_exact(H).witness
        wf = certify(H, f).weights
        n, r = H.order, H.degree(0)
        for m in range(2, 7):
            cert = label_complete_lexi(m, H, f)
            want = [complete_lexi_weight(m, n, r, wf[i], j) for j in range(1, m + 1) for i in range(n)]
            if list(cert.weights) != want:
                bad.append(("K_m[H]", m, H.name))
    return _record("4 closed forms", not bad, f"{len(bad)} disagreements {bad[:3]}")


def check_nested_bounds():
    b_p4 = nested_neighborhood_bound(path(4), 2)
    v_p4 = chi_ld_exact(blowup(path(4), 2)).value
    b_fan = nested_neighborhood_bound(fan(4), 2)
    res = chi_ld_exact(blowup(fan(4), 2), SearchBudget(max_order=10, time_limit=120.0))
    if res.exact:
        fan_ok = b_fan == 4 and 4 <= res.value <= 5
        fan_txt = f"chi_ld(T4[E2]) = {res.value}"
    else:
        fan_ok = b_fan == 4 and res.lower <= 5 and (res.upper is None or res.upper >= 4)
        fan_txt = f"chi_ld(T4[E2]) in [{res.lower},{res.upper}] (budget)"
    ok = b_p4 == 3 and v_p4 in (3, 4) and fan_ok
    return _record("5 nested bounds", ok,
                   f"bound(P4)={b_p4}, chi_ld(P4[E2])={v_p4}; bound(T4)={b_fan}, {fan_txt}")


def check_join_values():
    v1 = chi_ld_exact(join(friendship(2), empty(2))).value
    c1 = label_friendship_join_empty(2, 2).colors
    v2 = chi_ld_exact(join(complete(2), empty(2))).value
    ok = v1 == 6 == c1 and v2 == 3
    return _record("6 join values", ok, f"chi_ld(F2+E2)={v1}, construction {c1}; chi_ld(K2+E2)={v2}")


def _family_graphs(max_order):
    from test_properties import family_graphs
    return family_graphs(max_order)


def check_properties():
    rng = random.Random(20261016)
    graphs = _family_graphs(12)
    hs_bad = 0
    for _ in range(1000):
        G = rng.choice(graphs)
        labels = list(range(1, G.order + 1))
        rng.shuffle(labels)
        if sum(weigh(G, labels).weights) != handshake_sum(G, labels):
            hs_bad += 1
    certs = 0
    prop_bad = 0
    from ldal.construct.grid import construction_grid
    for _, thunk, _ in construction_grid(12, 6):
        try:
            cert = thunk()
        except Exception:
            continue
        if not cert.valid:
            continue
        certs += 1
        w = cert.weights
        prop_bad += sum(w[u] == w[v] for u, v in symdiff_pairs(cert.graph))
    prune_bad = []
    small = _family_graphs(7)
    for G in small:
        a = chi_ld_exact(G, use_symdiff=False, use_symmetry=False)
        b = chi_ld_exact(G)
        if a.value != b.value:
            prune_bad.append(G.name)
    ok = hs_bad == 0 and prop_bad == 0 and not prune_bad and certs > 0
    return _record("7 properties", ok,
                   f"handshake 1000 pairs, {hs_bad} bad; symdiff rule on {certs} certificates, "
                   f"{prop_bad} ties; pruning on/off on {len(small)} graphs, {len(prune_bad)} differ")


CHECKS = [check_rectangles, check_oracle_tables, check_construction_sweep, check_closed_forms,
          check_nested_bounds, check_join_values, check_properties]


def test_criterion_1_rectangles():
    ok, detail = check_rectangles()
    assert ok, detail


def test_criterion_2_oracle_tables():
    ok, detail = check_oracle_tables()
    assert ok, detail


def test_criterion_3_construction_sweep():
    ok, detail = check_construction_sweep()
    assert ok, detail


def test_criterion_4_closed_forms():
    ok, detail = check_closed_forms()
    assert ok, detail


def test_criterion_5_nested_bounds():
    ok, detail = check_nested_bounds()
    assert ok, detail


def test_criterion_6_join_values():
    ok, detail = check_join_values()
    assert ok, detail


def test_criterion_7_properties():
    ok, detail = check_properties()
    assert ok, detail


def format_results() -> list[str]:
    return [f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}"
            for key, (ok, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":
    import sys
    from pathlib import Path
    sys.path.insert(0, str(Path(__file__).parent))
    for check in CHECKS:
        try:
            check()
        except Exception as exc:  # report and keep going
            RESULTS[check.__name__] = (False, f"{type(exc).__name__}: {exc}")
    for line in format_results():
        print(line)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)

"""Parameter grids for every labeler, with the colour count each one promises.

A grid entry is (name, thunk, claim) where claim is ("exact", k) or
("at_most", k).  run_grid calls every thunk and compares the certificate
against the claim; HypothesisError from a thunk means the cell sits outside
the labeler's hypothesis and is reported as skipped, never as a pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from ..graph import (complete, complete_bipartite, complete_multipartite, cycle, disjoint_union,
                     empty, matching, path, star, subdivision)
from ..labeling import Certificate
from ..oracle import chi_ld_exact
from .base import HypothesisError, NotCovered
from .joins import (label_bistar, label_clique_plus_empty, label_friendship,
                    label_friendship_join_bistar, label_friendship_join_empty, label_multipartite)
from .products import (label_biregular_bipartite_lexi, label_complete_lexi, label_cycle_lexi,
                       label_lexi_join_plus_one, label_lexi_lift, label_path_lexi,
                       label_regular_bipartite_lexi, label_2r_regular_3chromatic_lexi,
                       path_lexi_colors)

Claim = tuple[str, int]


@dataclass
class GridRow:
    name: str
    claim: Claim
    status: str  # "PASS" | "FAIL" | "SKIP"
    colors: int | None = None
    detail: str = ""


def _cube() -> "Graph":
    from ..graph import from_edges
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return from_edges(8, edges, "Q3")


def _regular_bipartite_bases(max_m: int):
    for m in range(4, max_m + 1, 2):
        yield cycle(m)
    for s in range(1, max_m // 2 + 1):
        yield complete_bipartite(s, s)
        if s >= 2:
            yield matching(s)
    if max_m >= 8:
        yield _cube()


def _biregular_bases(max_m: int):
    for a in range(1, max_m):
        for b in range(a + 1, max_m - a + 1):
            yield complete_bipartite(a, b)
    k2 = star(2)
    G = k2
    while G.order + 3 <= max_m:
        G = disjoint_union(G, k2)
        yield G
    if max_m >= 8:
        yield disjoint_union(star(3), star(3))
    if max_m >= 10:
        yield subdivision(complete(4))


def _three_class_bases(max_m: int):
    """(G, classes) with every vertex seeing r vertices in each other class."""
    for m in range(3, max_m + 1, 3):
        yield cycle(m), [list(range(r, m, 3)) for r in range(3)]
    for s in range(1, max_m // 3 + 1):
        G = complete_multipartite([s, s, s])
        yield G, [list(p) for p in G.parts]


def construction_grid(max_m: int = 12, max_n: int = 6) -> Iterator[tuple[str, Callable[[], Certificate], Claim]]:
    ns = range(2, max_n + 1)
    for n in ns:
        for G in _regular_bipartite_bases(max_m):
            yield (f"regular-bipartite {G.name}[E{n}]",
                   lambda G=G, n=n: label_regular_bipartite_lexi(G, n), ("exact", 2))
        for G in _biregular_bases(max_m):
            yield (f"biregular-bipartite {G.name}[E{n}]",
                   lambda G=G, n=n: label_biregular_bipartite_lexi(G, n), ("exact", 2))
        for m in range(3, max_m + 1):
            yield (f"path-lexi P{m}[E{n}]", lambda m=m, n=n: label_path_lexi(m, n),
                   ("exact", path_lexi_colors(m, n)))
            yield (f"cycle-lexi C{m}[E{n}]", lambda m=m, n=n: label_cycle_lexi(m, n),
                   ("exact", 2 if m % 2 == 0 else 3))
        for G, classes in _three_class_bases(max_m):
            yield (f"3-chromatic {G.name}[E{n}]",
                   lambda G=G, c=classes, n=n: label_2r_regular_3chromatic_lexi(G, c, n),
                   ("exact", 3))
        for m in range(4, max_m + 1, 2):
            yield (f"wheel W{m}[E{n}]", lambda m=m, n=n: label_lexi_join_plus_one(cycle(m), n),
                   ("exact", 3))
        for m in range(2, max_m + 1):
            yield (f"friendship F{m}[E{n}]",
                   lambda m=m, n=n: label_lexi_join_plus_one(matching(m), n), ("exact", 3))
        for m in range(3, max_m + 1):
            yield (f"fan T{m}[E{n}]", lambda m=m, n=n: label_lexi_join_plus_one(path(m), n),
                   ("at_most", 5))
        for m in range(2, max_m + 1):
            yield (f"complete-lexi K{m}[E{n}]",
                   lambda m=m, n=n: label_complete_lexi(m, empty(n), range(1, n + 1)),
                   ("exact", m))
        yield (f"complete-lexi K3[C4] n={n}",
               lambda: label_complete_lexi(3, cycle(4), (1, 2, 3, 4)), ("at_most", 6))
        for G in (path(2), path(3), star(3), cycle(4), complete_bipartite(2, 3)):
            res = chi_ld_exact(G)
            yield (f"lexi-lift {G.name}[E{n}]",
                   lambda G=G, f=res.witness, n=n: label_lexi_lift(G, f, n),
                   ("at_most", res.value))
    for n in range(2, max_m + 1):
        for p in range(2, n + 1):
            yield (f"clique-plus-empty n={n} p={p}",
                   lambda n=n, p=p: label_clique_plus_empty(n, p), ("exact", p))
    for n in range(3, 9):
        for p in range(2, n):
            yield (f"multipartite n={n} p={p}", lambda n=n, p=p: label_multipartite(n, p),
                   ("exact", p))
    for n in ns:
        yield f"friendship F{n}", lambda n=n: label_friendship(n), ("exact", 2 * n + 1)
        yield f"bistar B{n},{n}", lambda n=n: label_bistar(n, n), ("exact", 4)
        for m in range(1, max_m + 1):
            yield (f"friendship-join-empty F{n}+E{m}",
                   lambda n=n, m=m: label_friendship_join_empty(n, m), ("exact", 2 * n + 2))
        yield (f"friendship-join-bistar F{n}+B{n},{n}",
               lambda n=n: label_friendship_join_bistar(n), ("exact", 2 * n + 5))


def check_claim(cert: Certificate, claim: Claim) -> bool:
    kind, k = claim
    if not cert.valid:
        return False
    return cert.colors == k if kind == "exact" else cert.colors <= k


def run_grid(max_m: int = 12, max_n: int = 6) -> tuple[list[GridRow], float]:
    start = time.monotonic()
    rows = []
    for name, thunk, claim in construction_grid(max_m, max_n):
        try:
            cert = thunk()
        except (NotCovered, HypothesisError) as exc:
            rows.append(GridRow(name, claim, "SKIP", detail=str(exc)))
            continue
        except Exception as exc:  # a labeler crash is a failure, not a skip
            rows.append(GridRow(name, claim, "FAIL", detail=f"{type(exc).__name__}: {exc}"))
            continue
        ok = check_claim(cert, claim)
        rows.append(GridRow(name, claim, "PASS" if ok else "FAIL", cert.colors,
                            cert.provenance))
    return rows, time.monotonic() - start

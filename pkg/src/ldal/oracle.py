"""Exact chi_ld (and chi) for small graphs by pruned exhaustive search.

The search is a decision procedure run for k = lower bound, lower bound + 1,
...: "is there a bijection whose weights are a proper colouring using at most
k distinct values?"  Labels are placed vertex by vertex; a vertex's weight is
final once all of its neighbours are labelled.  Pruning:

* adjacent finished vertices with equal weight;
* more than k distinct finished weights;
* forward check: once k weights are in use, every unfinished vertex must be
  able to reach one of them (range of attainable sums) that none of its
  finished conflict partners already holds.  Conflict partners are the
  neighbours plus, optionally, the vertex pairs whose neighbourhoods differ in
  one or two vertices (those never share a weight under any bijection).
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graph import Graph, cycle, path
from .labeling import (IsolatedVertexError, clique_lower_bound, symdiff_pairs,
                       tree_leaf_lower_bound, weigh)


class OracleError(RuntimeError):
    pass


class CapExceeded(OracleError):
    pass


class _OutOfBudget(Exception):
    pass


@dataclass
class SearchBudget:
    max_order: int = 10
    max_nodes: int | None = None
    time_limit: float | None = None
    threads: int = 1


@dataclass
class OracleResult:
    lower: int
    upper: int | None
    witness: tuple[int, ...] | None
    status: str  # "exact" | "budget" | "nonexistent"
    stats: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def describe(self) -> str:
        if self.status == "exact":
            return f"chi_ld = {self.lower}"
        if self.status == "nonexistent":
            return "no local distance antimagic labeling exists"
        up = "?" if self.upper is None else self.upper
        return f"{self.lower} <= chi_ld <= {up} (budget exhausted)"

    def to_dict(self) -> dict:
        return {"status": self.status, "lower": self.lower, "upper": self.upper,
                "value": self.value,
                "witness": list(self.witness) if self.witness else None,
                "stats": self.stats}


# --------------------------------------------------------------------------
# chromatic number

def _colorable(adj: list[set[int]], order: list[int], k: int) -> bool:
    color = {}

    def place(p: int) -> bool:
        if p == len(order):
            return True
        v = order[p]
        taken = {color[u] for u in adj[v] if u in color}
        # symmetry: a new colour is only ever the next unused index
        top = max(color.values(), default=-1)
        for c in range(min(k, top + 2)):
            if c not in taken:
                color[v] = c
                if place(p + 1):
                    return True
                del color[v]
        return False

    return place(0)


def _chromatic(order_n: int, edges) -> int:
    if order_n == 0:
        return 0
    adj = [set() for _ in range(order_n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if not any(adj):
        return 1
    # BFS-ish order from the highest degree vertex keeps the tree narrow
    order = []
    seen = set()
    for s in sorted(range(order_n), key=lambda v: -len(adj[v])):
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(adj[v], key=lambda x: -len(adj[x])):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    k = clique_lower_bound(Graph(order_n, tuple(edges)))
    while not _colorable(adj, order, k):
        k += 1
    return k


def chi_exact(G: Graph, cap: int = 40) -> int:
    """Exact chromatic number by backtracking."""
    if G.order > cap:
        raise CapExceeded(f"order {G.order} exceeds cap {cap}")
    return _chromatic(G.order, G.edges)


# --------------------------------------------------------------------------
# search context

def symmetry_hint(G: Graph) -> tuple[dict[int, int], list[tuple[int, int]]]:
    """Fixed labels and f(a) < f(b) constraints from a recognised family.

    Only exact copies of the family constructors qualify: the cycle 0-1-...-m-1
    (rotate label 1 onto vertex 0, then reflect so f(1) < f(m-1)) and the path
    0-...-m-1 (reverse so f(0) < f(m-1)).
    """
    m = G.order
    if m >= 3 and G.edges == cycle(m).edges:
        return {0: 1}, [(1, m - 1)]
    if m >= 2 and G.edges == path(m).edges:
        return {}, [(0, m - 1)]
    return {}, []


def _vertex_order(G: Graph, fixed: dict[int, int]) -> list[int]:
    """Greedy order: each step picks the vertex that completes the most
    neighbourhoods, then the one with most labelled neighbours, then highest
    degree.  Fixed vertices go first."""
    n = G.order
    adj = G.adjacency
    order = sorted(fixed)
    placed = set(order)
    missing = [len(adj[v]) - len(adj[v] & placed) for v in range(n)]
    while len(order) < n:
        best = None
        for v in range(n):
            if v in placed:
                continue
            completes = sum(1 for u in adj[v] if missing[u] == 1)
            key = (completes, len(adj[v] & placed), len(adj[v]), -v)
            if best is None or key > best[0]:
                best = (key, v)
        v = best[1]
        order.append(v)
        placed.add(v)
        for u in adj[v]:
            missing[u] -= 1
    return order


class _Ctx:
    def __init__(self, G: Graph, use_symdiff: bool, fixed, less):
        self.n = n = G.order
        self.adj = [sorted(a) for a in G.adjacency]
        self.deg = [len(a) for a in self.adj]
        partners = [set(a) for a in G.adjacency]
        if use_symdiff:
            for u, v in symdiff_pairs(G):
                partners[u].add(v)
                partners[v].add(u)
        self.partners = [sorted(p) for p in partners]
        self.fixed = dict(fixed)
        self.less = list(less)
        self.order = _vertex_order(G, self.fixed)
        pos = {v: p for p, v in enumerate(self.order)}
        self.pos = pos
        # vertices whose neighbourhood is complete once order[p] is labelled
        self.finish_at = [[] for _ in range(n)]
        for v in range(n):
            p = max(pos[u] for u in self.adj[v])
            self.finish_at[p].append(v)
        # ordering constraints checked when the later vertex is labelled
        self.check_at = [[] for _ in range(n)]
        for a, b in self.less:
            self.check_at[max(pos[a], pos[b])].append((a, b))


class _Search:
    def __init__(self, ctx: _Ctx, k: int, budget: SearchBudget, deadline: float | None):
        self.ctx = ctx
        self.k = k
        self.budget = budget
        self.deadline = deadline
        self.nodes = 0
        n = ctx.n
        self.label = [0] * n
        self.used = [False] * (n + 2)
        self.pw = [0] * n
        self.missing = list(ctx.deg)
        self.final = [None] * n
        self.wcount: dict[int, int] = {}
        self.witness = None

    def run(self, first_labels=None) -> bool:
        ctx = self.ctx
        v0 = ctx.order[0]
        if v0 in ctx.fixed:
            cands = [ctx.fixed[v0]]
        else:
            cands = first_labels if first_labels is not None else range(1, ctx.n + 1)
        for lab in cands:
            if self._try(0, v0, lab):
                return True
        return False

    def _try(self, p: int, v: int, lab: int) -> bool:
        ctx = self.ctx
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget
        label, pw, missing, final, wcount = self.label, self.pw, self.missing, self.final, self.wcount
        label[v] = lab
        self.used[lab] = True
        for u in ctx.adj[v]:
            pw[u] += lab
            missing[u] -= 1
        finished = []
        ok = True
        for a, b in ctx.check_at[p]:
            if label[a] > label[b]:
                ok = False
                break
        if ok:
            for u in ctx.finish_at[p]:
                w = pw[u]
                for x in ctx.adj[u]:
                    if final[x] == w:
                        ok = False
                        break
                if not ok:
                    break
                final[u] = w
                finished.append(u)
                wcount[w] = wcount.get(w, 0) + 1
            if ok and len(wcount) > self.k:
                ok = False
        if ok and p + 1 < ctx.n and not self._forward_ok():
            ok = False
        if ok:
            if p + 1 == ctx.n:
                self.witness = tuple(label)
                return True
            nv = ctx.order[p + 1]
            if nv in ctx.fixed:
                if not self.used[ctx.fixed[nv]] and self._try(p + 1, nv, ctx.fixed[nv]):
                    return True
            else:
                fixed_labels = ctx.fixed.values()
                for nl in range(1, ctx.n + 1):
                    if not self.used[nl] and nl not in fixed_labels:
                        if self._try(p + 1, nv, nl):
                            return True
        for u in finished:
            w = final[u]
            final[u] = None
            c = wcount[w] - 1
            if c:
                wcount[w] = c
            else:
                del wcount[w]
        for u in ctx.adj[v]:
            pw[u] -= lab
            missing[u] += 1
        self.used[lab] = False
        label[v] = 0
        return False

    def _forward_ok(self) -> bool:
        wcount = self.wcount
        full = len(wcount) >= self.k
        if not wcount:
            return True
        free = [x for x in range(1, self.ctx.n + 1) if not self.used[x]]
        prefix = [0]
        for x in free:
            prefix.append(prefix[-1] + x)
        total = prefix[-1]
        final = self.final
        blocked = False
        for u in range(self.ctx.n):
            if final[u] is not None:
                continue
            r = self.missing[u]
            lo = self.pw[u] + prefix[r]
            hi = self.pw[u] + total - prefix[len(free) - r]
            taken = {final[x] for x in self.ctx.partners[u]}
            if not any(lo <= w <= hi and w not in taken for w in wcount):
                if full:
                    return False
                blocked = True
        # a blocked vertex needs a fresh weight
        return not blocked or len(wcount) + 1 <= self.k


def _decide_worker(args):
    G, use_symdiff, fixed, less, k, budget, deadline, first = args
    ctx = _Ctx(G, use_symdiff, fixed, less)
    s = _Search(ctx, k, budget, deadline)
    try:
        found = s.run(first)
    except _OutOfBudget:
        return None, s.nodes
    return (s.witness if found else False), s.nodes


def lower_bound(G: Graph, use_symdiff: bool = True) -> int:
    """max of chi(G) (or chi of G plus the forced-distinct pairs), tree bound."""
    edges = list(G.edges)
    if use_symdiff:
        edges = sorted(set(edges) | set(symdiff_pairs(G)))
    lb = _chromatic(G.order, edges)
    if G.is_tree() and G.order >= 3:
        lb = max(lb, tree_leaf_lower_bound(G))
    return lb


def _sample_upper(G: Graph, tries: int, seed: int = 0):
    rng = random.Random(seed)
    best = None
    labels = list(range(1, G.order + 1))
    for _ in range(tries):
        rng.shuffle(labels)
        prof = weigh(G, labels)
        if prof.valid and (best is None or prof.distinct_count < best[0]):
            best = (prof.distinct_count, tuple(labels))
    return best


def chi_ld_exact(G: Graph, budget: SearchBudget | None = None, use_symdiff: bool = True,
                 use_symmetry: bool = True) -> OracleResult:
    """Minimum number of distinct weights over all local distance antimagic labelings."""
    budget = budget or SearchBudget()
    if G.order > budget.max_order:
        raise CapExceeded(f"order {G.order} exceeds oracle cap {budget.max_order}")
    if G.isolated_vertices():
        raise IsolatedVertexError(f"isolated vertices: {G.isolated_vertices()}")
    start = time.monotonic()
    deadline = start + budget.time_limit if budget.time_limit is not None else None
    fixed, less = symmetry_hint(G) if use_symmetry else ({}, [])
    lb = lower_bound(G, use_symdiff)
    stats = {"nodes": 0, "lower_bound": lb, "symdiff": use_symdiff,
             "symmetry": bool(fixed or less)}
    best = _sample_upper(G, 200)
    if best and best[0] == lb:
        stats["elapsed"] = round(time.monotonic() - start, 3)
        return OracleResult(lb, lb, best[1], "exact", stats)
    k = lb
    while k <= G.order:
        if best and best[0] <= k:
            stats["elapsed"] = round(time.monotonic() - start, 3)
            return OracleResult(k, k, best[1], "exact", stats)
        outcome = _decide(G, k, use_symdiff, fixed, less, budget, deadline, stats)
        if outcome is None:
            stats["elapsed"] = round(time.monotonic() - start, 3)
            return OracleResult(k, best[0] if best else None, best[1] if best else None,
                                "budget", stats)
        if outcome is not False:
            stats["elapsed"] = round(time.monotonic() - start, 3)
            return OracleResult(k, k, outcome, "exact", stats)
        k += 1
    stats["elapsed"] = round(time.monotonic() - start, 3)
    return OracleResult(G.order + 1, None, None, "nonexistent", stats)


def _decide(G, k, use_symdiff, fixed, less, budget, deadline, stats):
    """Witness tuple, False (proved infeasible) or None (budget exhausted)."""
    if budget.threads <= 1:
        res, nodes = _decide_worker((G, use_symdiff, fixed, less, k, budget, deadline, None))
        stats["nodes"] += nodes
        return res
    ctx = _Ctx(G, use_symdiff, fixed, less)
    v0 = ctx.order[0]
    if v0 in fixed:
        firsts = [None]
    else:
        firsts = [[lab] for lab in range(1, G.order + 1) if lab not in fixed.values()]
    jobs = [(G, use_symdiff, fixed, less, k, budget, deadline, f) for f in firsts]
    exhausted = False
    with ProcessPoolExecutor(max_workers=budget.threads) as pool:
        results = list(pool.map(_decide_worker, jobs))
    # merge in first-label order so the witness is deterministic
    for res, nodes in results:
        stats["nodes"] += nodes
    for res, _ in results:
        if res:
            return res
        if res is None:
            exhausted = True
    return None if exhausted else False


def find_labeling(G: Graph, k: int, budget: SearchBudget | None = None,
                  use_symdiff: bool = True) -> tuple[int, ...] | None:
    """Some valid labeling with at most k colours, or None if none exists."""
    budget = budget or SearchBudget(max_order=max(G.order, 10))
    fixed, less = symmetry_hint(G)
    stats = {"nodes": 0}
    res = _decide(G, k, use_symdiff, fixed, less, budget, None, stats)
    if res is None:
        raise OracleError("budget exhausted")
    return res or None


def min_colors_witness_check(result: OracleResult, G: Graph) -> bool:
    """The witness must be a valid labeling with exactly the reported upper value."""
    if result.status == "nonexistent":
        return result.witness is None
    if result.witness is None:
        return result.upper is None
    prof = weigh(G, result.witness)
    if not prof.valid or prof.distinct_count != result.upper:
        raise OracleError("oracle witness does not reproduce the reported colour count")
    return True

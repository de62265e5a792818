"""Labelings of lexicographic products G[K̄_n] and K_m[H].

Product vertex v_i^j (copy j of base vertex j, slot i, both 1-based) sits at
index (j-1)*n + (i-1).  Most constructions fill each copy's n slots with one
column of an n-row gadget, so a vertex's weight only depends on the column
sums of the blocks placed on its base neighbours.
"""

from __future__ import annotations

from typing import Callable, Sequence

from ..graph import Graph, blowup, center, complete, cycle, empty, join, lexicographic, path
from ..labeling import Certificate, certify
from ..oracle import CapExceeded, SearchBudget, chi_exact, chi_ld_exact
from ..rectangles import magic_rectangle, matrix_a, matrix_b, matrix_c
from .base import ConstructionError, HypothesisError, NotCovered, finish, transport
from .joins import label_join


def _fill(m: int, n: int, entry: Callable[[int, int], int]) -> list[int]:
    """Labels for G[K̄_n] with entry(copy j, slot i), both 1-based."""
    return [entry(j, i) for j in range(1, m + 1) for i in range(1, n + 1)]


def lift_weight(n: int, deg: int, wf: int) -> int:
    return n * (n + 1) // 2 * deg + (wf - deg) * n * n


def label_lexi_lift(G: Graph, f: Sequence[int], n: int) -> Certificate:
    """G[K̄_n] with g(v_i^j) = i + (f(v_j) - 1) n; at most as many colours as f."""
    if n <= 1:
        raise HypothesisError("lifting needs n > 1")
    cf = certify(G, f)
    if not cf.valid:
        raise HypothesisError("f is not local distance antimagic on G")
    lifted = [lift_weight(n, G.degree(v), cf.weights[v]) for v in range(G.order)]
    for u, v in G.edges:
        if lifted[u] == lifted[v]:
            raise HypothesisError(f"lifted weights tie on edge ({u}, {v}): {lifted[u]}")
    labels = _fill(G.order, n, lambda j, i: i + (cf.labeling[j - 1] - 1) * n)
    return finish(blowup(G, n), labels, f"lexi-lift({G.name or 'G'}, n={n})", at_most=cf.colors)


# --------------------------------------------------------------------------
# bipartite bases

def _degree_of(G: Graph, part: Sequence[int]) -> int | None:
    degs = {G.degree(v) for v in part}
    return degs.pop() if len(degs) == 1 else None


def label_regular_bipartite_lexi(G: Graph, n: int) -> Certificate:
    """r-regular bipartite G with parts u_1..u_s, v_1..v_s: two colours.

    n even: u-copies take columns of A (n x s), v-copies the same plus ns.
    n odd: u-copies take B, v-copies C (both n x s).
    """
    if n <= 1:
        raise HypothesisError("need n > 1")
    bip = G.bipartition()
    if bip is None or G.size == 0:
        raise HypothesisError("G must be bipartite with at least one edge")
    us, vs = bip
    if not G.is_regular():
        raise HypothesisError("G is not regular")
    if len(us) != len(vs):
        raise HypothesisError("parts must have equal size")
    s = len(us)
    col = {}
    for j, v in enumerate(us, 1):
        col[v] = ("u", j)
    for j, v in enumerate(vs, 1):
        col[v] = ("v", j)
    if n % 2 == 0:
        A = matrix_a(n, s)
        pick = lambda side, j, i: A.at(i, j) + (n * s if side == "v" else 0)
    else:
        B, C = matrix_b(n, s), matrix_c(n, s)
        pick = lambda side, j, i: (B if side == "u" else C).at(i, j)
    labels = _fill(G.order, n, lambda j, i: pick(*col[j - 1], i))
    return finish(blowup(G, n), labels, f"regular-bipartite({G.name or 'G'}, n={n})", exact=2)


def regular_bipartite_weights(n: int, s: int, r: int) -> tuple[int, int]:
    """(u-side weight, v-side weight)."""
    if n % 2 == 0:
        return (n * (n * s + 1) // 2 + n * n * s) * r, n * (n * s + 1) // 2 * r
    return (s * n * n + 4 * s + n - 2) * r, (s * n * n - 4 * s + 2) * r


def _is_complete_bipartite(G: Graph, us, vs) -> bool:
    return G.size == len(us) * len(vs)


def label_biregular_bipartite_lexi(G: Graph, n: int, route: str | None = None) -> Certificate:
    """Bipartite G, degree a on one part and b != a on the other: two colours.

    Routes: "complete" (K_{a,b} only, any n), "A" (n even), "magic" (n and
    |G| odd).  Default: "complete" for complete bipartite G, else by parity.
    """
    if n <= 1:
        raise HypothesisError("need n > 1")
    bip = G.bipartition()
    if bip is None or G.size == 0:
        raise HypothesisError("G must be bipartite with at least one edge")
    us, vs = bip
    a, b = _degree_of(G, us), _degree_of(G, vs)
    if a is None or b is None:
        raise HypothesisError("each part must have a single degree (G is not biregular)")
    if a == b:
        raise HypothesisError("G is regular; use the regular bipartite labeling")
    m, s, r = G.order, len(us), len(vs)
    if route is None:
        if _is_complete_bipartite(G, us, vs):
            route = "complete"
        elif n % 2 == 0:
            route = "A"
        elif m % 2 == 1:
            route = "magic"
        else:
            raise NotCovered("n odd and |G| even is only covered for complete bipartite G")
    col = {}
    for j, v in enumerate(us, 1):
        col[v] = ("u", j)
    for j, v in enumerate(vs, 1):
        col[v] = ("v", j)
    if route == "complete":
        if not _is_complete_bipartite(G, us, vs):
            raise HypothesisError("complete route needs G = K_{a,b}")

        def pick(side, j, i):
            return (i - 1) * s + j if side == "u" else s * n + (i - 1) * r + j
    elif route in ("A", "magic"):
        if route == "A":
            R = matrix_a(n, m)
        else:
            if n % 2 == 0 or m % 2 == 0:
                raise HypothesisError("magic route needs n and |G| odd")
            R = magic_rectangle(n, m)

        def pick(side, j, i):
            return R.at(i, j if side == "u" else s + j)
    else:
        raise HypothesisError(f"unknown route {route!r}")
    labels = _fill(m, n, lambda j, i: pick(*col[j - 1], i))
    return finish(blowup(G, n), labels,
                  f"biregular-bipartite({G.name or 'G'}, n={n}, route={route})", exact=2)


def complete_bipartite_weights(s: int, r: int, n: int) -> tuple[int, int]:
    """K_{s,r}[K̄_n] explicit route: (weight on the s-part, weight on the r-part)."""
    return r * n * (r * n + 1) // 2 + s * r * n * n, s * n * (s * n + 1) // 2


def _nested_pair(G: Graph) -> tuple[int, int] | None:
    bip = G.bipartition()
    if bip is None:
        return None
    for part in bip:
        for x in part:
            for y in part:
                if x != y and G.adjacency[x] < G.adjacency[y]:
                    return x, y
    return None


def nested_neighborhood_bound(G: Graph, n: int) -> int:
    """Lower bound on chi_ld(G[K̄_n]).

    3 if G is bipartite with same-part x, y and N(x) ⊊ N(y); 4 if G = G' + K_1
    for such a G'; otherwise chi(G), which equals chi(G[K̄_n]).
    """
    if _nested_pair(G) is not None:
        return 3
    full = [v for v in range(G.order) if G.degree(v) == G.order - 1]
    for hub in full:
        rest = [v for v in range(G.order) if v != hub]
        idx = {v: k for k, v in enumerate(rest)}
        sub = Graph(len(rest), tuple((idx[u], idx[v]) for u, v in G.edges
                                     if hub not in (u, v)))
        if sub.size and _nested_pair(sub) is not None:
            return 4
    return chi_exact(G)


# --------------------------------------------------------------------------
# paths

def path_lexi_colors(m: int, n: int) -> int:
    """Number of colours the path construction produces."""
    if m == 3:
        return 2
    if n % 2 == 0:
        return 3 if m % 2 else 4
    return 3 if m % 4 == 3 else 4


def label_path_lexi(m: int, n: int) -> Certificate:
    if m < 3 or n <= 1:
        raise HypothesisError("need m >= 3 and n > 1")
    if n % 2 == 0:
        if m % 2:
            k = (m - 1) // 2
            A, B = matrix_a(n, k + 1), matrix_a(n, k)
            entry = lambda j, i: A.at(i, (j + 1) // 2) if j % 2 else B.at(i, j // 2) + n * (k + 1)
            case = "n even, m odd"
        else:
            k = m // 2
            A = matrix_a(n, k)
            entry = lambda j, i: A.at(i, (j + 1) // 2) if j % 2 else A.at(i, j // 2) + n * k
            case = "n even, m even"
    elif m % 4 == 1:
        k = (m - 1) // 4
        M, B, C = magic_rectangle(n, 2 * k + 1), matrix_b(n, k), matrix_c(n, k)

        def entry(j, i):
            if j % 2:
                return M.at(i, (j + 1) // 2) + 2 * n * k
            # column (j+2)/4 for j = 2 (mod 4)
            return B.at(i, (j + 2) // 4) if j % 4 == 2 else C.at(i, j // 4)
        case = "n odd, m = 1 (mod 4)"
    elif m % 4 == 3:
        k = (m - 3) // 4
        M, B, C = magic_rectangle(n, 2 * k + 1), matrix_b(n, k + 1), matrix_c(n, k + 1)

        def entry(j, i):
            if j % 2 == 0:
                return M.at(i, j // 2) + 2 * n * (k + 1)
            return B.at(i, (j + 3) // 4) if j % 4 == 1 else C.at(i, (j + 1) // 4)
        case = "n odd, m = 3 (mod 4)"
    else:
        k = m // 2
        B, C = matrix_b(n, k), matrix_c(n, k)
        entry = lambda j, i: B.at(i, (j + 1) // 2) if j % 2 else C.at(i, j // 2)
        case = "n odd, m even"
    labels = _fill(m, n, entry)
    return finish(blowup(path(m), n), labels, f"path-lexi(m={m}, n={n}; {case})",
                  exact=path_lexi_colors(m, n))


# --------------------------------------------------------------------------
# 3-chromatic 2r-regular bases and cycles

def _check_2r_partition(G: Graph, partition: Sequence[Sequence[int]]) -> int:
    if len(partition) != 3:
        raise HypothesisError("need exactly three colour classes")
    cls = {}
    for c, part in enumerate(partition):
        for v in part:
            cls[v] = c
    if sorted(cls) != list(range(G.order)):
        raise HypothesisError("classes must partition the vertex set")
    degs = set(G.degrees)
    if len(degs) != 1 or (d := degs.pop()) % 2 or d == 0:
        raise HypothesisError("G must be 2r-regular with r >= 1")
    r = d // 2
    for v in range(G.order):
        counts = [0, 0, 0]
        for u in G.adjacency[v]:
            counts[cls[u]] += 1
        if counts[cls[v]]:
            raise HypothesisError(f"vertex {v} has a neighbour in its own class")
        if sorted(counts) != [0, r, r]:
            raise HypothesisError(f"vertex {v} does not split its neighbourhood {r}/{r}: {counts}")
    return r


def label_2r_regular_3chromatic_lexi(G: Graph, partition: Sequence[Sequence[int]],
                                     n: int) -> Certificate:
    """Classes of sizes k, s, t take blocks at offsets 0, nk, n(k+s).

    Blocks are matrix A (n even) or magic rectangles (n odd, all sizes odd).
    """
    if n <= 1:
        raise HypothesisError("need n > 1")
    _check_2r_partition(G, partition)
    sizes = [len(p) for p in partition]
    if n % 2:
        bad = [sz for sz in sizes if sz % 2 == 0]
        if bad:
            raise HypothesisError(f"n odd needs odd class sizes, got {sizes}")
        blocks = [magic_rectangle(n, sz) for sz in sizes]
    else:
        blocks = [matrix_a(n, sz) for sz in sizes]
    offsets = [0, n * sizes[0], n * (sizes[0] + sizes[1])]
    where = {}
    for c, part in enumerate(partition):
        for col, v in enumerate(part, 1):
            where[v] = (c, col)

    def entry(j, i):
        c, col = where[j - 1]
        return blocks[c].at(i, col) + offsets[c]
    labels = _fill(G.order, n, entry)
    return finish(blowup(G, n), labels, f"2r-regular-3-chromatic({G.name or 'G'}, n={n})",
                  exact=3)


def three_class_weights(sizes: Sequence[int], n: int, r: int) -> list[int]:
    """Weight of each class: r times the shifted column sums of the other two."""
    offsets = [0, n * sizes[0], n * (sizes[0] + sizes[1])]
    colsum = [n * (n * sz + 1) // 2 + n * off for sz, off in zip(sizes, offsets)]
    return [r * sum(colsum[d] for d in range(3) if d != c) for c in range(3)]


def _odd_cycle_entry(m: int, n: int):
    """Block placement for odd m, m not divisible by 3 (m >= 5)."""
    if n % 2 == 0:
        if m % 6 == 1:
            A, B, C = matrix_a(n, (m + 2) // 3), matrix_a(n, (m - 1) // 3), matrix_a(n, (m - 1) // 3)
            offb, offc = n * (m + 2) // 3, n * (2 * m + 1) // 3
            case = "n even, m = 1 (mod 6)"
        elif m % 4 == 1:
            A, B, C = matrix_a(n, (m + 1) // 2), matrix_a(n, (m - 1) // 4), matrix_a(n, (m - 1) // 4)
            offb, offc = n * (m + 1) // 2, n * (3 * m + 1) // 4
            case = "n even, m = 5 (mod 6), m = 1 (mod 4)"
        else:
            A, B, C = matrix_a(n, (m - 1) // 2), matrix_a(n, (m + 1) // 4), matrix_a(n, (m + 1) // 4)
            offb, offc = n * (m - 1) // 2, n * (3 * m - 1) // 4
            case = "n even, m = 5 (mod 6), m = 3 (mod 4)"
    else:
        # B and C share one label range, so both take the same offset
        if m % 6 == 1:
            A = magic_rectangle(n, (m + 2) // 3)
            B, C = matrix_b(n, (m - 1) // 3), matrix_c(n, (m - 1) // 3)
            offb = offc = n * (m + 2) // 3
            case = "n odd, m = 1 (mod 6)"
        elif m % 4 == 1:
            A = magic_rectangle(n, (m + 1) // 2)
            B, C = matrix_b(n, (m - 1) // 4), matrix_c(n, (m - 1) // 4)
            offb = offc = n * (m + 1) // 2
            case = "n odd, m = 5 (mod 6), m = 1 (mod 4)"
        else:
            A = magic_rectangle(n, (m - 1) // 2)
            B, C = matrix_b(n, (m + 1) // 4), matrix_c(n, (m + 1) // 4)
            offb = offc = n * (m - 1) // 2
            case = "n odd, m = 5 (mod 6), m = 3 (mod 4)"

    if m % 6 == 1:
        def entry(j, i):
            # a-column (j+2)/3 for j = 1 (mod 3)
            if j % 3 == 1:
                return A.at(i, (j + 2) // 3)
            if j % 3 == 2:
                return B.at(i, (j + 1) // 3) + offb
            return C.at(i, j // 3) + offc
    elif m % 4 == 1:
        def entry(j, i):
            if j == m:
                return A.at(i, (m + 1) // 2)
            if j % 4 == 1:
                return B.at(i, (j + 3) // 4) + offb
            if j % 4 == 2:
                return C.at(i, (j + 2) // 4) + offc
            if j % 4 == 3:
                return A.at(i, (j + 1) // 4)
            return A.at(i, (m - 1) // 4 + j // 4)
    else:
        def entry(j, i):
            if j % 4 == 1:
                return B.at(i, (j + 3) // 4) + offb
            if j % 4 == 2:
                return C.at(i, (j + 2) // 4) + offc
            if j % 4 == 3:
                return A.at(i, (j + 1) // 4)
            return A.at(i, (m + 1) // 4 + j // 4)
    return entry, case


CYCLE_ROUTES = ("bipartite", "tripartition", "odd")


def cycle_route(m: int) -> str:
    if m % 2 == 0:
        return "bipartite"
    if m % 3 == 0:
        return "tripartition"
    return "odd"


def label_cycle_lexi(m: int, n: int, route: str | None = None,
                     oracle_cap: int = 10) -> Certificate:
    """C_m[K̄_n]: 2 colours for even m, 3 for odd m.

    Odd m with n = 2 and m not divisible by 3 lies outside the proven
    hypothesis (n >= 3); the block construction is still attempted and
    checked, with the oracle as fallback for small orders.
    """
    if m < 3 or n <= 1:
        raise HypothesisError("need m >= 3 and n > 1")
    route = route or cycle_route(m)
    G = cycle(m)
    if route == "bipartite":
        if m % 2:
            raise HypothesisError("bipartite route needs m even")
        cert = label_regular_bipartite_lexi(G, n)
        return _renamed(cert, f"cycle-lexi(m={m}, n={n}; bipartite)")
    if route == "tripartition":
        if m % 3:
            raise HypothesisError("tripartition route needs m divisible by 3")
        classes = [list(range(r, m, 3)) for r in range(3)]
        cert = label_2r_regular_3chromatic_lexi(G, classes, n)
        return _renamed(cert, f"cycle-lexi(m={m}, n={n}; tripartition)")
    if route != "odd":
        raise HypothesisError(f"unknown route {route!r}")
    if m % 2 == 0 or m % 3 == 0 or m < 5:
        raise HypothesisError("odd route needs odd m >= 5 not divisible by 3")
    entry, case = _odd_cycle_entry(m, n)
    prov = f"cycle-lexi(m={m}, n={n}; {case})"
    if n == 2:
        prov += " [n=2 outside hypothesis, verified]"
    labels = _fill(m, n, entry)
    try:
        return finish(blowup(G, n), labels, prov, exact=3)
    except ConstructionError:
        if n >= 3:
            raise
    B = blowup(G, n)
    if B.order > oracle_cap:
        raise NotCovered(f"C_{m}[K̄_{n}] not covered and order {B.order} exceeds oracle cap")
    res = chi_ld_exact(B, SearchBudget(max_order=oracle_cap))
    if not res.exact:
        raise NotCovered(f"oracle could not settle C_{m}[K̄_{n}]")
    return finish(B, res.witness, f"cycle-lexi(m={m}, n={n}; oracle)", exact=res.value)


def _renamed(cert: Certificate, provenance: str) -> Certificate:
    return Certificate(cert.graph, cert.labeling, cert.profile, provenance)


# --------------------------------------------------------------------------
# complete base, joins with K_1

def label_complete_lexi(m: int, H: Graph, f: Sequence[int]) -> Certificate:
    """K_m[H] for r-regular H: g(y_i^j) = f(y_i) + (j-1) n."""
    n = H.order
    if m < 1 or n <= 1:
        raise HypothesisError("need m >= 1 and |H| > 1")
    if not H.is_regular():
        raise HypothesisError("H must be regular")
    cf = certify(H, f)
    if not cf.valid:
        raise HypothesisError("f is not local distance antimagic on H")
    labels = [cf.labeling[i] + j * n for j in range(m) for i in range(n)]
    exact = m if H.size == 0 else None
    return finish(lexicographic(complete(m), H), labels,
                  f"complete-lexi(m={m}, H={H.name or 'H'})", exact=exact,
                  at_most=m * cf.colors)


def complete_lexi_weight(m: int, n: int, r: int, wf: int, j: int) -> int:
    return n * (m - 1) * (n * m + n + 1) // 2 + wf - (j - 1) * n * (n - r)


def _is_family(G: Graph, ctor) -> bool:
    try:
        return G.edges == ctor(G.order).edges
    except ValueError:
        return False


def label_blowup(G: Graph, n: int) -> Certificate:
    """Best available labeling of G[K̄_n] among the constructions above."""
    bip = G.bipartition()
    if bip is not None and G.size and G.is_regular() and len(bip[0]) == len(bip[1]):
        return label_regular_bipartite_lexi(G, n)
    if _is_family(G, cycle):
        return label_cycle_lexi(G.order, n)
    if _is_family(G, path) and G.order >= 3:
        return label_path_lexi(G.order, n)
    if bip is not None and G.size:
        try:
            return label_biregular_bipartite_lexi(G, n)
        except HypothesisError:
            pass
    if G.parts is not None and len(G.parts) == 3:
        try:
            return label_2r_regular_3chromatic_lexi(G, G.parts, n)
        except HypothesisError:
            pass
    if G.order <= 10:
        try:
            res = chi_ld_exact(G)
        except CapExceeded:
            res = None
        if res is not None and res.witness is not None:
            return label_lexi_lift(G, res.witness, n)
    raise NotCovered(f"no construction for {G.name or 'G'}[K̄_{n}]")


def label_lexi_join_plus_one(G: Graph, n: int, base: Certificate | None = None) -> Certificate:
    """(G + K_1)[K̄_n] = G[K̄_n] + K̄_n, labelled by the join construction with
    the K̄_n side taking 1..n; at most one colour more than ``base``."""
    if n <= 1:
        raise HypothesisError("need n > 1")
    hub = center()
    target = lexicographic(join(G, hub), empty(n))
    base = base or label_blowup(G, n)
    if base.graph.order != G.order * n:
        raise HypothesisError("base certificate does not match G[K̄_n]")
    side = lexicographic(hub, empty(n))
    prov = f"lexi-join-plus-one({G.name or 'G'}, n={n}) over {base.provenance}"
    try:
        cert = label_join(side, range(1, n + 1), base.graph, base.labeling, prov)
    except ConstructionError:
        # shifting the product labels by n adds n*deg(v) to each weight, which
        # can merge neighbours of different degree; giving the hub copies the
        # top labels shifts every product weight by the same constant instead
        top = base.graph.order
        labels = [top + i for i in range(1, n + 1)] + list(base.labeling)
        cert = finish(join(side, base.graph), labels, prov + " [hub copies on top labels]",
                      at_most=base.colors + 1)
    return transport(cert, target)

"""Simple undirected graphs, named families, join and lexicographic product.

Vertices are the integers ``0..order-1``.  Every vertex carries a tag, a flat
tuple of strings and ints describing its role in the construction that
produced it (``("v", 3)`` for the third cycle vertex, ``("v", 3, "x", 2)`` for
slot 2 of copy 3 in a product with an empty graph, and so on).  Tags compose:
the product tag of ``(g, h)`` is ``tag(g) + tag(h)`` and a join only prefixes
``"L"``/``"R"`` when the two sides would otherwise collide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Tag = tuple  # tuple[str | int, ...]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid family parameters."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[tuple[int, int], ...]
    tags: tuple[Tag, ...] = ()
    parts: tuple[tuple[int, ...], ...] | None = None
    name: str = ""
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise GraphError("order must be non-negative")
        seen = set()
        canon = []
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {self.order}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))
        if not self.tags:
            object.__setattr__(self, "tags", tuple(("v", i + 1) for i in range(self.order)))
        elif len(self.tags) != self.order:
            raise GraphError("one tag per vertex required")
        if len(set(self.tags)) != self.order:
            raise GraphError("vertex tags must be distinct")
        if self.parts is not None:
            flat = sorted(v for p in self.parts for v in p)
            if flat != list(range(self.order)):
                raise GraphError("parts must partition the vertex set")
            for p in self.parts:
                ps = set(p)
                if any(self.adjacency[v] & ps for v in p):
                    raise GraphError("parts must be independent sets")

    def __len__(self) -> int:
        return self.order

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.order) if not self.adjacency[v]]

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def index_of(self, tag: Tag) -> int:
        return self.tags.index(tuple(tag))

    def bipartition(self) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        """Stored 2-part partition if present, else a BFS 2-colouring (None if not bipartite)."""
        if self.parts is not None and len(self.parts) == 2:
            return self.parts[0], self.parts[1]
        color = [-1] * self.order
        for s in range(self.order):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return None
        a = tuple(v for v in range(self.order) if color[v] == 0)
        b = tuple(v for v in range(self.order) if color[v] == 1)
        return a, b

    def is_tree(self) -> bool:
        if self.order == 0 or self.size != self.order - 1:
            return False
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def relabeled(self, name: str) -> Graph:
        return Graph(self.order, self.edges, self.tags, self.parts, name)


def _graph(order, edges, tags=None, parts=None, name=""):
    return Graph(order, tuple(edges), tuple(tags) if tags else (), parts, name)


# --------------------------------------------------------------------------
# named families

def path(m: int) -> Graph:
    if m < 1:
        raise GraphError("path needs m >= 1")
    parts = (tuple(range(0, m, 2)), tuple(range(1, m, 2))) if m > 1 else None
    return _graph(m, [(i, i + 1) for i in range(m - 1)], parts=parts, name=f"P{m}")


def cycle(m: int) -> Graph:
    if m < 3:
        raise GraphError("cycle needs m >= 3")
    parts = None
    if m % 2 == 0:
        parts = (tuple(range(0, m, 2)), tuple(range(1, m, 2)))
    elif m % 3 == 0:
        parts = tuple(tuple(range(r, m, 3)) for r in range(3))
    return _graph(m, [(i, (i + 1) % m) for i in range(m)], parts=parts, name=f"C{m}")


def complete(m: int) -> Graph:
    if m < 1:
        raise GraphError("complete graph needs m >= 1")
    parts = tuple((i,) for i in range(m))
    return _graph(m, combinations(range(m), 2), parts=parts, name=f"K{m}")


def empty(m: int) -> Graph:
    """The edgeless graph on m vertices (complement of K_m); tags ("x", i)."""
    if m < 1:
        raise GraphError("empty graph needs m >= 1")
    return _graph(m, [], tags=[("x", i + 1) for i in range(m)], parts=(tuple(range(m)),),
                  name=f"E{m}")


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if len(sizes) < 1 or any(s < 1 for s in sizes):
        raise GraphError("complete multipartite needs positive part sizes")
    parts = []
    tags = []
    start = 0
    for p, s in enumerate(sizes):
        parts.append(tuple(range(start, start + s)))
        tags.extend(("p", p + 1, i + 1) for i in range(s))
        start += s
    edges = [(u, v) for a, b in combinations(parts, 2) for u in a for v in b]
    name = "K" + ",".join(map(str, sizes)) if len(sizes) > 1 else f"E{sizes[0]}"
    return _graph(start, edges, tags=tags, parts=tuple(parts), name=name)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def star(m: int) -> Graph:
    """K_{1,m}: center 0 with m leaves."""
    if m < 1:
        raise GraphError("star needs m >= 1")
    tags = [("c",)] + [("l", i + 1) for i in range(m)]
    return _graph(m + 1, [(0, i) for i in range(1, m + 1)], tags=tags,
                  parts=((0,), tuple(range(1, m + 1))), name=f"K1,{m}")


def bistar(m: int, n: int) -> Graph:
    """B_{m,n}: adjacent centers a=0, b=1; a carries m leaves, b carries n."""
    if m < 2 or n < 2:
        raise GraphError("bistar needs m, n >= 2")
    tags = [("a",), ("b",)] + [("x", i + 1) for i in range(m)] + [("y", i + 1) for i in range(n)]
    edges = [(0, 1)] + [(0, 2 + i) for i in range(m)] + [(1, 2 + m + i) for i in range(n)]
    parts = ((0,) + tuple(range(2 + m, 2 + m + n)), (1,) + tuple(range(2, 2 + m)))
    return _graph(m + n + 2, edges, tags=tags, parts=parts, name=f"B{m},{n}")


def friendship(n: int) -> Graph:
    """F_n: center 0, triangle i on (0, u_i, v_i) with u_i = 2i-1, v_i = 2i."""
    if n < 1:
        raise GraphError("friendship needs n >= 1")
    tags = [("c",)]
    edges = []
    for i in range(1, n + 1):
        u, v = 2 * i - 1, 2 * i
        tags += [("u", i), ("v", i)]
        edges += [(0, u), (0, v), (u, v)]
    parts = ((0,), tuple(range(1, 2 * n, 2)), tuple(range(2, 2 * n + 1, 2)))
    return _graph(2 * n + 1, edges, tags=tags, parts=parts, name=f"F{n}")


def matching(m: int) -> Graph:
    """m disjoint edges u_i v_i (u_i = 2i-2, v_i = 2i-1)."""
    if m < 1:
        raise GraphError("matching needs m >= 1")
    tags = [t for i in range(1, m + 1) for t in (("u", i), ("v", i))]
    parts = (tuple(range(0, 2 * m, 2)), tuple(range(1, 2 * m, 2)))
    return _graph(2 * m, [(2 * i, 2 * i + 1) for i in range(m)], tags=tags, parts=parts,
                  name=f"{m}K2")


def center() -> Graph:
    """K_1 tagged as a hub vertex, for wheels, fans and friendship graphs."""
    return _graph(1, [], tags=[("c",)], parts=((0,),), name="K1")


def wheel(m: int) -> Graph:
    if m < 3:
        raise GraphError("wheel needs m >= 3")
    return join(cycle(m), center()).relabeled(f"W{m}")


def fan(m: int) -> Graph:
    if m < 2:
        raise GraphError("fan needs m >= 2")
    return join(path(m), center()).relabeled(f"T{m}")


# --------------------------------------------------------------------------
# operators

def join(G: Graph, H: Graph) -> Graph:
    """G + H: disjoint union plus every edge between the two sides; G first."""
    if G.order == 0 or H.order == 0:
        raise GraphError("join of an empty vertex set")
    n = G.order
    edges = list(G.edges) + [(u + n, v + n) for u, v in H.edges]
    edges += [(u, n + v) for u in range(n) for v in range(H.order)]
    if set(G.tags) & set(H.tags):
        tags = [("L",) + t for t in G.tags] + [("R",) + t for t in H.tags]
    else:
        tags = list(G.tags) + list(H.tags)
    parts = None
    if G.parts is not None and H.parts is not None:
        parts = G.parts + tuple(tuple(v + n for v in p) for p in H.parts)
    return _graph(n + H.order, edges, tags=tags, parts=parts, name=f"({G.name}+{H.name})")


def lexicographic(G: Graph, H: Graph) -> Graph:
    """G[H]; vertex (copy j, slot i) of the product sits at index j*|H| + i (0-based)."""
    if G.order == 0 or H.order == 0:
        raise GraphError("lexicographic product of an empty vertex set")
    n = H.order
    edges = []
    for u, v in G.edges:
        for a in range(n):
            for b in range(n):
                edges.append((u * n + a, v * n + b))
    for j in range(G.order):
        edges += [(j * n + a, j * n + b) for a, b in H.edges]
    tags = [G.tags[j] + H.tags[i] for j in range(G.order) for i in range(n)]
    parts = None
    if G.parts is not None and H.size == 0:
        parts = tuple(tuple(j * n + i for j in p for i in range(n)) for p in G.parts)
    return _graph(G.order * n, edges, tags=tags, parts=parts, name=f"{G.name}[{H.name}]")


def disjoint_union(G: Graph, H: Graph) -> Graph:
    n = G.order
    edges = list(G.edges) + [(u + n, v + n) for u, v in H.edges]
    tags = [("L",) + t for t in G.tags] + [("R",) + t for t in H.tags]
    return _graph(n + H.order, edges, tags=tags, name=f"({G.name}|{H.name})")


def subdivision(G: Graph) -> Graph:
    """Every edge replaced by a path of length 2; new vertices come last."""
    n = G.order
    edges = []
    for k, (u, v) in enumerate(G.edges):
        edges += [(u, n + k), (v, n + k)]
    return _graph(n + G.size, edges, name=f"S({G.name})")


def blowup(G: Graph, n: int) -> Graph:
    """G[K̄_n]."""
    return lexicographic(G, empty(n))


def product_index(copy: int, slot: int, n: int) -> int:
    """Index of v_slot^copy (both 1-based) in G[K̄_n]."""
    return (copy - 1) * n + (slot - 1)


def same_by_tags(G: Graph, H: Graph) -> bool:
    """True when the tag-identity map is an isomorphism G -> H."""
    if G.order != H.order or set(G.tags) != set(H.tags):
        return False
    pos = {t: i for i, t in enumerate(H.tags)}
    perm = [pos[t] for t in G.tags]
    mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in G.edges}
    return mapped == set(H.edges)


# --------------------------------------------------------------------------
# family descriptors

FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "star": (star, 1),
    "bistar": (bistar, 2),
    "friendship": (friendship, 1),
    "wheel": (wheel, 1),
    "fan": (fan, 1),
    "bipartite": (complete_bipartite, 2),
    "matching": (matching, 1),
}


def gen_family(tokens: Sequence[str] | str) -> Graph:
    """Build a graph from a descriptor such as ``"cycle 6"``,
    ``"multipartite 1 2 2"``, ``"lexi cycle 5 empty 3"`` or
    ``"join friendship 2 empty 2"``."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    G, rest = _parse_family(list(tokens))
    if rest:
        raise GraphError(f"trailing tokens in family descriptor: {' '.join(rest)}")
    return G


def _parse_family(tokens: list[str]) -> tuple[Graph, list[str]]:
    if not tokens:
        raise GraphError("empty family descriptor")
    head, rest = tokens[0].lower(), tokens[1:]
    if head in ("join", "lexi"):
        G, rest = _parse_family(rest)
        H, rest = _parse_family(rest)
        return (join(G, H) if head == "join" else lexicographic(G, H)), rest
    if head == "multipartite":
        sizes = []
        while rest and rest[0].isdigit():
            sizes.append(int(rest.pop(0)))
        return complete_multipartite(sizes), rest
    if head not in FAMILIES:
        raise GraphError(f"unknown family {head!r}")
    ctor, arity = FAMILIES[head]
    if len(rest) < arity:
        raise GraphError(f"{head} needs {arity} integer parameter(s)")
    try:
        args = [int(t) for t in rest[:arity]]
    except ValueError:
        raise GraphError(f"{head}: parameters must be integers") from None
    return ctor(*args), rest[arity:]


# --------------------------------------------------------------------------
# edge-list text format

def serialize_graph(G: Graph, with_tags: bool = False) -> str:
    lines = [f"{G.order} {G.size}"]
    if with_tags:
        lines += ["# tag %d %s" % (v, " ".join(map(str, t))) for v, t in enumerate(G.tags)]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    tags: dict[int, Tag] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if fields[:1] == ["tag"] and len(fields) >= 3:
                tags[int(fields[1])] = tuple(int(f) if f.lstrip("-").isdigit() else f
                                             for f in fields[2:])
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(lineno, "negative order or edge count")
            header = (a, b)
            continue
        if a == b:
            raise ParseError(lineno, f"loop at vertex {a}")
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise ParseError(lineno, f"vertex index out of range for order {header[0]}")
        e = (min(a, b), max(a, b))
        if e in seen:
            raise ParseError(lineno, f"duplicate edge {e[0]} {e[1]}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise ParseError(1, "missing header line")
    if len(edges) != header[1]:
        raise ParseError(lineno if text else 1,
                         f"header declares {header[1]} edges, found {len(edges)}")
    tag_list = [tags[v] for v in range(header[0])] if len(tags) == header[0] else None
    return _graph(header[0], edges, tags=tag_list)


def edge_count_formula(family: str, *params: int) -> int:
    """Closed-form edge counts for the named families."""
    if family == "path":
        return params[0] - 1
    if family == "cycle":
        return params[0]
    if family == "complete":
        return params[0] * (params[0] - 1) // 2
    if family == "empty":
        return 0
    if family == "star":
        return params[0]
    if family == "bistar":
        return params[0] + params[1] + 1
    if family == "friendship":
        return 3 * params[0]
    if family == "wheel":
        return 2 * params[0]
    if family == "fan":
        return 2 * params[0] - 1
    if family == "bipartite":
        return params[0] * params[1]
    if family == "matching":
        return params[0]
    raise GraphError(f"no formula for {family!r}")


def order_formula(family: str, *params: int) -> int:
    table = {
        "path": lambda m: m, "cycle": lambda m: m, "complete": lambda m: m,
        "empty": lambda m: m, "star": lambda m: m + 1, "bistar": lambda a, b: a + b + 2,
        "friendship": lambda n: 2 * n + 1, "wheel": lambda m: m + 1, "fan": lambda m: m + 1,
        "bipartite": lambda a, b: a + b, "matching": lambda m: 2 * m,
    }
    return table[family](*params)


def from_edges(order: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    return _graph(order, list(edges), name=name)

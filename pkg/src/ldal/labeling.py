"""Vertex labelings, neighbourhood weights and the local distance antimagic test."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, parse_graph, serialize_graph


class LabelingError(ValueError):
    """The assignment is not a bijection onto 1..order."""


class IsolatedVertexError(GraphError):
    pass


@dataclass(frozen=True)
class WeightProfile:
    weights: tuple[int, ...]
    distinct_count: int
    conflicts: tuple[tuple[int, int], ...]

    @property
    def valid(self) -> bool:
        return not self.conflicts


def check_bijection(G: Graph, labels: Sequence[int]) -> tuple[int, ...]:
    labels = tuple(int(x) for x in labels)
    if len(labels) != G.order:
        raise LabelingError(f"expected {G.order} labels, got {len(labels)}")
    if sorted(labels) != list(range(1, G.order + 1)):
        raise LabelingError(f"labels are not a permutation of 1..{G.order}")
    return labels


def weigh(G: Graph, labels: Sequence[int]) -> WeightProfile:
    """w(v) = sum of labels over the open neighbourhood of v, for every v.

    The full profile is produced even when the labeling is invalid so that all
    conflicting edges can be reported.
    """
    f = check_bijection(G, labels)
    w = tuple(sum(f[x] for x in G.adjacency[v]) for v in range(G.order))
    conflicts = tuple((u, v) for u, v in G.edges if w[u] == w[v])
    return WeightProfile(w, len(set(w)), conflicts)


def is_ldal(G: Graph, labels: Sequence[int], allow_isolated: bool = False) -> tuple[bool, int]:
    """Return ``(valid, colour_count)``; the count is reported even when invalid."""
    if not allow_isolated and G.order > 1 and G.isolated_vertices():
        raise IsolatedVertexError(f"isolated vertices: {G.isolated_vertices()}")
    prof = weigh(G, labels)
    return prof.valid, prof.distinct_count


def symdiff_rule(G: Graph, u: int, v: int) -> bool:
    """|N(u) △ N(v)| in {1, 2}: any bijection then gives w(u) != w(v)."""
    if u == v:
        raise ValueError("symdiff_rule needs two distinct vertices")
    return len(G.adjacency[u] ^ G.adjacency[v]) in (1, 2)


def symdiff_pairs(G: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(G.order) for v in range(u + 1, G.order)
            if symdiff_rule(G, u, v)]


def tree_leaf_lower_bound(T: Graph) -> int:
    """t + 1 where t is the number of distinct support vertices of the tree."""
    if not T.is_tree():
        raise GraphError("not a tree")
    if T.order < 3:
        raise GraphError("tree bound needs order >= 3")
    supports = {next(iter(T.adjacency[v])) for v in range(T.order) if T.degree(v) == 1}
    return len(supports) + 1


def clique_lower_bound(G: Graph) -> int:
    """Size of a greedily grown clique; never exceeds the chromatic number."""
    if G.order == 0:
        return 0
    best = 1
    for start in sorted(range(G.order), key=lambda v: -G.degree(v)):
        clique = [start]
        cand = set(G.adjacency[start])
        while cand:
            v = max(sorted(cand), key=lambda x: len(G.adjacency[x] & cand))
            clique.append(v)
            cand &= G.adjacency[v]
        best = max(best, len(clique))
    return best


def handshake_sum(G: Graph, labels: Sequence[int]) -> int:
    """Σ deg(v)·f(v), which must equal Σ w(v) for every labeling."""
    return sum(G.degree(v) * labels[v] for v in range(G.order))


# --------------------------------------------------------------------------
# file formats

def parse_labeling(text: str, order: int | None = None) -> tuple[int, ...]:
    """Lines ``vertex label`` (0-based vertex, 1-based label); '#' comments."""
    pairs: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            v, lab = int(fields[0]), int(fields[1])
            if len(fields) != 2:
                raise ValueError
        except (ValueError, IndexError):
            raise LabelingError(f"line {lineno}: expected 'vertex label', got {line!r}") from None
        if v < 0 or (order is not None and v >= order):
            raise LabelingError(f"line {lineno}: vertex {v} out of range")
        if v in pairs:
            raise LabelingError(f"line {lineno}: vertex {v} labelled twice")
        pairs[v] = lab
    n = order if order is not None else len(pairs)
    missing = [v for v in range(n) if v not in pairs]
    if missing:
        raise LabelingError(f"no label for vertices {missing}")
    return tuple(pairs[v] for v in range(n))


def serialize_labeling(labels: Sequence[int]) -> str:
    return "".join(f"{v} {lab}\n" for v, lab in enumerate(labels))


@dataclass(frozen=True)
class Certificate:
    graph: Graph
    labeling: tuple[int, ...]
    profile: WeightProfile
    provenance: str = ""

    @property
    def valid(self) -> bool:
        return self.profile.valid

    @property
    def colors(self) -> int:
        return self.profile.distinct_count

    @property
    def weights(self) -> tuple[int, ...]:
        return self.profile.weights

    def to_dict(self) -> dict:
        return {
            "graph": serialize_graph(self.graph),
            "labeling": list(self.labeling),
            "weights": list(self.profile.weights),
            "valid": self.valid,
            "colors": self.colors,
            "provenance": self.provenance,
            "conflicts": [list(e) for e in self.profile.conflicts],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        verdict = "valid" if self.valid else "INVALID"
        lines = [f"graph: {self.graph.name or 'G'} order={self.graph.order} size={self.graph.size}",
                 f"verdict: {verdict}", f"colors: {self.colors}",
                 f"provenance: {self.provenance}",
                 "vertex label weight"]
        lines += [f"{v} {self.labeling[v]} {self.weights[v]}" for v in range(self.graph.order)]
        lines += [f"conflict {u} {v}" for u, v in self.profile.conflicts]
        return "\n".join(lines) + "\n"


def certify(G: Graph, labels: Sequence[int], provenance: str = "") -> Certificate:
    labels = check_bijection(G, labels)
    return Certificate(G, labels, weigh(G, labels), provenance)


def load_certificate(text: str) -> Certificate:
    """Rebuild a certificate from JSON and re-verify it; a mismatch raises."""
    data = json.loads(text)
    G = parse_graph(data["graph"])
    cert = certify(G, data["labeling"], data.get("provenance", ""))
    if (list(cert.weights) != list(data["weights"]) or cert.valid != data["valid"]
            or cert.colors != data["colors"]):
        raise LabelingError("embedded weight profile does not match re-verification")
    return cert

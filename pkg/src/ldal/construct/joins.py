"""Labelings for joins and the small families they are built from."""

from __future__ import annotations

from typing import Sequence

from ..graph import Graph, bistar, complete, complete_multipartite, empty, friendship, join
from ..labeling import Certificate, certify, weigh
from ..oracle import SearchBudget, find_labeling
from .base import ConstructionError, HypothesisError, finish, transport


def label_clique_plus_empty(n: int, p: int) -> Certificate:
    """K_{p-1} + K̄_{n-p+1} with exactly p colours.

    Clique vertices take 1..p-1 in index order, the independent side p..n.
    """
    if not 2 <= p <= n:
        raise HypothesisError(f"need 2 <= p <= n, got n={n}, p={p}")
    G = join(complete(p - 1), empty(n - p + 1))
    return finish(G, range(1, n + 1), f"clique-plus-empty(n={n},p={p})", exact=p)


def clique_plus_empty_weights(n: int, p: int) -> list[int]:
    base = p * (p - 1) // 2
    clique = [base - f + (n - p + 1) * (n + p) // 2 for f in range(1, p)]
    return clique + [base] * (n - p + 1)


def label_multipartite(n: int, p: int, sizes: Sequence[int] | None = None,
                       cap: int = 12) -> Certificate:
    """K_{x_1,...,x_{p-1}, n - sum x}: p colours, labeling found by search."""
    sizes = list(sizes) if sizes is not None else [1] * (p - 1)
    if p < 2 or len(sizes) != p - 1 or any(x < 1 for x in sizes) or sum(sizes) >= n:
        raise HypothesisError(f"bad part sizes {sizes} for n={n}, p={p}")
    if n > cap:
        raise HypothesisError(f"order {n} above search cap {cap}")
    G = complete_multipartite(sizes + [n - sum(sizes)])
    labels = find_labeling(G, p, SearchBudget(max_order=cap))
    if labels is None:
        raise ConstructionError(f"no {p}-colour labeling found for {G.name}")
    return finish(G, labels, f"multipartite(n={n},p={p},sizes={sizes}) by search", exact=p)


def check_join_condition(n: int, m: int, max_deg_h: int, min_deg_g: int) -> bool:
    """The stated sufficient condition for the join labeling, taken literally:

        Δ_H(m+n) - Δ_H(Δ_H-1)/2 - δ_G(δ_G+1)/2 < 2nm + (m-n)(m+n+1)/2

    evaluated on integers after doubling.  See :func:`join_separation_condition`
    for the inequality the weight comparison actually needs.
    """
    if n > m:
        raise HypothesisError("join condition needs n <= m")
    lhs = 2 * max_deg_h * (m + n) - max_deg_h * (max_deg_h - 1) - min_deg_g * (min_deg_g + 1)
    rhs = 4 * n * m + (m - n) * (m + n + 1)
    return lhs < rhs


def join_separation_condition(n: int, m: int, max_deg_h: int, min_deg_g: int) -> bool:
    """Smallest possible G-side weight exceeds the largest possible H-side weight.

    Same as :func:`check_join_condition` with nm in place of 2nm on the right.
    This only separates the two sides.  Shifting g by |G| adds |G|*deg_H(v) to
    each H-side weight, so a non-regular H can still pick up ties inside H;
    the certificate check in label_join catches those.
    """
    if n > m:
        raise HypothesisError("join condition needs n <= m")
    lhs = 2 * max_deg_h * (m + n) - max_deg_h * (max_deg_h - 1) - min_deg_g * (min_deg_g + 1)
    rhs = 2 * n * m + (m - n) * (m + n + 1)
    return lhs < rhs


def join_weights(G: Graph, f: Sequence[int], H: Graph, g: Sequence[int]) -> list[int]:
    """Closed-form weights of the join labeling (G side first)."""
    n, m = G.order, H.order
    wf = weigh(G, f).weights
    wg = weigh(H, g).weights
    return ([w + m * (m + 1) // 2 + n * m for w in wf]
            + [wg[j] + n * (n + 1) // 2 + n * H.degree(j) for j in range(m)])


def label_join(G: Graph, f: Sequence[int], H: Graph, g: Sequence[int],
               provenance: str = "join") -> Certificate:
    """G + H labelled by f on G and g shifted by |G| on H (|G| <= |H|)."""
    n, m = G.order, H.order
    if n > m:
        raise HypothesisError(f"join labeling needs |G| <= |H|, got {n} > {m}")
    if G.isolated_vertices() and H.isolated_vertices():
        raise HypothesisError("both sides have isolated vertices")
    cf, cg = certify(G, f), certify(H, g)
    if not cf.valid or not cg.valid:
        raise HypothesisError("ingredient labelings must be local distance antimagic")
    if not check_join_condition(n, m, H.max_degree, G.min_degree):
        raise HypothesisError(
            f"join condition fails for n={n}, m={m}, Δ_H={H.max_degree}, δ_G={G.min_degree}")
    labels = list(cf.labeling) + [x + n for x in cg.labeling]
    return finish(join(G, H), labels, provenance, at_most=cf.colors + cg.colors)


def label_friendship(n: int) -> Certificate:
    """F_n with labels in vertex order (center 1, then u_1, v_1, u_2, ...)."""
    if n < 2:
        raise HypothesisError("friendship labeling needs n >= 2")
    G = friendship(n)
    return finish(G, range(1, G.order + 1), f"friendship(n={n})", exact=2 * n + 1)


def label_bistar(m: int, n: int) -> Certificate:
    """B_{m,n}: centers take 1 and 2, the a-leaves 3..m+2, the b-leaves the rest.

    When the two centers would tie (e.g. B_{3,2}) the center labels are
    swapped, which moves their weights apart by 2.
    """
    if m < 2 or n < 2:
        raise HypothesisError("bistar labeling needs m, n >= 2")
    G = bistar(m, n)
    labels = list(range(1, G.order + 1))
    prov = f"bistar(m={m},n={n})"
    if not certify(G, labels).valid:
        labels[0], labels[1] = 2, 1
        prov += " centers swapped"
    return finish(G, labels, prov, exact=4)


def label_friendship_join_empty(n: int, m: int) -> Certificate:
    """F_n + K̄_m with 2n+2 colours; F_n is labelled 1..2n+1 from label_friendship."""
    if n < 2 or m < 1:
        raise HypothesisError("need n >= 2 and m >= 1")
    F, E = friendship(n), empty(m)
    f = label_friendship(n).labeling
    ident = list(range(1, m + 1))
    target = join(F, E)
    big = F.order
    if m >= big:
        return label_join(F, f, E, ident, f"friendship-join-empty(n={n},m={m}) via join")
    # m < |F_n|: F_n first when that separates, else the empty side takes 1..m
    labels = list(f) + [x + big for x in ident]
    cert = certify(target, labels, f"friendship-join-empty(n={n},m={m}) larger side first")
    if cert.valid and cert.colors == 2 * n + 2:
        return cert
    swapped = label_join(E, ident, F, f, f"friendship-join-empty(n={n},m={m}) via join, empty side first")
    cert = transport(swapped, target)
    if cert.colors != 2 * n + 2:
        raise ConstructionError(f"expected {2 * n + 2} colours, got {cert.colors}")
    return cert


def label_friendship_join_bistar(n: int) -> Certificate:
    """F_n + B_{n,n} with 2n+5 colours."""
    if n < 2:
        raise HypothesisError("need n >= 2")
    F, B = friendship(n), bistar(n, n)
    if B.max_degree > F.order:
        raise HypothesisError("Δ(B_{n,n}) > |F_n|")
    cert = label_join(F, label_friendship(n).labeling, B, label_bistar(n, n).labeling,
                      f"friendship-join-bistar(n={n}) via join")
    if cert.colors != 2 * n + 5:
        raise ConstructionError(f"expected {2 * n + 5} colours, got {cert.colors}")
    return cert

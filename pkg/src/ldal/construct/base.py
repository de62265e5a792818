from __future__ import annotations

from typing import Sequence

from ..graph import Graph
from ..labeling import Certificate, certify, check_bijection


class HypothesisError(ValueError):
    """Parameters or input graph outside the construction's hypotheses."""


class ConstructionError(RuntimeError):
    """A construction produced a labeling that failed re-verification."""


class NotCovered(HypothesisError):
    """No implemented construction applies to this parameter region."""


def finish(G: Graph, labels: Sequence[int], provenance: str, *,
           exact: int | None = None, at_most: int | None = None) -> Certificate:
    """Re-verify a constructed labeling; any failure is an internal error."""
    try:
        labels = check_bijection(G, labels)
    except ValueError as exc:
        raise ConstructionError(f"{provenance}: {exc}") from None
    cert = certify(G, labels, provenance)
    if not cert.valid:
        raise ConstructionError(f"{provenance}: equal weights on edges {list(cert.profile.conflicts)[:5]}")
    if exact is not None and cert.colors != exact:
        raise ConstructionError(f"{provenance}: {cert.colors} colours, expected {exact}")
    if at_most is not None and cert.colors > at_most:
        raise ConstructionError(f"{provenance}: {cert.colors} colours, bound is {at_most}")
    return cert


def transport(cert: Certificate, target: Graph, provenance: str | None = None) -> Certificate:
    """Move a certificate onto a graph with the same vertex tags (tag-identity map)."""
    pos = {t: i for i, t in enumerate(cert.graph.tags)}
    if set(pos) != set(target.tags):
        raise ConstructionError("tag sets differ; cannot transport labeling")
    labels = [cert.labeling[pos[t]] for t in target.tags]
    return finish(target, labels, provenance or cert.provenance, exact=cert.colors)

"""Deterministic constructions of IASSL and IASSI graphs for a ground set."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ConstructionError, DomainError
from .graph import LabeledGraph
from .setalg import GroundSet, LabelSet
from .verifier import VerificationReport, cached_classification, check_iassl

__all__ = [
    "Coverage",
    "ConstructionTrace",
    "construct_iassl_graph",
    "construct_iassi_graph",
    "minimality_stats",
]


@dataclass(frozen=True)
class Coverage:
    """How one subset of X ended up in the image of f*."""

    label: LabelSet
    covered_by: str  # "vertex" or "edge"
    how: str  # root | star | pendant | isolated | pair
    vertex: int | None = None
    edge: tuple[int, int] | None = None
    decomposition: tuple[LabelSet, LabelSet] | None = None

    def to_dict(self) -> dict:
        return {
            "set": self.label.to_json(),
            "covered_by": self.covered_by,
            "how": self.how,
            "vertex": self.vertex,
            "edge": list(self.edge) if self.edge else None,
            "decomposition": [s.to_json() for s in self.decomposition] if self.decomposition else None,
        }


@dataclass
class ConstructionTrace:
    mode: str
    ground: GroundSet
    graph: LabeledGraph
    coverage: list[Coverage] = field(default_factory=list)
    pendant_attachments: list[int] = field(default_factory=list)
    report: VerificationReport | None = None

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "ground": self.ground.to_json(),
            "coverage": [c.to_dict() for c in self.coverage],
            "pendant_attachments": list(self.pendant_attachments),
            "kappa": self.report.kappa if self.report else None,
            "verified": self.report.holds(self.mode) if self.report else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _require(x: GroundSet) -> None:
    if not x.contains_zero:
        raise DomainError(f"constructions need 0 in the ground set, got {x!r}")


def _distinct_pair(s: LabelSet, cls, basic: set[LabelSet]):
    """Smallest decomposition of ``s`` into two different non-sum-sets."""
    for b, c in cls.decompositions_of(s):
        if b != c and b in basic and c in basic:
            return b, c
    return None


def _finish(trace: ConstructionTrace) -> ConstructionTrace:
    report = check_iassl(trace.graph, trace.ground)
    trace.report = report
    if not report.holds(trace.mode):
        raise ConstructionError(f"{trace.mode} construction for {trace.ground!r} failed verification", trace)
    return trace


def construct_iassl_graph(x: GroundSet) -> tuple[LabeledGraph, ConstructionTrace]:
    """Star of all non-sum-sets around ``{0}``, then one edge per sum set.

    A sum set that only splits into equal summands (or needs a summand that
    is itself a sum set) would need a loop; it gets a pendant vertex at the
    ``{0}`` hub instead, which covers it as a vertex and as ``{0} + S``.
    """
    _require(x)
    cls = cached_classification(x)
    g = LabeledGraph(ground=x)
    trace = ConstructionTrace("iassl", x, g)
    basic = set(cls.non_sumsets)

    zero = x.label([0])
    hub = g.add_vertex(zero)
    trace.coverage.append(Coverage(zero, "vertex", "root", vertex=hub))
    vertex_of = {zero: hub}
    for a in cls.non_sumsets:
        if a == zero:
            continue
        v = g.add_vertex(a)
        g.add_edge(hub, v)
        vertex_of[a] = v
        trace.coverage.append(Coverage(a, "vertex", "star", vertex=v))

    for s in cls.sumsets:
        pair = _distinct_pair(s, cls, basic)
        if pair is not None:
            u, v = sorted((vertex_of[pair[0]], vertex_of[pair[1]]))
            g.add_edge(u, v)
            trace.coverage.append(Coverage(s, "edge", "pair", edge=(u, v), decomposition=pair))
        else:
            v = g.add_vertex(s)
            g.add_edge(hub, v)
            trace.pendant_attachments.append(v)
            trace.coverage.append(Coverage(s, "vertex", "pendant", vertex=v, edge=(hub, v)))
    return g, _finish(trace)


def construct_iassi_graph(x: GroundSet) -> tuple[LabeledGraph, ConstructionTrace]:
    """Non-sum-sets as vertices; each sum set becomes an edge between two
    distinct non-sum-sets when possible and an isolated vertex otherwise.

    Vertex labels and edge labels partition the non-empty subsets of X.
    """
    _require(x)
    cls = cached_classification(x)
    g = LabeledGraph(ground=x)
    trace = ConstructionTrace("iassi", x, g)
    basic = set(cls.non_sumsets)

    vertex_of = {}
    for a in cls.non_sumsets:
        v = g.add_vertex(a)
        vertex_of[a] = v
        trace.coverage.append(Coverage(a, "vertex", "root" if a.bits == 1 else "isolated", vertex=v))

    for s in cls.sumsets:
        pair = _distinct_pair(s, cls, basic)
        if pair is not None:
            u, v = sorted((vertex_of[pair[0]], vertex_of[pair[1]]))
            g.add_edge(u, v)
            trace.coverage.append(Coverage(s, "edge", "pair", edge=(u, v), decomposition=pair))
        else:
            v = g.add_vertex(s)
            trace.coverage.append(Coverage(s, "vertex", "isolated", vertex=v))
    return g, _finish(trace)


def minimality_stats(trace: ConstructionTrace) -> dict:
    """Compare the built graph against the lower bounds from the classification."""
    g = trace.graph
    cls = cached_classification(trace.ground)
    return {
        "n_vertices": g.n,
        "n_edges": g.m,
        "rho": cls.rho,
        "rho_prime": cls.rho_prime,
        "pendants": len(g.pendant_vertices()),
        "isolated": len(g.isolated_vertices()),
        "vertices_at_least_rho": g.n >= cls.rho,
        "pendants_at_least_rho_prime": len(g.pendant_vertices()) >= cls.rho_prime,
        "isolated_equals_rho_prime": len(g.isolated_vertices()) == cls.rho_prime,
    }

"""Finite simple undirected graphs carrying an injective set-labeling."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DomainError, IncompleteLabelingError
from .setalg import GroundSet, LabelSet, sum_bits

__all__ = ["LabeledGraph", "FStarImage", "Edge"]

Edge = tuple[int, int]


def _edge_sum(a: LabelSet, b: LabelSet) -> LabelSet:
    # exact sum; labels outside X may push it past the shared bound, in
    # which case the result is returned unbounded so the verifier can
    # report it as escaped
    bits = sum_bits(a.bits, b.bits)
    bound = a.bound if a.bound == b.bound else None
    if bound is not None and bits.bit_length() - 1 > bound:
        bound = None
    return LabelSet(bits, bound)


@dataclass(frozen=True)
class FStarImage:
    """Vertex labels and induced edge labels, with provenance."""

    vertex_part: tuple[tuple[int, LabelSet], ...]
    edge_part: tuple[tuple[Edge, LabelSet], ...]

    @property
    def combined(self) -> list[LabelSet]:
        return [s for _, s in self.vertex_part] + [s for _, s in self.edge_part]

    @property
    def vertex_labels(self) -> list[LabelSet]:
        return [s for _, s in self.vertex_part]

    @property
    def edge_labels(self) -> list[LabelSet]:
        return [s for _, s in self.edge_part]


class LabeledGraph:
    """Simple graph on vertices ``0..n-1`` with a partial vertex labeling.

    Labels must stay pairwise distinct.  The ground set is optional and is
    used as the default universe by the verifier.
    """

    def __init__(self, n: int = 0, edges: Iterable[Edge] = (), labels=None,
                 ground: GroundSet | None = None):
        self.ground = ground
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._labels: dict[int, LabelSet] = {}
        self._owner: dict[LabelSet, int] = {}
        for u, v in edges:
            self.add_edge(u, v)
        if labels is not None:
            items = labels.items() if isinstance(labels, Mapping) else enumerate(labels)
            for v, s in items:
                if s is not None:
                    self.set_label(v, s)

    # -- construction -------------------------------------------------

    def add_vertex(self, label: LabelSet | Iterable[int] | None = None) -> int:
        self._adj.append(set())
        v = len(self._adj) - 1
        if label is not None:
            self.set_label(v, label)
        return v

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise DomainError(f"self-loop at vertex {u} is not allowed in a simple graph")
        if v in self._adj[u]:
            raise DomainError(f"parallel edge {u}-{v} is not allowed in a simple graph")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def set_label(self, v: int, label: LabelSet | Iterable[int]) -> None:
        self._check_vertex(v)
        if not isinstance(label, LabelSet):
            members = list(label)
            label = self.ground.label(members) if self.ground else LabelSet.of(members)
        owner = self._owner.get(label)
        if owner is not None and owner != v:
            raise DomainError(f"label {label!r} already used by vertex {owner}")
        old = self._labels.get(v)
        if old is not None:
            del self._owner[old]
        self._labels[v] = label
        self._owner[label] = v

    def clear_label(self, v: int) -> None:
        old = self._labels.pop(v, None)
        if old is not None:
            del self._owner[old]

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self._adj):
            raise DomainError(f"no vertex {v!r} in a graph on {len(self._adj)} vertices")

    # -- queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def vertices(self) -> range:
        return range(len(self._adj))

    @property
    def edges(self) -> list[Edge]:
        return sorted((u, v) for u in self.vertices for v in self._adj[u] if u < v)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def is_pendant(self, v: int) -> bool:
        return len(self._adj[v]) == 1

    def is_isolated(self, v: int) -> bool:
        return not self._adj[v]

    def pendant_vertices(self) -> list[int]:
        return [v for v in self.vertices if len(self._adj[v]) == 1]

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if not self._adj[v]]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for root in self.vertices:
            if seen[root]:
                continue
            seen[root] = True
            stack, comp = [root], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    # -- labels -------------------------------------------------------

    def label(self, v: int) -> LabelSet | None:
        return self._labels.get(v)

    @property
    def labels(self) -> dict[int, LabelSet]:
        return dict(self._labels)

    def is_fully_labeled(self) -> bool:
        return len(self._labels) == self.n

    def vertex_with_label(self, s: LabelSet) -> int | None:
        return self._owner.get(s)

    def require_labels(self) -> None:
        missing = [v for v in self.vertices if v not in self._labels]
        if missing:
            raise IncompleteLabelingError(f"unlabeled vertices: {missing}")

    def induced_edge_label(self, u: int, v: int) -> LabelSet:
        a, b = self._labels.get(u), self._labels.get(v)
        if a is None or b is None:
            raise IncompleteLabelingError(f"edge {u}-{v} has an unlabeled endpoint")
        if not self.has_edge(u, v):
            raise DomainError(f"no edge {u}-{v}")
        return _edge_sum(a, b)

    def f_star_image(self) -> FStarImage:
        self.require_labels()
        return FStarImage(
            vertex_part=tuple((v, self._labels[v]) for v in self.vertices),
            edge_part=tuple(((u, v), self.induced_edge_label(u, v)) for u, v in self.edges),
        )

    # -- misc ---------------------------------------------------------

    def copy(self) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges, self._labels, ground=self.ground)

    def relabel_vertices(self, perm: list[int]) -> "LabeledGraph":
        """Return the isomorphic copy in which vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(self.vertices):
            raise DomainError("relabeling must be a permutation of the vertex ids")
        return LabeledGraph(
            self.n,
            [(perm[u], perm[v]) for u, v in self.edges],
            {perm[v]: s for v, s in self._labels.items()},
            ground=self.ground,
        )

    def structure_key(self) -> tuple:
        """Hashable identity: vertex count, edges and labels."""
        return (
            self.n,
            tuple(self.edges),
            tuple(self._labels[v].bits if v in self._labels else 0 for v in self.vertices),
        )

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.structure_key() == other.structure_key() and self.ground == other.ground

    def __repr__(self):
        labels = ", ".join(f"{v}:{s!r}" for v, s in sorted(self._labels.items()))
        return f"LabeledGraph(n={self.n}, edges={self.edges}, labels={{{labels}}})"

    # -- serialization ------------------------------------------------

    def to_dict(self) -> dict:
        out = {}
        if self.ground is not None:
            out["ground"] = self.ground.to_json()
        vertices = []
        for v in self.vertices:
            entry = {"id": v}
            if v in self._labels:
                entry["label"] = self._labels[v].to_json()
            vertices.append(entry)
        out["vertices"] = vertices
        out["edges"] = [list(e) for e in self.edges]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "LabeledGraph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise DomainError("graph JSON needs a 'vertices' array")
        ground = GroundSet.of(data["ground"]) if data.get("ground") is not None else None
        vertices = data["vertices"]
        ids = [entry.get("id") for entry in vertices]
        if sorted(ids) != list(range(len(ids))):
            raise DomainError(f"vertex ids must be 0..n-1, got {ids}")
        g = cls(len(ids), ground=ground)
        for entry in vertices:
            if entry.get("label") is not None:
                members = entry["label"]
                if not members:
                    raise DomainError(f"vertex {entry['id']} has an empty label")
                g.set_label(entry["id"], members)
        for edge in data.get("edges", []):
            if len(edge) != 2:
                raise DomainError(f"malformed edge {edge!r}")
            g.add_edge(*edge)
        return g

    @classmethod
    def from_json(cls, text: str) -> "LabeledGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid graph JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dot(self, name: str = "G") -> str:
        """DOT text with set labels on nodes and induced sum sets on edges."""
        self.require_labels()

        def fmt(s: LabelSet) -> str:
            return "{" + ",".join(map(str, s.members)) + "}"

        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  {v} [label="{fmt(self._labels[v])}"];')
        for u, v in self.edges:
            lines.append(f'  {u} -- {v} [label="{fmt(self.induced_edge_label(u, v))}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

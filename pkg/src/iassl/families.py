"""Small graph families and ground-set ranges used by searches and audits.

Every generator returns ``(name, graph)`` pairs of unlabeled graphs with
vertices ``0..n-1``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .errors import CapacityError, DomainError
from .graph import LabeledGraph
from .setalg import GroundSet

__all__ = [
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "empty_graph",
    "all_graphs",
    "connected_graphs",
    "family",
    "FAMILIES",
    "ground_sets",
]

MAX_ENUMERATION_ORDER = 6


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return LabeledGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> LabeledGraph:
    """K_{1,k}: centre 0 joined to ``k`` leaves."""
    return LabeledGraph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, itertools.combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> LabeledGraph:
    return LabeledGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n)


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n > MAX_ENUMERATION_ORDER:
        raise CapacityError(f"graph enumeration is limited to {MAX_ENUMERATION_ORDER} vertices")
    pairs = list(itertools.combinations(range(n), 2))
    where = {p: k for k, p in enumerate(pairs)}
    # image of each pair slot under each vertex permutation
    moves = []
    for perm in itertools.permutations(range(n)):
        moves.append([where[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    seen = set()
    reps = []
    # scanning masks upwards, the first member met of each orbit is its minimum
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        reps.append(mask)
        bits = [k for k in range(len(pairs)) if mask >> k & 1]
        for move in moves:
            seen.add(sum(1 << move[k] for k in bits))
    reps.sort(key=lambda m: (m.bit_count(), m))
    return tuple(tuple(p for k, p in enumerate(pairs) if m >> k & 1) for m in reps)


def all_graphs(n: int) -> list[tuple[str, LabeledGraph]]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    return [(f"G{n}_{i}", LabeledGraph(n, edges)) for i, edges in enumerate(_graph_classes(n))]


def connected_graphs(n: int) -> list[tuple[str, LabeledGraph]]:
    return [(name, g) for name, g in all_graphs(n) if g.is_connected()]


FAMILIES = ("paths", "cycles", "stars", "complete", "complete-bipartite", "connected", "all")


def family(name: str, sizes) -> Iterator[tuple[str, LabeledGraph]]:
    """Yield the members of a named family for each size in ``sizes``.

    For stars the size is the number of leaves; for complete bipartite
    graphs it is the total order, split into every ``a <= b``.
    """
    for n in sizes:
        if name == "paths":
            if n >= 1:
                yield f"P{n}", path_graph(n)
        elif name == "cycles":
            if n >= 3:
                yield f"C{n}", cycle_graph(n)
        elif name == "stars":
            if n >= 1:
                yield f"K1,{n}", star_graph(n)
        elif name == "complete":
            if n >= 1:
                yield f"K{n}", complete_graph(n)
        elif name == "complete-bipartite":
            for a in range(1, n // 2 + 1):
                yield f"K{a},{n - a}", complete_bipartite_graph(a, n - a)
        elif name == "connected":
            yield from connected_graphs(n)
        elif name == "all":
            yield from all_graphs(n)
        else:
            raise DomainError(f"unknown graph family {name!r}; choose from {', '.join(FAMILIES)}")


def ground_sets(max_size: int, max_value: int, min_size: int = 1) -> list[GroundSet]:
    """Every X with 0 in X, ``min_size <= |X| <= max_size`` and ``max(X) <= max_value``.

    Ordered by size, then largest element, then value-lexicographically.
    """
    out = []
    for size in range(max(min_size, 1), max_size + 1):
        for rest in itertools.combinations(range(1, max_value + 1), size - 1):
            out.append(GroundSet((0,) + rest))
    out.sort(key=lambda x: (x.size, x.max_value, x.values))
    return out

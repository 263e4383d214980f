"""Exact search for IASSL / IASSI labelings of small graphs.

Vertices are assigned in a fixed order (highest degree first, ties by id)
and candidate labels are tried in canonical order.  Three pruning rules cut
the tree, all of which can be switched off for differential testing:

1. an edge whose endpoints are both labeled must have its sum set inside X;
2. for IASSI, no set may appear twice among the labels placed so far;
3. the vertices and edges still to be placed must be able to cover every
   subset of X not yet covered (for IASGL: the edges alone must cover every
   subset other than ``{0}``).

Edge-label injectivity is checked as soon as an edge is complete when
pruning is on, and at the leaves otherwise.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from . import config
from .errors import CapacityError, DomainError
from .families import family, ground_sets
from .graph import LabeledGraph
from .setalg import GroundSet, LabelSet, sum_bits

__all__ = [
    "SearchOptions",
    "SearchResult",
    "find_labelings",
    "min_ground_set",
    "sweep_graphs",
    "automorphisms",
    "PREDICATES",
]

PREDICATES = ("iassl", "iassi", "iasgl")


@dataclass(frozen=True)
class SearchOptions:
    predicate: str = "iassl"
    enumerate_all: bool = False
    cap: int | None = None
    max_size: int = 3
    max_value: int = 4
    symmetry: bool = False
    pruning: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.predicate not in PREDICATES:
            raise DomainError(f"predicate must be one of {PREDICATES}, got {self.predicate!r}")
        if self.cap is not None and self.cap < 1:
            raise DomainError("solution cap must be positive")
        if self.max_size < 1 or self.max_value < 0 or self.workers < 1:
            raise DomainError("search bounds must be positive")

    @property
    def limit(self) -> int | None:
        if self.cap is not None:
            return self.cap
        return None if self.enumerate_all else 1


@dataclass
class SearchResult:
    graph: LabeledGraph
    ground: GroundSet
    predicate: str
    solutions: list[tuple[LabelSet, ...]]
    nodes_expanded: int
    exhausted: bool

    @property
    def found(self) -> bool:
        return bool(self.solutions)

    def labeled(self, i: int = 0) -> LabeledGraph:
        """The ``i``-th solution as a labeled copy of the graph."""
        return LabeledGraph(self.graph.n, self.graph.edges, list(self.solutions[i]), ground=self.ground)

    def to_dict(self) -> dict:
        return {
            "ground": self.ground.to_json(),
            "edges": [list(e) for e in self.graph.edges],
            "n_vertices": self.graph.n,
            "predicate": self.predicate,
            "solutions": [[s.to_json() for s in sol] for sol in self.solutions],
            "nodes_expanded": self.nodes_expanded,
            "exhausted": self.exhausted,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def automorphisms(n: int, edges) -> list[tuple[int, ...]]:
    """All automorphisms of a simple graph, identity first."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    deg = [len(a) for a in adj]
    out = []
    image = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            if any((image[u] in adj[w]) != (u in adj[v]) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = -1

    extend(0)
    out.sort(key=lambda p: p != tuple(range(n)))
    return out


class _Stop(Exception):
    pass


class _Engine:
    """Backtracking state over label indices; all sets are canonical indices."""

    def __init__(self, n, edges, ground_values, opts: SearchOptions):
        self.n = n
        self.opts = opts
        self.iassi = opts.predicate == "iassi"
        self.iasgl = opts.predicate == "iasgl"
        self.pruning = opts.pruning
        x = GroundSet(tuple(ground_values))
        self.subsets = x.subset_bits()
        k = len(self.subsets)
        self.k = k
        index = {b: i for i, b in enumerate(self.subsets)}
        self.sum_idx = [[index.get(sum_bits(a, b), -1) for b in self.subsets] for a in self.subsets]

        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self.edges = list(edges)
        self.order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
        pos = {v: i for i, v in enumerate(self.order)}
        self.back = [[w for w in sorted(adj[v]) if pos[w] < pos[v]] for v in self.order]
        done = 0
        self.edges_left = []
        for i in range(n):
            done += len(self.back[i])
            self.edges_left.append(len(self.edges) - done)

        self.autos = automorphisms(n, edges)[1:] if opts.symmetry else []
        self.limit = opts.limit
        self.assign = [-1] * n
        self.used = [False] * k
        self.edge_used = [0] * k
        self.cover = [0] * k
        self.missing = k
        # IASGL: edges must hit every subset except {0}, which is index 0
        self.edge_missing = k - 1
        self.nodes = 0
        self.solutions: list[tuple[int, ...]] = []
        self.nodes_at: list[int] = []

    # -- incremental bookkeeping ---------------------------------------

    def _cover(self, s):
        if self.cover[s] == 0:
            self.missing -= 1
        self.cover[s] += 1

    def _uncover(self, s):
        self.cover[s] -= 1
        if self.cover[s] == 0:
            self.missing += 1

    def _add_edge(self, s):
        if self.edge_used[s] == 0 and s:
            self.edge_missing -= 1
        self.edge_used[s] += 1
        self._cover(s)

    def _place(self, depth, c):
        """Assign candidate ``c`` at ``depth``; return placed edge sums or None."""
        v = self.order[depth]
        if self.pruning and self.iassi and self.cover[c]:
            return None
        self.assign[v] = c
        self.used[c] = True
        self._cover(c)
        placed = []
        ok = True
        if self.pruning:
            for w in self.back[depth]:
                s = self.sum_idx[c][self.assign[w]]
                if s < 0 or self.edge_used[s] or (self.iassi and self.cover[s]):
                    ok = False
                    break
                self._add_edge(s)
                placed.append(s)
            if ok:
                if self.iasgl:
                    ok = self.edge_missing <= self.edges_left[depth]
                else:
                    ok = self.missing <= (self.n - depth - 1) + self.edges_left[depth]
            if ok and self.autos and not self._lex_leader(depth):
                ok = False
        elif self.autos and not self._lex_leader(depth):
            ok = False
        if not ok:
            self._unplace(depth, c, placed)
            return None
        return placed

    def _unplace(self, depth, c, placed):
        for s in placed:
            self.edge_used[s] -= 1
            if self.edge_used[s] == 0 and s:
                self.edge_missing += 1
            self._uncover(s)
        self._uncover(c)
        self.used[c] = False
        self.assign[self.order[depth]] = -1

    def _lex_leader(self, depth):
        # the labeling read along the search order must not exceed its
        # image under any automorphism
        assign, order = self.assign, self.order
        for perm in self.autos:
            for i in range(depth + 1):
                a = assign[order[i]]
                b = assign[perm[order[i]]]
                if b < 0 or a < b:
                    break
                if a > b:
                    return False
        return True

    def _leaf_ok(self):
        labels = self.assign
        sums = []
        for u, v in self.edges:
            s = self.sum_idx[labels[u]][labels[v]]
            if s < 0:
                return False
            sums.append(s)
        if len(set(sums)) != len(sums):
            return False
        if self.iasgl:
            return set(sums) == set(range(1, self.k))
        image = list(labels) + sums
        if len(set(image)) != self.k:
            return False
        return not self.iassi or len(image) == self.k

    # -- search ---------------------------------------------------------

    def _dfs(self, depth):
        self.nodes += 1
        if depth == self.n:
            if self._leaf_ok():
                self.solutions.append(tuple(self.assign))
                self.nodes_at.append(self.nodes)
                if self.limit is not None and len(self.solutions) >= self.limit:
                    raise _Stop
            return
        for c in range(self.k):
            if self.used[c]:
                continue
            placed = self._place(depth, c)
            if placed is None:
                continue
            try:
                self._dfs(depth + 1)
            finally:
                self._unplace(depth, c, placed)

    def run(self, first: list[int] | None = None):
        """Run the whole tree, or only the subtrees under ``first`` candidates
        for the first vertex (root node not counted in that case)."""
        try:
            if first is None:
                self._dfs(0)
            else:
                for c in first:
                    placed = self._place(0, c)
                    if placed is None:
                        continue
                    try:
                        self._dfs(1)
                    finally:
                        self._unplace(0, c, placed)
        except _Stop:
            return False
        return True


def _subtree(args):
    n, edges, values, opts, c = args
    eng = _Engine(n, edges, values, opts)
    exhausted = eng.run([c])
    return eng.solutions, eng.nodes, eng.nodes_at, exhausted


def _orbit(sol, autos):
    out = {sol}
    for perm in autos:
        out.add(tuple(sol[perm[v]] for v in range(len(sol))))
    return out


def _check_inputs(g: LabeledGraph, x: GroundSet) -> None:
    if not x.contains_zero:
        raise DomainError(f"sequential labelings need 0 in the ground set, got {x!r}")
    if x.size > config.max_search_size():
        raise CapacityError(f"|X| = {x.size} exceeds the search limit {config.max_search_size()}")
    if g.n > config.max_search_vertices():
        raise CapacityError(f"{g.n} vertices exceed the search limit {config.max_search_vertices()}")


def find_labelings(g: LabeledGraph, x: GroundSet, opts: SearchOptions | None = None, **kw) -> SearchResult:
    """Backtracking search for labelings of ``g`` satisfying ``opts.predicate``.

    With ``workers > 1`` the first level of the tree is farmed out to
    processes; solution lists, node counts and the ``exhausted`` flag are
    identical to the single-process run, including under a solution cap.
    """
    opts = replace(opts or SearchOptions(), **kw)
    _check_inputs(g, x)
    n, edges = g.n, g.edges
    k = (1 << x.size) - 1
    if n > k or n == 0:
        return SearchResult(g, x, opts.predicate, [], 0, True)

    eng = _Engine(n, edges, x.values, opts)
    if opts.workers == 1:
        exhausted = eng.run()
        raw, nodes = eng.solutions, eng.nodes
    else:
        tasks = [(n, edges, x.values, opts, c) for c in range(k)]
        with ProcessPoolExecutor(max_workers=opts.workers) as pool:
            parts = list(pool.map(_subtree, tasks))
        raw, nodes, exhausted = [], 1, True
        limit = opts.limit
        for sols, sub_nodes, nodes_at, _ in parts:
            if limit is not None and len(raw) + len(sols) >= limit:
                need = limit - len(raw)
                raw += sols[:need]
                nodes += nodes_at[need - 1]
                exhausted = False
                break
            raw += sols
            nodes += sub_nodes

    if eng.autos:
        full = set()
        for sol in raw:
            full |= _orbit(sol, eng.autos)
        raw = sorted(full)
        if opts.limit is not None:
            raw = raw[: opts.limit]
    else:
        raw = sorted(raw)
    subsets = eng.subsets
    solutions = [tuple(LabelSet(subsets[i], x.bound) for i in sol) for sol in raw]
    return SearchResult(g, x, opts.predicate, solutions, nodes, exhausted)


def min_ground_set(g: LabeledGraph, opts: SearchOptions | None = None, **kw) -> GroundSet | None:
    """Smallest X (by size, then largest element, then lexicographically)
    within the bounds of ``opts`` for which ``g`` admits the predicate."""
    opts = replace(opts or SearchOptions(), **kw)
    probe = replace(opts, enumerate_all=False, cap=1)
    for x in ground_sets(opts.max_size, opts.max_value):
        if find_labelings(g, x, probe).found:
            return x
    return None


def sweep_graphs(graphs, xs, predicate: str = "iassl", enumerate_all: bool = True,
                 workers: int = 1, pruning: bool = True) -> list[dict]:
    """Decision table over ``graphs`` x ``xs``.

    ``graphs`` is an iterable of ``(name, graph)`` pairs or a family name
    together with sizes as ``(family, sizes)``.  With ``enumerate_all`` the
    table carries full solution counts and every cell is exhausted.
    """
    if isinstance(graphs, tuple) and len(graphs) == 2 and isinstance(graphs[0], str):
        graphs = list(family(*graphs))
    opts = SearchOptions(predicate=predicate, enumerate_all=enumerate_all, pruning=pruning, workers=workers)
    rows = []
    for name, g in graphs:
        for x in xs:
            res = find_labelings(g, x, opts)
            rows.append({
                "graph": name,
                "n_vertices": g.n,
                "edges": [list(e) for e in g.edges],
                "ground": x.to_json(),
                "predicate": predicate,
                "admits": res.found,
                "solutions": len(res.solutions),
                "exhausted": res.exhausted,
                "nodes_expanded": res.nodes_expanded,
            })
    return rows

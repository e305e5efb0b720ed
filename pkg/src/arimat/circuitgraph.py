"""Fundamental-circuit incidence and its bipartite graph.

For a matrix in basic form (diagonal basis block B, remainder A), the 0/1
support matrix C of A is the adjacency matrix of a bipartite graph on
vertices r_1..r_d (rows) and c_{d+1}..c_N (columns of A, labelled by their
position after the basis).  A spanning forest of this graph is a
coordinatizing path; its edges carry exactly the sign freedom of the
representation.

Vertex convention used throughout: vertex i in 1..d is row r_i, vertex j
in d+1..N is column c_j, and an edge is a pair (i, j) identified with the
nonzero entry a_ij of A.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSameComponent
from .intlinalg import IntMatrix

Edge = tuple[int, int]


@dataclass(frozen=True)
class CircuitIncidence:
    """0/1 support matrix of A, with d rows and N-d columns."""

    matrix: IntMatrix

    @property
    def d(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        """Total vertex count d + (N - d) = N."""
        return self.matrix.nrows + self.matrix.ncols

    def edges(self) -> list[Edge]:
        d = self.d
        return [
            (i + 1, d + j + 1)
            for i, row in enumerate(self.matrix.entries)
            for j, e in enumerate(row)
            if e
        ]

    def neighbors(self, v: int) -> list[int]:
        d = self.d
        if v <= d:
            return [d + j + 1 for j, e in enumerate(self.matrix.entries[v - 1]) if e]
        return [i + 1 for i in range(d) if self.matrix.entries[i][v - d - 1]]


@dataclass(frozen=True)
class Forest:
    """A spanning forest of the bipartite graph, with component count.

    Edges are stored sorted; kappa counts all components including
    isolated vertices, so len(edges) == n - kappa always holds.
    """

    edges: tuple[Edge, ...]
    kappa: int
    d: int
    n: int

    def __post_init__(self):
        seen = set()
        parent = {}

        def find(v):
            while parent.get(v, v) != v:
                parent[v] = parent.get(parent[v], parent[v])
                v = parent[v]
            return v

        for i, j in self.edges:
            if not (1 <= i <= self.d < j <= self.n):
                raise ValueError(f"edge ({i},{j}) violates the bipartite convention")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i},{j})")
            seen.add((i, j))
            ri, rj = find(i), find(j)
            if ri == rj:
                raise ValueError("edges contain a cycle")
            parent[ri] = rj
        if self.kappa != self.n - len(self.edges):
            raise ValueError("component count does not match edge count")
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @classmethod
    def from_edges(cls, edges, d: int, n: int) -> "Forest":
        es = tuple(sorted(edges))
        return cls(es, n - len(es), d, n)

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in range(1, self.n + 1)}
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def components(self) -> list[tuple[int, ...]]:
        adj = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = set()
        comps = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps


@dataclass(frozen=True)
class EliminationOrder:
    """Degree-1 elimination of a forest: one (vertex, edge) step per edge."""

    steps: tuple[tuple[int, Edge], ...]


def incidence(a: IntMatrix) -> CircuitIncidence:
    """Support matrix of A: every nonzero entry becomes 1."""
    return CircuitIncidence(IntMatrix(
        tuple(tuple(int(e != 0) for e in row) for row in a.entries), ncols=a.ncols
    ))


def kappa(c: CircuitIncidence) -> int:
    """Number of connected components of the bipartite graph, counting
    isolated vertices."""
    seen = set()
    count = 0
    for v in range(1, c.n + 1):
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in c.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def coordinatizing_path(c: CircuitIncidence) -> Forest:
    """Deterministic spanning forest: depth-first search started from the
    lowest-index unvisited vertex, neighbors taken in increasing index."""
    seen = set()
    edges = []
    comps = 0
    for start in range(1, c.n + 1):
        if start in seen:
            continue
        comps += 1
        seen.add(start)
        stack = [start]
        while stack:
            u = stack[-1]
            for w in c.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    edges.append((u, w) if u <= c.d else (w, u))
                    stack.append(w)
                    break
            else:
                stack.pop()
    return Forest(tuple(sorted(edges)), comps, c.d, c.n)


def _survivors(forest: Forest) -> set[int]:
    """One protected vertex per component: maximum forest degree, ties
    broken toward the highest index.  The survivor is the vertex left
    standing by the elimination, which makes the flip sequence derived
    from the elimination reproducible."""
    deg = forest.degrees()
    out = set()
    for comp in forest.components():
        out.add(max(comp, key=lambda v: (deg[v], v)))
    return out


def elimination_order(forest: Forest) -> EliminationOrder:
    """Remove degree-1 vertices one at a time until no edges remain.

    At each step the lowest-index eligible vertex is taken, except that
    one survivor per component (see _survivors) is never eliminated.
    """
    deg = forest.degrees()
    adj = {v: set() for v in deg}
    for i, j in forest.edges:
        adj[i].add(j)
        adj[j].add(i)
    protected = _survivors(forest)
    steps = []
    remaining = set(forest.edges)
    while remaining:
        v = min(
            u for u in adj
            if deg[u] == 1 and u not in protected
        )
        w = next(iter(adj[v]))
        edge = (v, w) if v <= forest.d else (w, v)
        steps.append((v, edge))
        adj[v].remove(w)
        adj[w].remove(v)
        deg[v] -= 1
        deg[w] -= 1
        remaining.discard(edge)
    return EliminationOrder(tuple(steps))


def coordinatizing_circuit(forest: Forest, edge: Edge) -> list[Edge]:
    """The unique cycle of `forest` plus one extra edge, as an edge list
    containing the extra edge."""
    i, j = edge
    if not (1 <= i <= forest.d < j <= forest.n):
        raise ValueError(f"edge ({i},{j}) violates the bipartite convention")
    if edge in forest.edges:
        raise ValueError(f"edge {edge} already belongs to the forest")
    adj = {v: [] for v in range(1, forest.n + 1)}
    for a, b in forest.edges:
        adj[a].append(b)
        adj[b].append(a)
    # breadth-first path from i to j inside the forest
    prev = {i: None}
    queue = [i]
    while queue:
        u = queue.pop(0)
        if u == j:
            break
        for w in adj[u]:
            if w not in prev:
                prev[w] = u
                queue.append(w)
    if j not in prev:
        raise NotSameComponent(f"endpoints of {edge} lie in different components")
    cycle = []
    u = j
    while prev[u] is not None:
        p = prev[u]
        cycle.append((u, p) if u <= forest.d else (p, u))
        u = p
    cycle.reverse()
    cycle.append(edge)
    return cycle

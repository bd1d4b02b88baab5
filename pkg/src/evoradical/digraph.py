"""Finite directed graphs on ``{0, ..., n-1}`` and the associated graph of an algebra.

Adjacency is dense and boolean; the algebras handled here have at most a
few hundred basis elements.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .algebra import EvolutionAlgebra


@dataclass(frozen=True)
class DiGraph:
    n: int
    adj: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        adj = tuple(tuple(bool(a) for a in row) for row in self.adj)
        if len(adj) != self.n or any(len(row) != self.n for row in adj):
            raise ValueError(f"adjacency must be {self.n}x{self.n}")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> DiGraph:
        rows = [[False] * n for _ in range(n)]
        for u, v in edges:
            rows[u][v] = True
        return cls(n, tuple(map(tuple, rows)))

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(k for k, a in enumerate(row) if a) for row in self.adj)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(i for i in range(self.n) if self.adj[i][k]) for k in range(self.n))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges in row-major order."""
        for u, out in enumerate(self.succ):
            for v in out:
                yield u, v

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())


@dataclass(frozen=True)
class VertexClassification:
    cyclic: frozenset[int]
    acyclic: frozenset[int]


def from_algebra(alg: EvolutionAlgebra) -> DiGraph:
    """The associated graph: edge ``i -> k`` iff ``w_ik != 0``."""
    return DiGraph(alg.dim, tuple(tuple(bool(w) for w in row) for row in alg.matrix))


def descendants_1(g: DiGraph, S: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for v in S:
        out.update(g.succ[v])
    return frozenset(out)


def descendants_m(g: DiGraph, v: int, m: int) -> frozenset[int]:
    if m < 1:
        raise ValueError("m must be >= 1")
    layer = frozenset((v,))
    for _ in range(m):
        layer = descendants_1(g, layer)
        if not layer:
            break
    return layer


def descendants_all(g: DiGraph, v: int) -> frozenset[int]:
    """Vertices reachable from ``v`` by a path of length >= 1."""
    seen: set[int] = set()
    queue = deque(g.succ[v])
    while queue:
        u = queue.popleft()
        if u in seen:
            continue
        seen.add(u)
        queue.extend(w for w in g.succ[u] if w not in seen)
    return frozenset(seen)


def strongly_connected_components(g: DiGraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in reverse topological order."""
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            out = g.succ[v]
            if pos < len(out):
                work[-1] = (v, pos + 1)
                w = out[pos]
                if index[w] == -1:
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
    return sccs


def classify_vertices(g: DiGraph) -> VertexClassification:
    """Split vertices into cyclic (some cycle is reachable) and acyclic.

    A vertex lies on a cycle iff its strongly connected component has more
    than one vertex or carries a loop.  The cyclic vertices are exactly those
    that reach such a vertex, found by a backward search.
    """
    on_cycle = [
        v
        for comp in strongly_connected_components(g)
        for v in comp
        if len(comp) > 1 or g.adj[comp[0]][comp[0]]
    ]
    cyclic = set(on_cycle)
    queue = deque(on_cycle)
    while queue:
        v = queue.popleft()
        for u in g.pred[v]:
            if u not in cyclic:
                cyclic.add(u)
                queue.append(u)
    return VertexClassification(frozenset(cyclic), frozenset(range(g.n)) - cyclic)


def weak_components(g: DiGraph) -> list[frozenset[int]]:
    """Components of the underlying undirected graph, ordered by least vertex."""
    comp_of = [-1] * g.n
    comps = []
    for start in range(g.n):
        if comp_of[start] != -1:
            continue
        cid = len(comps)
        comp_of[start] = cid
        members = [start]
        queue = deque((start,))
        while queue:
            v = queue.popleft()
            for u in g.succ[v] + g.pred[v]:
                if comp_of[u] == -1:
                    comp_of[u] = cid
                    members.append(u)
                    queue.append(u)
        comps.append(frozenset(members))
    return comps


def is_connected(g: DiGraph) -> bool:
    if g.n < 1:
        raise ValueError("connectivity is undefined for the empty graph")
    return len(weak_components(g)) == 1


def full_subgraph(g: DiGraph, S: Iterable[int]) -> DiGraph:
    """Induced subgraph on ``S``, relabelled ``0..|S|-1`` in ascending order of ``S``."""
    verts = sorted(set(S))
    return DiGraph(len(verts), tuple(tuple(g.adj[u][v] for v in verts) for u in verts))


def is_acyclic(g: DiGraph) -> bool:
    return not classify_vertices(g).cyclic

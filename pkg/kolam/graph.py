"""
Directed-graph view of a kolam.

Every dot is a vertex identified by its exact (radius, arm) pair and every
stroke of the closed path is a directed edge. A single-stroke kolam is a
connected graph whose vertices all have in-degree equal to out-degree, which
is exactly the condition for a directed Eulerian circuit.
"""
from __future__ import annotations

import json
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx

from kolam.layout import ClosedPath

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class KolamGraph:
    vertices: tuple  # first-visit order
    edges: tuple  # (tail, head) pairs in stroke order

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "KolamGraph":
        edges = tuple((tuple(u), tuple(v)) for u, v in edges)
        seen = {}
        for u, v in edges:
            seen.setdefault(u, None)
            seen.setdefault(v, None)
        return cls(vertices=tuple(seen), edges=edges)

    def in_degrees(self) -> Counter:
        degrees = Counter({v: 0 for v in self.vertices})
        degrees.update(v for _, v in self.edges)
        return degrees

    def out_degrees(self) -> Counter:
        degrees = Counter({v: 0 for v in self.vertices})
        degrees.update(u for u, _ in self.edges)
        return degrees

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class EulerReport:
    degree_balanced: bool
    connected: bool
    circuit: Optional[tuple]  # edges in Hierholzer order, None without a circuit
    component_count: int
    visits_each_dot_once: bool
    unbalanced: tuple = ()

    @property
    def is_single_stroke(self) -> bool:
        return self.degree_balanced and self.connected


def build_graph(path: ClosedPath) -> KolamGraph:
    """Edge i runs from points[i] to points[i + 1]."""
    edges = tuple((a.key, b.key) for a, b in zip(path.points, path.points[1:]))
    vertices = tuple(dict.fromkeys(p.key for p in path.dots))
    return KolamGraph(vertices=vertices, edges=edges)


def hierholzer(graph: KolamGraph, start: Optional[Vertex] = None) -> list[Edge]:
    """
    Directed Hierholzer walk over the edge list.

    Out-edges are consumed in edge-list order, so the result is deterministic.
    Returns the circuit as a list of edges, or an empty list when the edges do
    not form one closed walk from ``start``.
    """
    if not graph.edges:
        return []
    outgoing: dict = defaultdict(deque)
    for index, (u, v) in enumerate(graph.edges):
        outgoing[u].append((index, v))
    if start is None:
        start = graph.edges[0][0]
    if start not in outgoing:
        return []

    stack = [(start, None)]
    circuit = []
    while stack:
        vertex, via = stack[-1]
        if outgoing[vertex]:
            index, head = outgoing[vertex].popleft()
            stack.append((head, index))
        else:
            stack.pop()
            if via is not None:
                circuit.append(graph.edges[via])
    circuit.reverse()
    if len(circuit) != len(graph.edges) or circuit[-1][1] != start:
        return []
    return circuit


def verify_eulerian(graph: KolamGraph) -> EulerReport:
    ins = graph.in_degrees()
    outs = graph.out_degrees()
    unbalanced = tuple(v for v in graph.vertices if ins[v] != outs[v])
    degree_balanced = not unbalanced

    # every vertex must sit in one strongly connected component that carries an edge
    digraph = graph.to_networkx()
    components = list(nx.strongly_connected_components(digraph))
    nontrivial = [c for c in components if len(c) > 1 or digraph.has_edge(next(iter(c)), next(iter(c)))]
    connected = (
        bool(graph.vertices)
        and len(nontrivial) == 1
        and len(nontrivial[0]) == len(graph.vertices)
    )

    circuit = None
    if degree_balanced and connected:
        walk = hierholzer(graph)
        circuit = tuple(walk) if walk else None

    return EulerReport(
        degree_balanced=degree_balanced,
        connected=connected,
        circuit=circuit,
        component_count=len(nontrivial),
        visits_each_dot_once=all(ins[v] == outs[v] == 1 for v in graph.vertices),
        unbalanced=unbalanced,
    )


def circuit_vertices(circuit: Iterable[Edge]) -> list[Vertex]:
    """Vertex sequence of a circuit, closing vertex included."""
    circuit = list(circuit)
    if not circuit:
        return []
    return [u for u, _ in circuit] + [circuit[-1][1]]


def rotate_edges(graph: KolamGraph, arms: int, steps: int = 1) -> set:
    """Edge set with every vertex (r, a) moved to (r, (a + steps) mod arms)."""
    return {
        ((u[0], (u[1] + steps) % arms), (v[0], (v[1] + steps) % arms))
        for u, v in graph.edges
    }


def dump_graph_json(graph: KolamGraph) -> str:
    index = {v: i for i, v in enumerate(graph.vertices)}
    payload = {
        "vertices": [list(v) for v in graph.vertices],
        "edges": [[index[u], index[v]] for u, v in graph.edges],
    }
    return json.dumps(payload, separators=(",", ":"))

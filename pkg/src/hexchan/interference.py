"""Interference graphs over lattice cells.

Vertices are cells; an edge joins two cells whose integer lattice metric is
strictly below the reuse threshold (cells exactly at the reuse distance may
share a channel, so they are not adjacent).  Adjacency is computed by a
pairwise metric scan, which is fine at the network sizes this targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .lattice import CellIndex, Lattice, lattice_metric


@dataclass(frozen=True)
class InterferenceGraph:
    """Undirected simple graph on an ordered tuple of cells."""

    vertices: tuple[CellIndex, ...]
    edges: frozenset[tuple[CellIndex, CellIndex]]

    def __post_init__(self) -> None:
        index = {v: k for k, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        adj: dict[CellIndex, set[CellIndex]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            if a == b:
                raise ValueError("self-loop")
            if a not in index or b not in index:
                raise ValueError("edge references unknown vertex")
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", {v: frozenset(ns) for v, ns in adj.items()})

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: CellIndex) -> frozenset[CellIndex]:
        return self._adj[v]  # type: ignore[attr-defined]

    def has_edge(self, a: CellIndex, b: CellIndex) -> bool:
        return b in self._adj[a]  # type: ignore[attr-defined]

    def vertex_position(self, v: CellIndex) -> int:
        return self._index[v]  # type: ignore[attr-defined]

    def edge_index_pairs(self) -> list[tuple[int, int]]:
        """Edges as (lower, higher) vertex positions, sorted; solver input."""
        index = self._index  # type: ignore[attr-defined]
        pairs = []
        for a, b in self.edges:
            ia, ib = index[a], index[b]
            pairs.append((ia, ib) if ia < ib else (ib, ia))
        return sorted(pairs)


def _normalized_edge(a: CellIndex, b: CellIndex, index: dict[CellIndex, int]) -> tuple[CellIndex, CellIndex]:
    return (a, b) if index[a] < index[b] else (b, a)


def build_interference_graph(
    lattice: Lattice, active_cells: Iterable[CellIndex] | None, metric_threshold: int
) -> InterferenceGraph:
    """Graph on ``active_cells`` (default: every lattice cell).

    Edge iff metric(a, b) < metric_threshold; the strict comparison makes
    cells exactly at the reuse distance channel-compatible.
    """
    if metric_threshold <= 0:
        raise ValueError("metric_threshold must be positive")
    if active_cells is None:
        vertices = lattice.cells
    else:
        wanted = set(active_cells)
        for c in wanted:
            lattice.require(c)
        vertices = tuple(c for c in lattice.cells if c in wanted)
    index = {v: k for k, v in enumerate(vertices)}
    edges = set()
    for p, a in enumerate(vertices):
        for b in vertices[p + 1 :]:
            if lattice_metric(a, b) < metric_threshold:
                edges.add(_normalized_edge(a, b, index))
    return InterferenceGraph(vertices=vertices, edges=frozenset(edges))


def subgraph_on(graph: InterferenceGraph, keep: Iterable[CellIndex]) -> InterferenceGraph:
    """Induced subgraph, preserving the parent vertex order."""
    keep_set = set(keep)
    unknown = keep_set - set(graph.vertices)
    if unknown:
        raise ValueError(f"vertices not in graph: {sorted((c.i, c.j) for c in unknown)}")
    vertices = tuple(v for v in graph.vertices if v in keep_set)
    edges = frozenset((a, b) for a, b in graph.edges if a in keep_set and b in keep_set)
    return InterferenceGraph(vertices=vertices, edges=edges)


def connected_components(graph: InterferenceGraph) -> list[tuple[CellIndex, ...]]:
    """Components ordered by their first vertex, each in parent vertex order."""
    seen: set[CellIndex] = set()
    components = []
    for start in graph.vertices:
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(graph.neighbors(v) - comp)
        seen |= comp
        components.append(tuple(v for v in graph.vertices if v in comp))
    return components


def edge_list_text(graph: InterferenceGraph) -> str:
    """Plain-text edge list, one ``i1 j1 i2 j2`` line per edge."""
    lines = []
    for a, b in sorted(graph.edges, key=lambda e: (graph.vertex_position(e[0]), graph.vertex_position(e[1]))):
        lines.append(f"{a.i} {a.j} {b.i} {b.j}")
    return "\n".join(lines) + ("\n" if lines else "")

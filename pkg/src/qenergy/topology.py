"""Qubit coupling graphs, distance metrics and the SWAP routing-depth model.

Routing on a solid-state device is modeled statistically: every layer that
holds a two-qubit gate pays ``3 * ceil((d_avg - 1) / 2)`` extra layers, where
``d_avg`` is the mean shortest-path distance over distinct node pairs. A SWAP
costs three CNOT layers and swaps can run from both ends of the path at once.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .exceptions import ConfigError, DisconnectedGraphError, DomainError


class GraphFamily(str, Enum):
    LINEAR = "linear"
    CIRCULAR = "circular"
    SQUARE_LATTICE = "grid"
    HEAVY_HEX = "heavyhex"
    FULLY_CONNECTED = "full"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CouplingGraph:
    n_nodes: int
    edges: frozenset[tuple[int, int]]
    family: GraphFamily = GraphFamily.CUSTOM
    label: str = ""

    def __post_init__(self):
        if self.n_nodes < 1:
            raise DomainError("a coupling graph needs at least one node")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ConfigError(f"self-loop on node {u}", "edges")
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise ConfigError(f"edge ({u}, {v}) references a node outside 0..{self.n_nodes - 1}", "edges")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if not self.label:
            object.__setattr__(self, "label", f"{self.family.value}-{self.n_nodes}")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency()]


def _from_edge_list(n: int, edges: Iterable[tuple[int, int]], family: GraphFamily, label: str = "") -> CouplingGraph:
    edge_list = list(edges)
    norm = [(min(u, v), max(u, v)) for u, v in edge_list]
    if len(set(norm)) != len(norm):
        raise ConfigError("duplicate edge (multi-edges are not allowed)", "edges")
    return CouplingGraph(n, frozenset(norm), family, label)


def linear_graph(n: int) -> CouplingGraph:
    if n < 2:
        raise DomainError(f"linear graph needs n >= 2, got {n}")
    return _from_edge_list(n, ((i, i + 1) for i in range(n - 1)), GraphFamily.LINEAR)


def circular_graph(n: int) -> CouplingGraph:
    if n < 3:
        raise DomainError(f"circular graph needs n >= 3, got {n}")
    # n=2 would collapse onto a single edge, hence the stricter bound.
    return _from_edge_list(n, ((i, (i + 1) % n) for i in range(n)), GraphFamily.CIRCULAR)


def square_lattice(rows: int, cols: int) -> CouplingGraph:
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise DomainError(f"square lattice needs rows, cols >= 1 and at least 2 nodes, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            i = r * cols + c
            if c + 1 < cols:
                edges.append((i, i + 1))
            if r + 1 < rows:
                edges.append((i, i + cols))
    return _from_edge_list(rows * cols, edges, GraphFamily.SQUARE_LATTICE, f"grid-{rows}x{cols}")


def _hexagonal_lattice(rows: int, cols: int) -> tuple[list[tuple[int, int]], list[tuple[tuple[int, int], tuple[int, int]]]]:
    # Brick-wall embedding: node (i, j) with column i in 0..cols and
    # j in 0..2*rows+1 along each vertical zig-zag chain.
    height = 2 * rows + 2
    nodes = {(i, j) for i in range(cols + 1) for j in range(height)}
    edges = [((i, j), (i, j + 1)) for i in range(cols + 1) for j in range(height - 1)]
    edges += [((i, j), (i + 1, j)) for i in range(cols) for j in range(height) if i % 2 == j % 2]
    # The two corner nodes of the embedding carry a single dangling edge.
    for corner in ((0, height - 1), (cols, (height - 1) * (cols % 2))):
        nodes.discard(corner)
        edges = [e for e in edges if corner not in e]
    return sorted(nodes), edges


def heavy_hex(rows: int, cols: int) -> CouplingGraph:
    """Hexagonal lattice of ``rows x cols`` cells with every edge subdivided once.

    Lattice vertices keep degree <= 3 and every inserted node has degree 2.
    Node ids are lattice vertices first (sorted), then the inserted nodes in
    sorted edge order.
    """
    if rows < 1 or cols < 1:
        raise DomainError(f"heavy-hex lattice needs rows, cols >= 1, got {rows}x{cols}")
    nodes, hex_edges = _hexagonal_lattice(rows, cols)
    index = {node: k for k, node in enumerate(nodes)}
    edges = []
    nxt = len(nodes)
    for a, b in sorted((min(e), max(e)) for e in hex_edges):
        edges.append((index[a], nxt))
        edges.append((nxt, index[b]))
        nxt += 1
    return _from_edge_list(nxt, edges, GraphFamily.HEAVY_HEX, f"heavyhex-{rows}x{cols}")


def fully_connected(n: int) -> CouplingGraph:
    if n < 2:
        raise DomainError(f"fully connected graph needs n >= 2, got {n}")
    return _from_edge_list(n, ((i, j) for i in range(n) for j in range(i + 1, n)), GraphFamily.FULLY_CONNECTED)


def build_graph(family: GraphFamily | str, n: int | None = None, rows: int | None = None, cols: int | None = None) -> CouplingGraph:
    """Construct a graph of ``family``; linear/circular/full take ``n``, lattices take ``rows`` and ``cols``."""
    family = GraphFamily(family)

    def need(value, name):
        if value is None:
            raise ConfigError(f"family {family.value!r} requires {name!r}", name)
        return int(value)

    if family is GraphFamily.LINEAR:
        return linear_graph(need(n, "n"))
    if family is GraphFamily.CIRCULAR:
        return circular_graph(need(n, "n"))
    if family is GraphFamily.FULLY_CONNECTED:
        return fully_connected(need(n, "n"))
    if family is GraphFamily.SQUARE_LATTICE:
        return square_lattice(need(rows, "rows"), need(cols, "cols"))
    if family is GraphFamily.HEAVY_HEX:
        return heavy_hex(need(rows, "rows"), need(cols, "cols"))
    raise ConfigError("custom graphs are loaded with read_edge_list", "family")


def parse_edge_list(text: str, label: str = "custom") -> CouplingGraph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ConfigError("first line must be 'n m'", "edges")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError:
        raise ConfigError("edge list entries must be integer pairs", "edges") from None
    if len(edges) != m:
        raise ConfigError(f"header declares {m} edges but {len(edges)} were given", "edges")
    return _from_edge_list(n, edges, GraphFamily.CUSTOM, label)


def read_edge_list(path: str | Path) -> CouplingGraph:
    path = Path(path)
    return parse_edge_list(path.read_text(encoding="utf-8"), label=path.stem)


def format_edge_list(g: CouplingGraph) -> str:
    lines = [f"{g.n_nodes} {g.n_edges}"] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


class GraphMetrics(NamedTuple):
    avg_shortest_path: float
    diameter: int
    n_nodes: int
    n_edges: int
    total_distance: int  # sum of d(u, v) over unordered pairs u < v

    @property
    def n_pairs(self) -> int:
        return self.n_nodes * (self.n_nodes - 1) // 2


def distance_matrix(g: CouplingGraph) -> list[list[int]]:
    """All-pairs hop distances via one BFS per source."""
    adj = g.adjacency()
    out = []
    for src in range(g.n_nodes):
        dist = [-1] * g.n_nodes
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        for v, d in enumerate(dist):
            if d < 0:
                raise DisconnectedGraphError(src, v)
        out.append(dist)
    return out


def metrics(g: CouplingGraph) -> GraphMetrics:
    if g.n_nodes < 2:
        raise DomainError("distance metrics need at least two nodes")
    dist = distance_matrix(g)
    total = sum(dist[u][v] for u in range(g.n_nodes) for v in range(u + 1, g.n_nodes))
    diameter = max(max(row) for row in dist)
    pairs = g.n_nodes * (g.n_nodes - 1) // 2
    return GraphMetrics(total / pairs, diameter, g.n_nodes, g.n_edges, total)


class RoutingInput(NamedTuple):
    d0: int
    alpha_2q: float


def _check_routing_input(r: RoutingInput) -> None:
    if r.d0 < 1 or int(r.d0) != r.d0:
        raise DomainError(f"pre-routing depth must be a positive integer, got {r.d0}")
    if not 0.0 <= r.alpha_2q <= 1.0:
        raise DomainError(f"alpha_2q must lie in [0, 1], got {r.alpha_2q}")


def swap_layers(m: GraphMetrics, bound: str = "average") -> int:
    """``ceil((d - 1) / 2)`` for the average distance (or the diameter).

    The average case is evaluated in exact integer arithmetic from the pair
    distance sum so that integral ratios are never pushed over by rounding.
    """
    if bound == "diameter":
        return -(-(m.diameter - 1) // 2)
    if bound != "average":
        raise ConfigError(f"unknown routing bound {bound!r}", "bound")
    pairs = m.n_pairs
    # ceil((S/pairs - 1) / 2) == ceil((S - pairs) / (2 * pairs))
    return max(0, -(-(m.total_distance - pairs) // (2 * pairs)))


def depth_multiplier(alpha_2q: float, m: GraphMetrics, bound: str = "average") -> float:
    return 1.0 + alpha_2q * 3 * swap_layers(m, bound)


def post_routing_depth(r: RoutingInput, g: CouplingGraph | GraphMetrics, bound: str = "average") -> int:
    """Depth after SWAP routing, ``round(D0 * (1 + 3 * alpha_2q * ceil((d - 1) / 2)))``.

    ``bound="diameter"`` substitutes the graph diameter for the mean distance,
    giving an upper estimate. Accepts precomputed metrics to avoid repeated
    all-pairs searches in sweeps.
    """
    _check_routing_input(r)
    m = g if isinstance(g, GraphMetrics) else metrics(g)
    return int(math.floor(r.d0 * depth_multiplier(r.alpha_2q, m, bound) + 0.5))


class RoutingRow(NamedTuple):
    family: str
    n: int
    d_avg: float
    diameter: int
    d0: int
    alpha_2q: float
    depth: int


ROUTING_COLUMNS = RoutingRow._fields


def routing_sweep(
    graphs: Sequence[CouplingGraph], d0_values: Sequence[int], alphas: Sequence[float], bound: str = "average"
) -> list[RoutingRow]:
    """One row per (graph, D0, alpha) in the order given."""
    if not graphs or not d0_values or not alphas:
        raise DomainError("routing sweep needs at least one graph, one D0 and one alpha")
    rows = []
    for g in graphs:
        m = metrics(g)
        for d0 in d0_values:
            for alpha in alphas:
                depth = post_routing_depth(RoutingInput(d0, alpha), m, bound)
                rows.append(RoutingRow(g.label, g.n_nodes, m.avg_shortest_path, m.diameter, d0, alpha, depth))
    return rows


def is_connected(g: CouplingGraph) -> bool:
    try:
        distance_matrix(g)
    except DisconnectedGraphError:
        return False
    return True


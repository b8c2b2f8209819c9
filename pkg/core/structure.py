"""Structural utilities: components, induced subgraphs, line graphs, unicyclic graphs"""
import logging

import networkx as nx

from core.graph import Graph, VertexSet, CycleInfo
from utils.log import ArgumentError, PreconditionError
from utils.process import iter_bits, popcount

logger = logging.getLogger()


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """
    Connected components as bitsets, ordered by smallest member.

    Args:
        g (Graph): host graph
        within (int | None): restrict to the subgraph induced by this bitset
    """
    remaining = g.vertex_mask if within is None else within
    components = []
    while remaining:
        seed = remaining & -remaining
        comp, frontier = seed, seed
        while frontier:
            frontier = g.neighbor_mask(frontier) & remaining & ~comp
            comp |= frontier
        components.append(comp)
        remaining &= ~comp
    return components


def connected_components(g: Graph) -> list[VertexSet]:
    """Partition of the vertices into maximal connected sets, sorted by smallest member"""
    return [VertexSet.from_mask(m, g.n) for m in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """The null graph counts as disconnected, K1 as connected"""
    return len(component_masks(g)) == 1


def induced_subgraph(g: Graph, t: VertexSet | list[int] | int) -> tuple[Graph, dict[int, int]]:
    """
    G[T] relabeled to 0..|T|-1 in ascending order of the old labels.

    Args:
        g (Graph): host graph
        t (VertexSet | list[int] | int): vertex subset, as a VertexSet, a list or a bitset

    Returns:
        tuple[Graph, dict[int, int]]: the induced subgraph and the map old label -> new label
    """
    if isinstance(t, int):
        members = list(iter_bits(t))
    else:
        members = sorted(set(t))
    for v in members:
        if not 0 <= v < g.n:
            raise ArgumentError(f"vertex {v} is not a vertex of a graph on {g.n} vertices")
    relabel = {old: new for new, old in enumerate(members)}
    edges = [(relabel[u], relabel[v]) for u in members for v in g.neighbors(u) if v > u and v in relabel]
    return Graph.from_edges(len(members), edges), relabel


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """
    L(G): one vertex per edge of g, ordered lexicographically on (min, max) endpoints.

    Returns:
        tuple[Graph, list[tuple[int, int]]]: the line graph and, for each of its
            vertices, the original edge
    """
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = []
    for around in incident:
        for a in range(len(around)):
            for b in range(a + 1, len(around)):
                pairs.append((around[a], around[b]))
    return Graph.from_edges(len(edges), pairs), edges


def is_unicyclic(g: Graph) -> bool:
    """Connected with as many edges as vertices"""
    return g.n > 0 and is_connected(g) and g.num_edges == g.n


def two_core_mask(g: Graph) -> int:
    """Vertices left after repeatedly deleting vertices of degree at most 1"""
    alive = g.vertex_mask
    degree = [g.degree(v) for v in range(g.n)]
    stack = [v for v in range(g.n) if degree[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in iter_bits(g.adj[v] & alive):
            degree[u] -= 1
            if degree[u] == 1:
                stack.append(u)
    return alive


def find_unique_cycle(g: Graph) -> CycleInfo:
    """
    The only cycle of a unicyclic graph, walked from its smallest vertex
    towards its smaller cycle neighbor.

    Raises:
        PreconditionError: g is not unicyclic
    """
    if not is_unicyclic(g):
        raise PreconditionError(f"graph is not unicyclic: {g}")
    core = two_core_mask(g)
    start = (core & -core).bit_length() - 1
    walk = [start]
    prev, cur = start, min(iter_bits(g.adj[start] & core))
    while cur != start:
        walk.append(cur)
        nxt = [u for u in iter_bits(g.adj[cur] & core) if u != prev]
        prev, cur = cur, nxt[0]
    return CycleInfo(tuple(walk))


def is_two_edge_connected(g: Graph) -> bool:
    """Connected, at least 2 vertices, and no bridge"""
    if g.n < 2 or not is_connected(g):
        return False
    return not nx.has_bridges(g.to_networkx())


def edges_inside(g: Graph, mask: int) -> int:
    """Number of edges of g with both endpoints in `mask`"""
    return sum(popcount(g.adj[v] & mask) for v in iter_bits(mask)) // 2

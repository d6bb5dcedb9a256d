"""Bridges, bridgeless components, chains and closed-ear decompositions."""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import NotABridgeError, NotConnectedError, NotTwoEdgeConnectedError
from .graph_core import Edge, Graph, WeightedGraph, _edge, as_graph, as_weighted


@dataclass(frozen=True)
class BridgeInfo:
    edge: Edge
    order: int


def _bridges_with_weights(g: Graph, weight: Sequence[int]) -> list[BridgeInfo]:
    """Low-link bridge search over every component; orders use side weights."""
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    sub = [0] * n
    out = []
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        found = []
        disc[root] = low[root] = clock
        clock += 1
        sub[root] = weight[root]
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for u in it:
                if u == parent:
                    continue
                if disc[u] == -1:
                    disc[u] = low[u] = clock
                    clock += 1
                    sub[u] = weight[u]
                    stack.append((u, v, iter(adj[u])))
                    break
                low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    sub[parent] += sub[v]
                    if low[v] > disc[parent]:
                        found.append((parent, v))
        total = sub[root]
        for p, c in found:
            out.append(BridgeInfo(_edge(p, c), min(sub[c], total - sub[c])))
    out.sort(key=lambda b: b.edge)
    return out


def find_bridges(g: Graph | WeightedGraph) -> list[BridgeInfo]:
    """All cut edges of a connected graph, sorted, with their orders.

    The order of a bridge is the smaller total weight of the two sides left
    after deleting it; unweighted graphs count vertices.
    """
    wg = as_weighted(g)
    if not wg.graph.is_connected():
        raise NotConnectedError("find_bridges expects a connected graph")
    return _bridges_with_weights(wg.graph, wg.weight)


def side_of(g: Graph, e: Edge, start: int) -> set[int]:
    """Vertices reachable from ``start`` once edge ``e`` is deleted."""
    a, b = e
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if (v == a and u == b) or (v == b and u == a):
                continue
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def bridge_order(wg: Graph | WeightedGraph, e: tuple[int, int]) -> int:
    wg = as_weighted(wg)
    g = wg.graph
    u, v = e
    if not g.has_edge(u, v):
        raise NotABridgeError(f"{u}-{v} is not an edge")
    left = side_of(g, (u, v), u)
    if v in left:
        raise NotABridgeError(f"{u}-{v} lies on a cycle")
    right = side_of(g, (u, v), v)
    return min(wg.side_weight(left), wg.side_weight(right))


def bridgeless_components(g: Graph | WeightedGraph) -> list[list[int]]:
    """2-edge-connected components (single vertices included), by smallest vertex."""
    g = as_graph(g)
    cut = {b.edge for b in _bridges_with_weights(g, (1,) * g.n)}
    stripped = Graph(tuple(
        tuple(u for u in nbrs if _edge(v, u) not in cut) for v, nbrs in enumerate(g.adjacency)
    ))
    return stripped.components()


def is_two_edge_connected(g: Graph | WeightedGraph) -> bool:
    g = as_graph(g)
    return g.n >= 3 and g.is_connected() and not _bridges_with_weights(g, (1,) * g.n)


@dataclass(frozen=True)
class ChainDecomposition:
    components: tuple[frozenset[int], ...]
    links: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.components)

    @property
    def trivial_flags(self) -> tuple[bool, ...]:
        return tuple(len(c) == 1 for c in self.components)

    @property
    def eta(self) -> int:
        """Number of vertices lying in nontrivial components."""
        return sum(len(c) for c in self.components if len(c) > 1)

    def index_of(self, v: int) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise KeyError(v)


def chain_decomposition(g: Graph | WeightedGraph) -> ChainDecomposition | None:
    """Bridgeless components in path order, or None when they do not form a path.

    Each link ``(u, v)`` is the bridge from component i (``u``) to i+1 (``v``).
    The first component is the end of the path holding the smallest vertex.
    """
    g = as_graph(g)
    if not g.is_connected():
        raise NotConnectedError("chain_decomposition expects a connected graph")
    comps = bridgeless_components(g)
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    tree: dict[int, dict[int, Edge]] = {i: {} for i in range(len(comps))}
    for b in _bridges_with_weights(g, (1,) * g.n):
        u, v = b.edge
        cu, cv = comp_of[u], comp_of[v]
        tree[cu][cv] = (u, v)
        tree[cv][cu] = (v, u)
    if any(len(nb) > 2 for nb in tree.values()):
        return None
    ends = [i for i, nb in tree.items() if len(nb) <= 1]
    cur = min(ends, key=lambda i: comps[i][0])
    order, links = [cur], []
    prev = None
    while True:
        nxt = [j for j in tree[cur] if j != prev]
        if not nxt:
            break
        links.append(tree[cur][nxt[0]])
        prev, cur = cur, nxt[0]
        order.append(cur)
    return ChainDecomposition(tuple(frozenset(comps[i]) for i in order), tuple(links))


@dataclass(frozen=True)
class EarDecomposition:
    """Ears as vertex walks; a cycle ear repeats its first vertex at the end."""

    ears: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    def edge_sets(self) -> list[frozenset[Edge]]:
        return [frozenset(_edge(a, b) for a, b in zip(ear, ear[1:])) for ear in self.ears]


def _shortest_path_avoiding(g: Graph, src: int, dst_set, banned_edge: Edge, blocked=frozenset()):
    """BFS from ``src`` to the nearest vertex of ``dst_set`` not using ``banned_edge``.

    Vertices in ``blocked`` (other than targets) are never entered.
    """
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if _edge(u, v) == banned_edge or u in parent:
                continue
            parent[u] = v
            if u in dst_set:
                path = [u]
                while path[-1] != src:
                    path.append(parent[path[-1]])
                return path[::-1]
            if u in blocked:
                continue
            queue.append(u)
    return None


def _check_cycle(g: Graph, cycle: Sequence[int]) -> tuple[int, ...]:
    cyc = tuple(cycle)
    if len(cyc) > 3 and cyc[0] == cyc[-1]:
        cyc = cyc[:-1]
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise ValueError(f"{list(cycle)} is not a cycle")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not (0 <= a < g.n) or not g.has_edge(a, b):
            raise ValueError(f"{list(cycle)} is not a cycle of the graph")
    return cyc


def ear_decomposition(g: Graph | WeightedGraph, first_cycle: Sequence[int] | None = None) -> EarDecomposition:
    """Closed-ear decomposition grown greedily from ``first_cycle``.

    Without ``first_cycle`` the shortest cycle through the first edge of the
    smallest vertex is used.
    """
    g = as_graph(g)
    if not is_two_edge_connected(g):
        raise NotTwoEdgeConnectedError("ear decomposition needs a 2-edge-connected graph")
    if first_cycle is None:
        u = 0
        v = g.adjacency[0][0]
        path = _shortest_path_avoiding(g, v, {u}, _edge(u, v))
        cyc = (u,) + tuple(path[:-1])
    else:
        cyc = _check_cycle(g, first_cycle)
    ears = [cyc + cyc[:1]]
    kinds = ["cycle"]
    in_h = set(cyc)
    used = {_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    while len(used) < g.m:
        start = next(
            (x, y) for x in sorted(in_h) for y in g.adjacency[x] if _edge(x, y) not in used
        )
        x, y = start
        if y in in_h:
            walk = (x, y)
        else:
            rest = _shortest_path_avoiding(g, y, in_h, _edge(x, y), blocked=in_h)
            walk = (x,) + tuple(rest)
        kinds.append("cycle" if walk[0] == walk[-1] else "path")
        ears.append(walk)
        in_h.update(walk)
        used.update(_edge(a, b) for a, b in zip(walk, walk[1:]))
    return EarDecomposition(tuple(ears), tuple(kinds))


def check_ear_decomposition(g: Graph, dec: EarDecomposition) -> None:
    """Raise ValueError unless ``dec`` satisfies every closed-ear invariant."""
    sets = dec.edge_sets()
    all_edges = [e for s in sets for e in s]
    if len(all_edges) != len(set(all_edges)) or set(all_edges) != set(g.edges()):
        raise ValueError("ears do not partition the edge set")
    seen: set[int] = set()
    for j, (ear, kind) in enumerate(zip(dec.ears, dec.kinds)):
        is_cycle = ear[0] == ear[-1]
        inner = ear[1:-1]
        distinct = ear[:-1] if is_cycle else ear
        if len(set(distinct)) != len(distinct) or len(sets[j]) != len(ear) - 1:
            raise ValueError(f"ear {j} repeats a vertex")
        if j == 0:
            if not is_cycle or kind != "cycle":
                raise ValueError("first ear must be a cycle")
        else:
            if kind != ("cycle" if is_cycle else "path"):
                raise ValueError(f"ear {j} has the wrong kind")
            if ear[0] not in seen or ear[-1] not in seen:
                raise ValueError(f"ear {j} does not attach to the earlier ears")
            if any(v in seen for v in inner):
                raise ValueError(f"ear {j} has an old interior vertex")
        seen.update(ear)
        prefix_edges = [e for s in sets[: j + 1] for e in s]
        verts = sorted({v for e in prefix_edges for v in e})
        sub, _ = Graph.from_edges(g.n, prefix_edges).induced(verts)
        if not is_two_edge_connected(sub):
            raise ValueError(f"prefix ending at ear {j} is not 2-edge-connected")

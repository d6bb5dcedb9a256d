"""Graphs, orderings and profile evaluation.

Vertices are dense integers ``0..n-1``. Positions are 1-based, so for an
ordering ``a`` of an unweighted graph ``a.position[v]`` ranges over ``1..n``.

Weighted graphs follow the pendant-weight model: only vertices of degree one
may carry a weight above one, and a weighted pendant stands for that many
twin pendants of its neighbour. Orderings of weighted graphs are block
permutations, where vertex ``v`` occupies ``weight[v]`` consecutive slots and
its position is the first of them.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidGraphError, InvalidOrderingError, NotAChainError

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as sorted neighbour tuples."""

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.adjacency)
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InvalidGraphError(f"neighbours of {v} must be sorted and distinct")
            for u in nbrs:
                if not 0 <= u < n:
                    raise InvalidGraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise InvalidGraphError(f"self-loop at {v}")
                if v not in self.neighbor_set(u):
                    raise InvalidGraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidGraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge {u}-{v} out of range for n={n}")
            if v in nbrs[u]:
                raise InvalidGraphError(f"parallel edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(tuple(() for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def m(self) -> int:
        return self.edge_count

    @cached_property
    def _sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        out = []
        for nbrs in self.adjacency:
            mask = 0
            for u in nbrs:
                mask |= 1 << u
            out.append(mask)
        return tuple(out)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def pendant_neighbors(self, x: int) -> tuple[int, ...]:
        """N_1(x): the neighbours of ``x`` that have degree one."""
        return tuple(u for u in self.adjacency[x] if len(self.adjacency[u]) == 1)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                v = stack.pop()
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph relabelled densely; returns it with new-id -> old-id."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        adjacency = tuple(
            tuple(sorted(index[u] for u in self.adjacency[v] if u in index)) for v in keep
        )
        return Graph(adjacency), keep

    def without_edge(self, u: int, v: int) -> Graph:
        adj = [list(nbrs) for nbrs in self.adjacency]
        adj[u].remove(v)
        adj[v].remove(u)
        return Graph(tuple(tuple(a) for a in adj))


@dataclass(frozen=True)
class WeightedGraph:
    """Graph whose degree-one vertices carry positive integral weights."""

    graph: Graph
    weight: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        if len(self.weight) != g.n:
            raise InvalidGraphError("one weight per vertex required")
        for v, w in enumerate(self.weight):
            if not isinstance(w, int) or w < 1:
                raise InvalidGraphError(f"weight of {v} must be a positive integer")
            if w > 1 and g.degree(v) != 1:
                raise InvalidGraphError(f"only degree-1 vertices may be weighted (vertex {v})")
        for v in range(g.n):
            # a K2 component with both ends heavy has no pendant expansion
            if self.weight[v] > 1:
                (u,) = g.adjacency[v]
                if g.degree(u) == 1 and self.weight[u] > 1:
                    raise InvalidGraphError(f"both ends of isolated edge {v}-{u} are weighted")

    @classmethod
    def unit(cls, g: Graph) -> WeightedGraph:
        return cls(g, (1,) * g.n)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def total_weight(self) -> int:
        return sum(self.weight)

    rho = total_weight

    @property
    def is_unit(self) -> bool:
        return all(w == 1 for w in self.weight)

    def must_precede(self, v: int) -> bool:
        """Whether ``v`` has to be placed before its neighbour.

        True for degree-one vertices, except on an isolated edge, where only
        a heavy end is pinned in front.
        """
        g = self.graph
        if g.degree(v) != 1:
            return False
        (u,) = g.adjacency[v]
        return g.degree(u) >= 2 or self.weight[v] > 1

    def side_weight(self, vertices: Iterable[int]) -> int:
        return sum(self.weight[v] for v in vertices)


def as_weighted(g: Graph | WeightedGraph) -> WeightedGraph:
    return g if isinstance(g, WeightedGraph) else WeightedGraph.unit(g)


def as_graph(g: Graph | WeightedGraph) -> Graph:
    return g.graph if isinstance(g, WeightedGraph) else g


@dataclass(frozen=True)
class Ordering:
    """Vertex sequence together with the position of every vertex.

    ``sequence[i]`` is the vertex placed (i+1)-th. For weighted graphs the
    position of a vertex is the first slot of its block.
    """

    sequence: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> Ordering:
        seq = tuple(seq)
        n = len(seq)
        pos = [0] * n
        for i, v in enumerate(seq):
            if not (0 <= v < n) or pos[v]:
                raise InvalidOrderingError(f"{list(seq)} is not a permutation of 0..{n - 1}")
            pos[v] = i + 1
        return cls(seq, tuple(pos))

    @classmethod
    def from_positions(cls, position: Sequence[int]) -> Ordering:
        n = len(position)
        seq = [-1] * n
        for v, p in enumerate(position):
            if not (1 <= p <= n) or seq[p - 1] != -1:
                raise InvalidOrderingError(f"positions {list(position)} are not a bijection onto 1..{n}")
            seq[p - 1] = v
        return cls(tuple(seq), tuple(position))

    @classmethod
    def weighted(cls, seq: Iterable[int], weight: Sequence[int]) -> Ordering:
        seq = tuple(seq)
        if sorted(seq) != list(range(len(weight))):
            raise InvalidOrderingError("block sequence must list every vertex exactly once")
        pos = [0] * len(weight)
        slot = 1
        for v in seq:
            pos[v] = slot
            slot += weight[v]
        return cls(seq, tuple(pos))

    @property
    def inverse(self) -> tuple[int, ...]:
        return self.sequence

    def __len__(self) -> int:
        return len(self.sequence)

    def restricted(self, keep: Iterable[int]) -> tuple[int, ...]:
        """alpha_X: the relative order of the kept vertices."""
        keep = set(keep)
        return tuple(v for v in self.sequence if v in keep)

    def check_for(self, g: Graph | WeightedGraph) -> None:
        n = as_graph(g).n
        if len(self.sequence) != n or len(self.position) != n:
            raise InvalidOrderingError(f"ordering has {len(self.sequence)} vertices, graph has {n}")
        expected = Ordering.weighted(self.sequence, as_weighted(g).weight) if isinstance(g, WeightedGraph) \
            else Ordering.from_sequence(self.sequence)
        if expected.position != tuple(self.position):
            raise InvalidOrderingError("positions disagree with the vertex sequence")


def coerce_ordering(g: Graph, a: Ordering | Sequence[int]) -> Ordering:
    a = a if isinstance(a, Ordering) else Ordering.from_sequence(a)
    a.check_for(g)
    return a


@dataclass(frozen=True)
class ProfileReport:
    total: int
    per_vertex: dict[int, int] = field(default_factory=dict)
    long_edges: dict[Edge, int] = field(default_factory=dict)


def profile_of_ordering(
    g: Graph, a: Ordering | Sequence[int], subset: Iterable[int] | None = None
) -> ProfileReport:
    """prf_a(G, Z) with per-vertex profiles and the edges of E_a.

    ``long_edges`` maps every edge ``uv`` of E_a (``u`` the earliest member of
    N[v], ``u != v``) to its length. When ``subset`` is given, all three
    fields are restricted to the vertices of ``subset``.
    """
    a = coerce_ordering(g, a)
    pos = a.position
    verts = range(g.n) if subset is None else sorted(set(subset))
    per_vertex = {}
    long_edges = {}
    for v in verts:
        first = v
        for u in g.adjacency[v]:
            if pos[u] < pos[first]:
                first = u
        per_vertex[v] = pos[v] - pos[first]
        if first != v:
            long_edges[_edge(first, v)] = pos[v] - pos[first]
    return ProfileReport(sum(per_vertex.values()), per_vertex, long_edges)


def edge_lengths(g: Graph, a: Ordering | Sequence[int]) -> dict[Edge, int]:
    """Length of every edge relative to ``a``; zero for edges outside E_a."""
    a = coerce_ordering(g, a)
    pos = a.position
    lengths = {e: 0 for e in g.edges()}
    for v in range(g.n):
        first = min(g.adjacency[v], key=pos.__getitem__, default=v)
        if pos[first] < pos[v]:
            lengths[_edge(first, v)] = pos[v] - pos[first]
    return lengths


def profile_by_edge_lengths(g: Graph, a: Ordering | Sequence[int]) -> int:
    return sum(edge_lengths(g, a).values())


def profile_by_prefix_boundary(g: Graph, a: Ordering | Sequence[int]) -> int:
    """Sum over prefixes of the number of later vertices adjacent to the prefix."""
    a = coerce_ordering(g, a)
    masks = g.masks
    prefix = 0
    reached = 0
    total = 0
    for v in a.sequence:
        prefix |= 1 << v
        reached |= masks[v]
        total += (reached & ~prefix).bit_count()
    return total


def _check_block_sequence(wg: WeightedGraph, perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(wg.n)):
        raise InvalidOrderingError("block sequence must list every vertex exactly once")
    seen = set()
    for v in perm:
        for u in wg.graph.adjacency[v]:
            if u not in seen and wg.must_precede(u):
                raise InvalidOrderingError(f"pendant {u} is placed after its neighbour {v}")
        seen.add(v)
    return perm


def weighted_profile(wg: WeightedGraph, perm: Sequence[int] | Ordering) -> int:
    """Profile of a pendant-first block permutation of a weighted graph."""
    seq = perm.sequence if isinstance(perm, Ordering) else perm
    seq = _check_block_sequence(wg, seq)
    pos = Ordering.weighted(seq, wg.weight).position
    g = wg.graph
    total = 0
    for v in range(g.n):
        first = min((pos[u] for u in g.adjacency[v]), default=pos[v])
        total += max(0, pos[v] - first)
    return total


def expand_with_copies(wg: WeightedGraph) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Expansion G^u together with the expanded vertices standing for each vertex.

    Vertex ``v`` keeps id ``v``; extra pendant copies get ids from ``wg.n`` on.
    """
    g = wg.graph
    edges = list(g.edges())
    copies = [[v] for v in range(g.n)]
    nxt = g.n
    for v in range(g.n):
        if wg.weight[v] > 1:
            (anchor,) = g.adjacency[v]
            for _ in range(wg.weight[v] - 1):
                edges.append((anchor, nxt))
                copies[v].append(nxt)
                nxt += 1
    return Graph.from_edges(nxt, edges), tuple(tuple(c) for c in copies)


def expand(wg: WeightedGraph) -> Graph:
    return expand_with_copies(wg)[0]


def expand_ordering(wg: WeightedGraph, perm: Sequence[int] | Ordering) -> Ordering:
    """The ordering of G^u obtained by unrolling each block in place."""
    seq = perm.sequence if isinstance(perm, Ordering) else perm
    _, copies = expand_with_copies(wg)
    return Ordering.from_sequence(u for v in seq for u in copies[v])


def is_conformal(g: Graph, a: Ordering | Sequence[int], at: int | None = None) -> bool:
    """Pendant neighbours of ``at`` (or of every vertex) form an interval before it.

    Degree-one vertices are skipped: the two ends of an isolated edge are each
    other's pendant neighbours and cannot both come first.
    """
    a = coerce_ordering(g, a)
    pos = a.position
    targets = range(g.n) if at is None else (at,)
    for x in targets:
        if g.degree(x) < 2:
            continue
        spots = sorted(pos[w] for w in g.pendant_neighbors(x))
        if not spots:
            continue
        if spots[-1] > pos[x] or spots[-1] - spots[0] != len(spots) - 1:
            return False
    return True


def _in_chain_order(components, pos) -> bool:
    prev_max = 0
    for comp in components:
        spots = [pos[v] for v in comp]
        if min(spots) < prev_max:
            return False
        prev_max = max(spots)
    return True


def is_special(chain, a: Ordering | Sequence[int]) -> bool:
    """Whether ``a`` places the chain components C_1, ..., C_t in index order.

    ``chain`` is a ChainDecomposition, or a Graph that is decomposed first.
    For a Graph the direction of the chain is not fixed, so the reversed
    component order is accepted as well.
    """
    if isinstance(chain, Graph):
        from .decomposition import chain_decomposition

        pos = coerce_ordering(chain, a).position
        dec = chain_decomposition(chain)
        if dec is None:
            raise NotAChainError("graph is not a chain")
        return _in_chain_order(dec.components, pos) or _in_chain_order(dec.components[::-1], pos)
    pos = a.position if isinstance(a, Ordering) else Ordering.from_sequence(a).position
    return _in_chain_order(chain.components, pos)

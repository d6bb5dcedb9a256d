"""Instance generators, including the clique-padding gadget for VAP."""

from __future__ import annotations

import math
import random

from ..errors import InvalidGraphError
from ..graph_core import Graph

MAX_CONNECT_TRIES = 1000


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidGraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n: int) -> Graph:
    if n < 1:
        raise InvalidGraphError("clique needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    if leaves < 1:
        raise InvalidGraphError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_connected(n: int, p: float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity by resampling."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise InvalidGraphError("need n >= 1 and 0 <= p <= 1")
    if n > 1 and p == 0.0:
        raise InvalidGraphError("p = 0 never yields a connected graph")
    rng = random.Random(seed)
    for _ in range(MAX_CONNECT_TRIES):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if g.is_connected():
            return g
    raise InvalidGraphError(f"no connected G({n}, {p}) sample in {MAX_CONNECT_TRIES} tries")


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])


def chain_of_cycles(lengths) -> Graph:
    """Cycles (length >= 3) or single vertices (length 1) strung together by bridges."""
    edges = []
    start = 0
    prev_end = None
    for length in lengths:
        if length == 2 or length < 1:
            raise InvalidGraphError(f"chain piece of length {length}; use 1 or >= 3")
        verts = list(range(start, start + length))
        if length >= 3:
            edges += [(verts[i], verts[(i + 1) % length]) for i in range(length)]
        if prev_end is not None:
            edges.append((prev_end, verts[0]))
        prev_end = verts[-1]
        start += length
    return Graph.from_edges(start, edges)


def pendant_attach(base: Graph, counts: dict[int, int]) -> Graph:
    """Attach ``counts[v]`` new pendant vertices to each vertex ``v`` of ``base``."""
    edges = list(base.edges())
    nxt = base.n
    for v, count in sorted(counts.items()):
        if not 0 <= v < base.n or count < 0:
            raise InvalidGraphError(f"bad pendant count {v}:{count}")
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def random_chain(n: int, seed: int, cycle_prob: float = 0.35) -> Graph:
    """Connected graph on ``n`` vertices: a chain spine of short cycles and
    single vertices, with pendants and small trees hung off it."""
    if n < 1:
        raise InvalidGraphError("need n >= 1")
    rng = random.Random(seed)
    spine_budget = rng.randint(max(1, n // 2), n)
    lengths = []
    used = 0
    while used < spine_budget:
        room = spine_budget - used
        if room >= 3 and rng.random() < cycle_prob:
            length = rng.choice([c for c in (3, 4, 5) if c <= room])
        else:
            length = 1
        lengths.append(length)
        used += length
    g = chain_of_cycles(lengths)
    edges = list(g.edges())
    for v in range(g.n, n):
        edges.append((rng.randrange(v), v))
    return Graph.from_edges(n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


def vap_parameters(n: int, r: int, k: int) -> tuple[int, int]:
    """Clique size i = 2kn and isolated-vertex count j = r + C(i,2)/k - kn - i."""
    if k < 2:
        raise InvalidGraphError("the gadget needs k >= 2")
    i = 2 * k * n
    pairs = math.comb(i, 2)
    assert pairs % k == 0
    j = r + pairs // k - k * n - i
    if j < 0:
        raise InvalidGraphError(f"r={r} gives a negative number of isolated vertices ({j})")
    return i, j


def vap_gadget(g: Graph, r: int, k: int) -> Graph:
    """k copies of ``g``, then j isolated vertices, then K_i.

    prf(G') = k prf(G) + C(i, 2) and |V(G')| = kn + i + j, so
    prf(G) <= r exactly when prf(G') <= k |V(G')|.
    """
    i, j = vap_parameters(g.n, r, k)
    return disjoint_union(*([g] * k), Graph.empty(j), clique(i))


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "clique": clique,
    "star": star,
    "random_connected": random_connected,
    "random_tree": random_tree,
    "random_chain": random_chain,
    "chain_of_cycles": chain_of_cycles,
    "pendant_attach": pendant_attach,
}


def generate(family: str, *args, **kwargs) -> Graph:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise InvalidGraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    return builder(*args, **kwargs)

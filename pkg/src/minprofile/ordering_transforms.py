"""Profile-non-increasing rewrites of orderings.

Swaps exchange two adjacent position ranges. ``conformalize`` uses them to
move the pendant neighbours of every vertex into one run in front of it, and
``normalize_blocks`` makes the pieces of a bridge-separated partition
consecutive.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import PreconditionError, SwapRefusedError
from .graph_core import Graph, Ordering, coerce_ordering, profile_of_ordering


@dataclass(frozen=True)
class ConsecutivePair:
    """X occupies positions a..b-1 and Y occupies b..c."""

    a: int
    b: int
    c: int

    @property
    def x_size(self) -> int:
        return self.b - self.a

    @property
    def y_size(self) -> int:
        return self.c - self.b + 1

    def sets(self, ordering: Ordering) -> tuple[frozenset[int], frozenset[int]]:
        seq = ordering.sequence
        return frozenset(seq[self.a - 1 : self.b - 1]), frozenset(seq[self.b - 1 : self.c])

    def check(self, n: int) -> None:
        if not (1 <= self.a < self.b <= self.c <= n):
            raise PreconditionError(f"need 1 <= a < b <= c <= n, got {self.a}, {self.b}, {self.c} with n={n}")


def consecutive_pair(a: Ordering, xs, ys) -> ConsecutivePair:
    """Locate the pair for vertex sets ``xs`` (left) and ``ys`` (right)."""
    xs, ys = set(xs), set(ys)
    if not xs or not ys or xs & ys:
        raise PreconditionError("X and Y must be nonempty and disjoint")
    pos = a.position
    lo, mid = min(pos[v] for v in xs), min(pos[v] for v in ys)
    hi = max(pos[v] for v in ys)
    pair = ConsecutivePair(lo, mid, hi)
    pair.check(len(a))
    if pair.sets(a) != (frozenset(xs), frozenset(ys)):
        raise PreconditionError("sets do not form a consecutive pair")
    return pair


def cut_counts(g: Graph, a: Ordering, part) -> tuple[int, int]:
    """(|E^l(X)|, |E^r(X)|): edges of E_a leaving X to the left and to the right."""
    part = set(part)
    long_edges = profile_of_ordering(g, a).long_edges
    pos = a.position
    left = right = 0
    for u, v in long_edges:
        if (u in part) == (v in part):
            continue
        inside, outside = (u, v) if u in part else (v, u)
        if pos[inside] < pos[outside]:
            right += 1
        else:
            left += 1
    return left, right


def _guarantee_holds(g: Graph, a: Ordering, pair: ConsecutivePair, require: str) -> bool:
    xs, ys = pair.sets(a)
    if require == "separated":
        if any(g.neighbor_set(x) & ys for x in xs):
            return False
        xl, xr = cut_counts(g, a, xs)
        yl, yr = cut_counts(g, a, ys)
        if not (xl <= xr and yl >= yr):
            return False
        # a vertex outside X and Y with neighbours on both sides can change its
        # leftmost neighbour, so the set of long edges is checked as well
        after = _swapped(a, pair)
        return profile_of_ordering(g, a).long_edges.keys() == profile_of_ordering(g, after).long_edges.keys()
    if require == "pendant_witness":
        if len(xs) != 1:
            return False
        (x,) = xs
        pos = a.position
        witness = any(g.degree(z) == 1 and pos[z] > pair.c for z in g.adjacency[x])
        yl, yr = cut_counts(g, a, ys)
        return witness and yl >= yr
    if require == "pendant_block":
        if len(xs) != 1:
            return False
        (x,) = xs
        return all(g.degree(y) == 1 and g.has_edge(x, y) for y in ys)
    raise ValueError(f"unknown guarantee {require!r}")


def swap_consecutive(
    g: Graph, a: Ordering | Sequence[int], pair: ConsecutivePair, require: str | None = None
) -> Ordering:
    """Move Y in front of X, keeping the internal order of both.

    ``require`` names the non-increase guarantee the caller relies on:
    ``"separated"`` (no X-Y edges, X leans right, Y leans left, and the
    swap keeps the set of long edges),
    ``"pendant_witness"`` (X = {x} with a pendant neighbour after Y, Y leans
    left) or ``"pendant_block"`` (X = {x}, Y pendants of x). The swap is
    refused when the named hypotheses fail.
    """
    a = coerce_ordering(g, a)
    pair.check(g.n)
    if require is not None and not _guarantee_holds(g, a, pair, require):
        raise SwapRefusedError(f"hypotheses of {require!r} do not hold for {pair}")
    return _swapped(a, pair)


def _swapped(a: Ordering, pair: ConsecutivePair) -> Ordering:
    seq = a.sequence
    i, j, k = pair.a - 1, pair.b - 1, pair.c
    return Ordering.from_sequence(seq[:i] + seq[j:k] + seq[i:j] + seq[k:])


def _runs(a: Ordering, members: set[int]) -> list[tuple[int, int]]:
    """Maximal position intervals [lo, hi] made only of ``members``."""
    runs = []
    for p, v in enumerate(a.sequence, start=1):
        if v in members:
            if runs and runs[-1][1] == p - 1:
                runs[-1] = (runs[-1][0], p)
            else:
                runs.append((p, p))
    return runs


def _first_valid(g: Graph, a: Ordering, candidates) -> Ordering:
    for pair, require in candidates:
        if _guarantee_holds(g, a, pair, require):
            return swap_consecutive(g, a, pair)
    tried = ", ".join(f"{req} on {pair}" for pair, req in candidates)
    raise SwapRefusedError(f"no swap with a non-increase guarantee applies (tried {tried})")


def _conformal_step(g: Graph, a: Ordering, x: int) -> Ordering | None:
    """One step towards making ``a`` conformal for ``x``; None when it already is."""
    pend = set(g.pendant_neighbors(x))
    blocks = _runs(a, pend)
    px = a.position[x]
    after = [blk for blk in blocks if blk[0] > px]
    if after:
        lo, hi = after[0]
        if lo == px + 1:
            # a block right behind x jumps in front of it
            return _first_valid(g, a, [(ConsecutivePair(px, px + 1, hi), "pendant_block")])
        gap = ConsecutivePair(px, px + 1, lo - 1)
        return _first_valid(
            g, a, [(gap, "pendant_witness"), (ConsecutivePair(px + 1, lo, hi), "separated"), (gap, "separated")]
        )
    if len(blocks) <= 1:
        return None
    (xlo, xhi), (zlo, zhi) = blocks[0], blocks[1]
    return _first_valid(
        g, a, [(ConsecutivePair(xlo, xhi + 1, zlo - 1), "separated"), (ConsecutivePair(xhi + 1, zlo, zhi), "separated")]
    )


def conformalize(g: Graph, a: Ordering | Sequence[int]) -> Ordering:
    """Swap pendants until every vertex sees its pendant neighbours as one run in front.

    Vertices are handled in increasing order; each swap keeps the profile
    from growing, and vertices already handled stay conformal. Raises
    SwapRefusedError when no guaranteed swap applies, which can happen for
    orderings that are far from optimal.
    """
    a = coerce_ordering(g, a)
    ceiling = 4 * g.n * g.n + 4
    for x in range(g.n):
        if g.degree(x) < 2 or not g.pendant_neighbors(x):
            continue
        for _ in range(ceiling):
            nxt = _conformal_step(g, a, x)
            if nxt is None:
                break
            a = nxt
        else:
            raise RuntimeError(f"conformalization of vertex {x} did not settle in {ceiling} swaps")
    return a


@dataclass(frozen=True)
class BlockPartition:
    """Vertex blocks V_1..V_t with the single edge joining each prefix to its suffix."""

    blocks: tuple[frozenset[int], ...]
    connectors: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, g: Graph, blocks) -> BlockPartition:
        blocks = tuple(frozenset(b) for b in blocks)
        if any(not b for b in blocks):
            raise PreconditionError("blocks must be nonempty")
        cover = [v for b in blocks for v in b]
        if sorted(cover) != list(range(g.n)):
            raise PreconditionError("blocks must partition the vertex set")
        connectors = []
        seen: set[int] = set()
        for i in range(len(blocks) - 1):
            seen |= blocks[i]
            crossing = [(u, v) for u in seen for v in g.adjacency[u] if v not in seen]
            if len(crossing) != 1:
                raise PreconditionError(f"{len(crossing)} edges join V_1..V_{i + 1} to the rest; need exactly one")
            u, v = crossing[0]
            if u not in blocks[i] or v not in blocks[i + 1]:
                raise PreconditionError(f"the edge after V_{i + 1} must join V_{i + 1} and V_{i + 2}")
            connectors.append((u, v))
        return cls(blocks, tuple(connectors))


def normalize_blocks(
    g: Graph,
    a: Ordering | Sequence[int],
    partition: BlockPartition | Sequence,
    k: int,
    check_optimal: bool = False,
) -> Ordering:
    """Concatenate the blocks in index order, each in its relative order under ``a``.

    Requires |V_1|, |V_t| >= k + 2, that ``a`` starts in V_1 or ends in V_t,
    and prf_a(G) <= n - 1 + k. For an optimal ``a`` the result is optimal.
    With ``check_optimal`` the optimality of ``a`` is verified by the exact
    solver as well.
    """
    a = coerce_ordering(g, a)
    if not isinstance(partition, BlockPartition):
        partition = BlockPartition.build(g, partition)
    blocks = partition.blocks
    if min(len(blocks[0]), len(blocks[-1])) < k + 2:
        raise PreconditionError(f"end blocks need at least k + 2 = {k + 2} vertices")
    if a.sequence[0] not in blocks[0] and a.sequence[-1] not in blocks[-1]:
        raise PreconditionError("the ordering must start in V_1 or end in V_t")
    value = profile_of_ordering(g, a).total
    if value > g.n - 1 + k:
        raise PreconditionError(f"profile {value} exceeds n - 1 + k = {g.n - 1 + k}")
    if check_optimal:
        from .solvers import exact_profile

        if value != exact_profile(g).profile:
            raise PreconditionError("ordering is not optimal")
    return Ordering.from_sequence(v for b in blocks for v in a.sequence if v in b)

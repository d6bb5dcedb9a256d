"""Exact profile solvers, lower bounds, the interval model and the PAVGV decision."""

from __future__ import annotations

import math
import time
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

import numpy as np

from .decomposition import is_two_edge_connected
from .errors import BudgetExhaustedError, CapacityError, InvalidOrderingError, NotConnectedError
from .graph_core import (
    Graph,
    Ordering,
    WeightedGraph,
    as_weighted,
    coerce_ordering,
    profile_of_ordering,
    weighted_profile,
)


@dataclass(frozen=True)
class SolverConfig:
    dp_cap: int = 24
    weighted_cap: int = 20
    node_budget: int | None = 5_000_000
    time_budget: float | None = None


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class SolveResult:
    profile: int
    witness: Ordering
    node_count: int


def _subset_dp(g: Graph) -> tuple[int, list[int], int]:
    """Minimum over orderings of the summed prefix boundaries.

    f(S) = |N(S) - S| + min_{v in S} f(S - v). Subsets of one popcount are
    evaluated together; ties go to the smallest vertex.
    """
    n = g.n
    if n == 0:
        return 0, [], 0
    size = 1 << n
    reach = np.zeros(size, dtype=np.uint32)
    for i, mask in enumerate(g.masks):
        half = 1 << i
        np.bitwise_or(reach[:half], mask, out=reach[half : 2 * half])
    subsets = np.arange(size, dtype=np.uint32)
    boundary = np.bitwise_count(reach & ~subsets).astype(np.int32)
    del reach
    popcount = np.bitwise_count(subsets)
    layers = np.argsort(popcount, kind="stable").astype(np.uint32)
    starts = np.searchsorted(popcount[layers], np.arange(n + 2))
    del popcount

    big = np.iinfo(np.int32).max
    best = np.zeros(size, dtype=np.int32)
    last = np.zeros(size, dtype=np.int8)
    for k in range(1, n + 1):
        idx = layers[starts[k] : starts[k + 1]]
        cur = np.full(idx.shape, big, dtype=np.int32)
        arg = np.zeros(idx.shape, dtype=np.int8)
        for v in range(n):
            bit = np.uint32(1 << v)
            has = (idx & bit) != 0
            cand = np.where(has, best[idx ^ bit], big)
            better = cand < cur
            cur = np.where(better, cand, cur)
            arg[better] = v
        best[idx] = cur + boundary[idx]
        last[idx] = arg
    seq = []
    s = size - 1
    while s:
        v = int(last[s])
        seq.append(v)
        s ^= 1 << v
    return int(best[size - 1]), seq[::-1], size


def exact_profile(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """prf(G) with an optimal witness, solving each component separately."""
    sequence: list[int] = []
    total = 0
    nodes = 0
    for comp in g.components():
        if len(comp) > config.dp_cap:
            raise CapacityError(
                f"component with {len(comp)} vertices exceeds the DP cap of {config.dp_cap}; kernelize first"
            )
        sub, back = g.induced(comp)
        value, seq, count = _subset_dp(sub)
        total += value
        nodes += count
        sequence.extend(back[v] for v in seq)
    witness = Ordering.from_sequence(sequence)
    return SolveResult(total, witness, nodes)


def lower_bound(g: Graph | WeightedGraph) -> int:
    """max(n - 1, ceil((3n - 3) / 2) when 2-edge-connected) for a connected graph.

    For weighted graphs n is the total weight.
    """
    wg = as_weighted(g)
    n = wg.total_weight
    bound = max(n - 1, 0)
    if is_two_edge_connected(wg.graph):
        bound = max(bound, math.ceil((3 * n - 3) / 2))
    return bound


class _Search:
    """Depth-first branch and bound over pendant-first block permutations."""

    def __init__(self, wg: WeightedGraph, config: SolverConfig):
        self.wg = wg
        self.g = wg.graph
        self.n = wg.n
        self.w = wg.weight
        self.masks = self.g.masks
        self.full = (1 << self.n) - 1
        # vertices that have to be placed before v
        self.needs = [0] * self.n
        for v in range(self.n):
            for u in self.g.adjacency[v]:
                if wg.must_precede(u):
                    self.needs[v] |= 1 << u
        self.config = config
        self.deadline = None if config.time_budget is None else time.monotonic() + config.time_budget
        self.nodes = 0
        self.best_at: dict[int, int] = {}
        self.incumbent = math.inf
        self.incumbent_seq: list[int] = []
        self._lb_cache: dict[int, int] = {}

    def _component_bound(self, rest: int) -> int:
        """Sum over components of G[rest] of their profile lower bounds."""
        hit = self._lb_cache.get(rest)
        if hit is not None:
            return hit
        verts = [v for v in range(self.n) if rest >> v & 1]
        sub, back = self.g.induced(verts)
        total = 0
        for comp in sub.components():
            weight = sum(self.w[back[v]] for v in comp)
            bound = weight - 1
            if len(comp) >= 3:
                piece, _ = sub.induced(comp)
                if is_two_edge_connected(piece):
                    bound = max(bound, math.ceil((3 * weight - 3) / 2))
            total += bound
        self._lb_cache[rest] = total
        return total

    def bound(self, placed: int, reach: int) -> int:
        rest = self.full & ~placed
        if not rest:
            return 0
        frontier = (reach & rest).bit_count()
        weight = sum(self.w[v] for v in range(self.n) if rest >> v & 1)
        by_frontier = weight - 1 + max(0, (frontier - 1) * (frontier - 2) // 2)
        return max(by_frontier, self._component_bound(rest))

    def run(self) -> None:
        self._dive(0, 0, 0, [])

    def _tick(self) -> None:
        self.nodes += 1
        budget = self.config.node_budget
        if budget is not None and self.nodes > budget:
            raise BudgetExhaustedError(f"node budget {budget} exhausted")
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhaustedError(f"time budget {self.config.time_budget}s exhausted")

    def _dive(self, placed: int, reach: int, cost: int, seq: list[int]) -> None:
        self._tick()
        if placed == self.full:
            if cost < self.incumbent:
                self.incumbent = cost
                self.incumbent_seq = list(seq)
            return
        children = []
        for v in range(self.n):
            if placed >> v & 1 or self.needs[v] & ~placed:
                continue
            nplaced = placed | 1 << v
            nreach = reach | self.masks[v]
            step = self.w[v] * (nreach & ~nplaced).bit_count()
            children.append((step, v, nplaced, nreach))
        children.sort()
        for step, v, nplaced, nreach in children:
            ncost = cost + step
            seen = self.best_at.get(nplaced)
            if seen is not None and seen <= ncost:
                continue
            if ncost + self.bound(nplaced, nreach) >= self.incumbent:
                continue
            self.best_at[nplaced] = ncost
            seq.append(v)
            self._dive(nplaced, nreach, ncost, seq)
            seq.pop()


def exact_weighted_profile(wg: WeightedGraph | Graph, config: SolverConfig = DEFAULT_CONFIG) -> SolveResult:
    """Minimum weighted profile over pendant-first block permutations.

    The witness is a weighted Ordering (positions are block starts).
    """
    wg = as_weighted(wg)
    g = wg.graph
    sequence: list[int] = []
    total = 0
    nodes = 0
    for comp in g.components():
        if len(comp) > config.weighted_cap:
            raise CapacityError(
                f"component with {len(comp)} vertices exceeds the branch-and-bound cap of {config.weighted_cap}"
            )
        sub, back = g.induced(comp)
        part = WeightedGraph(sub, tuple(wg.weight[v] for v in back))
        search = _Search(part, config)
        search.run()
        total += search.incumbent
        nodes += search.nodes
        sequence.extend(back[v] for v in search.incumbent_seq)
    witness = Ordering.weighted(sequence, wg.weight)
    assert weighted_profile(wg, witness) == total
    return SolveResult(total, witness, nodes)


@dataclass(frozen=True)
class IntervalModel:
    intervals: tuple[tuple[int, int], ...]
    supergraph: Graph

    @property
    def edge_count(self) -> int:
        return self.supergraph.edge_count


def interval_supergraph(g: Graph, a: Ordering | Sequence[int]) -> IntervalModel:
    """Intervals [min position over N[v], position of v] and their intersection graph."""
    a = coerce_ordering(g, a)
    pos = a.position
    intervals = []
    for v in range(g.n):
        lo = min([pos[v]] + [pos[u] for u in g.adjacency[v]])
        intervals.append((lo, pos[v]))
    edges = []
    for v in range(g.n):
        lo, hi = intervals[v]
        for p in range(lo, hi):
            edges.append((a.sequence[p - 1], v))
    return IntervalModel(tuple(intervals), Graph.from_edges(g.n, edges))


@dataclass(frozen=True)
class Decision:
    answer: bool
    k: int
    target: int
    witness: Ordering | None = None
    witness_profile: int | None = None
    kernel_n: int = 0
    kernel_m: int = 0
    kernel_rho: int = 0
    kernel_profile: int | None = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.answer


def decide_pavgv(g: Graph | WeightedGraph, k: int, config: SolverConfig = DEFAULT_CONFIG) -> Decision:
    """Does the connected graph have an ordering of profile at most rho(G) - 1 + k?

    The graph is kernelized at ``k``. An oversized kernel is a NO; otherwise
    the kernel is solved exactly and a YES witness is lifted to ``g``.
    """
    from .kernelization import kernelize, lift_ordering

    if k < 1:
        raise ValueError("k must be a positive integer")
    wg = as_weighted(g)
    if not wg.graph.is_connected():
        raise NotConnectedError("PAVGV is defined for connected graphs")
    target = wg.total_weight - 1 + k
    result = kernelize(wg, k)
    kern = result.kernel
    common = dict(k=k, target=target, kernel_n=kern.n, kernel_m=kern.graph.m, kernel_rho=kern.total_weight)
    if kern.n > 12 * k + 6 or kern.graph.m > 13 * k + 5:
        return Decision(False, reason="kernel exceeds size bound", **common)
    # any kernel within the size bound is solved; the node and time budgets still apply
    solved = exact_weighted_profile(kern, replace(config, weighted_cap=max(config.weighted_cap, 12 * k + 6)))
    if solved.profile > kern.total_weight - 1 + k:
        return Decision(False, kernel_profile=solved.profile, reason="kernel profile too large", **common)
    lifted = lift_ordering(result, solved.witness)
    if lifted.profile > target:
        raise InvalidOrderingError(
            f"lifted witness has profile {lifted.profile} above target {target}"
        )
    return Decision(
        True,
        witness=lifted.ordering,
        witness_profile=lifted.profile,
        kernel_profile=solved.profile,
        reason="kernel solved",
        **common,
    )


def profile(g: Graph, a: Ordering | Sequence[int]) -> int:
    return profile_of_ordering(g, a).total

"""Pendant merging and bridge-vertex suppression, driven to a fixpoint.

Rule 1 (pendant merge): when ``x`` has pendant neighbours v1 < ... < vr with
r >= 2, delete v2..vr and give v1 their total weight. The profile is
unchanged.

Rule 2 (suppression at parameter k): a k-suppressible vertex ``v`` between
bridges ``xv`` and ``yv`` is deleted together with its pendant, and ``xy`` is
added. prf - rho is unchanged whenever prf(G) <= rho(G) - 1 + k. Neither
``x`` nor ``y`` may be a pendant: a weighted pendant stands for several
pendant edges, each of order one.

Every step is recorded in input-graph vertex ids so that a kernel ordering can
be lifted back by replaying the trace in reverse.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .decomposition import _bridges_with_weights
from .errors import InvalidOrderingError, NotConnectedError, RuleNotApplicableError
from .graph_core import (
    Graph,
    Ordering,
    WeightedGraph,
    as_weighted,
    weighted_profile,
)


@dataclass(frozen=True)
class PendantMerge:
    anchor: int
    survivor: int
    merged: tuple[tuple[int, int], ...]  # (pendant, weight) in block order, survivor first
    weight: int

    def to_line(self, label=str) -> str:
        parts = " ".join(f"{label(v)}:{w}" for v, w in self.merged)
        return f"merge {label(self.anchor)} {parts} -> {label(self.survivor)}:{self.weight}"


@dataclass(frozen=True)
class Suppression:
    vertex: int
    pendant: tuple[int, int] | None  # (pendant, weight)
    x: int
    y: int

    def to_line(self, label=str) -> str:
        line = f"suppress {label(self.vertex)} x={label(self.x)} y={label(self.y)}"
        if self.pendant is not None:
            line += f" pendant={label(self.pendant[0])}:{self.pendant[1]}"
        return line


@dataclass(frozen=True)
class KernelTrace:
    steps: tuple[PendantMerge | Suppression, ...] = ()

    def to_text(self, labels: Sequence[str] | None = None) -> str:
        label = str if labels is None else labels.__getitem__
        return "".join(step.to_line(label) + "\n" for step in self.steps)

    @classmethod
    def from_text(cls, text: str, labels: Sequence[str] | None = None) -> KernelTrace:
        index = (lambda s: int(s)) if labels is None else {lab: i for i, lab in enumerate(labels)}.__getitem__

        def pair(tok):
            name, w = tok.rsplit(":", 1)
            return index(name), int(w)

        steps = []
        for raw in text.splitlines():
            tok = raw.split()
            if not tok:
                continue
            if tok[0] == "merge":
                arrow = tok.index("->")
                merged = tuple(pair(t) for t in tok[2:arrow])
                survivor, weight = pair(tok[arrow + 1])
                steps.append(PendantMerge(index(tok[1]), survivor, merged, weight))
            elif tok[0] == "suppress":
                kv = dict(t.split("=", 1) for t in tok[2:])
                pend = pair(kv["pendant"]) if "pendant" in kv else None
                steps.append(Suppression(index(tok[1]), pend, index(kv["x"]), index(kv["y"])))
            else:
                raise ValueError(f"unknown trace step {raw!r}")
        return cls(tuple(steps))


def _relabel(wg: WeightedGraph, drop: set[int], add_edge: tuple[int, int] | None = None, weights=None):
    """Delete ``drop``, optionally add an edge, compact ids; returns (graph, new->old)."""
    g = wg.graph
    keep = [v for v in range(g.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    if add_edge is not None:
        edges.append((index[add_edge[0]], index[add_edge[1]]))
    weight = weights if weights is not None else wg.weight
    new = WeightedGraph(Graph.from_edges(len(keep), edges), tuple(weight[v] for v in keep))
    return new, tuple(keep)


def apply_rule1(wg: WeightedGraph | Graph, x: int) -> tuple[WeightedGraph, PendantMerge, tuple[int, ...]]:
    """Merge the pendant neighbours of ``x`` into the smallest one.

    Returns the new graph, the trace step (in ``wg`` ids) and new-id -> old-id.
    """
    wg = as_weighted(wg)
    g = wg.graph
    pend = sorted(g.pendant_neighbors(x)) if g.degree(x) >= 2 else []
    if len(pend) < 2:
        raise RuleNotApplicableError(f"vertex {x} has fewer than two pendant neighbours")
    survivor = pend[0]
    total = sum(wg.weight[v] for v in pend)
    weights = list(wg.weight)
    weights[survivor] = total
    new, back = _relabel(wg, set(pend[1:]), weights=weights)
    step = PendantMerge(x, survivor, tuple((v, wg.weight[v]) for v in pend), total)
    return new, step, back


def _bridge_orders(wg: WeightedGraph) -> dict[tuple[int, int], int]:
    return {b.edge: b.order for b in _bridges_with_weights(wg.graph, wg.weight)}


def _suppression_frame(wg: WeightedGraph, v: int, k: int, orders=None):
    """(x, y, pendant) when ``v`` is k-suppressible, otherwise None."""
    g = wg.graph
    if g.degree(v) not in (2, 3):
        return None
    if orders is None:
        orders = _bridge_orders(wg)
    incident = [(u, orders.get((min(u, v), max(u, v)))) for u in g.adjacency[v]]
    if any(order is None for _, order in incident):
        return None  # v lies on a cycle, so it is not a trivial bridgeless component
    heavy = [u for u, order in incident if order >= k + 2]
    if len(heavy) != 2:
        return None
    if any(g.degree(u) == 1 for u in heavy):
        # a weighted pendant stands for several pendant edges, none of them heavy
        return None
    light = [u for u, _ in incident if u not in heavy]
    if light and g.degree(light[0]) != 1:
        return None
    x, y = heavy
    return x, y, (light[0] if light else None)


def is_k_suppressible(wg: WeightedGraph | Graph, v: int, k: int) -> bool:
    return _suppression_frame(as_weighted(wg), v, k) is not None


def apply_rule2(
    wg: WeightedGraph | Graph, v: int, k: int
) -> tuple[WeightedGraph, Suppression, tuple[int, ...]]:
    """Delete the k-suppressible ``v`` and its pendant; join its two heavy bridges."""
    wg = as_weighted(wg)
    frame = _suppression_frame(wg, v, k)
    if frame is None:
        raise RuleNotApplicableError(f"vertex {v} is not {k}-suppressible")
    x, y, w = frame
    drop = {v} if w is None else {v, w}
    new, back = _relabel(wg, drop, add_edge=(x, y))
    step = Suppression(v, None if w is None else (w, wg.weight[w]), x, y)
    return new, step, back


@dataclass(frozen=True)
class KernelResult:
    kernel: WeightedGraph
    trace: KernelTrace
    k: int
    origin: tuple[int, ...]  # kernel id -> input id
    source: WeightedGraph

    @property
    def suppression_cost(self) -> int:
        """Profile added back by lifting: one plus the pendant weight per suppression."""
        return sum(
            1 + (s.pendant[1] if s.pendant else 0) for s in self.trace.steps if isinstance(s, Suppression)
        )


def _translate(step, back):
    if isinstance(step, PendantMerge):
        return PendantMerge(
            back[step.anchor], back[step.survivor], tuple((back[v], w) for v, w in step.merged), step.weight
        )
    pend = None if step.pendant is None else (back[step.pendant[0]], step.pendant[1])
    return Suppression(back[step.vertex], pend, back[step.x], back[step.y])


def kernelize(g: WeightedGraph | Graph, k: int) -> KernelResult:
    """Apply Rule 1 to exhaustion, then one Rule 2 step, and repeat until neither fires.

    Among applicable vertices the smallest id goes first.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    source = as_weighted(g)
    if not source.graph.is_connected():
        raise NotConnectedError("kernelize expects a connected graph")
    cur = source
    origin = tuple(range(source.n))
    steps = []
    while True:
        fired = False
        for x in range(cur.n):
            gx = cur.graph
            if gx.degree(x) >= 2 and len(gx.pendant_neighbors(x)) >= 2:
                cur, step, back = apply_rule1(cur, x)
                steps.append(_translate(step, origin))
                origin = tuple(origin[i] for i in back)
                fired = True
                break
        if fired:
            continue
        orders = _bridge_orders(cur)
        for v in range(cur.n):
            if _suppression_frame(cur, v, k, orders) is not None:
                cur, step, back = apply_rule2(cur, v, k)
                steps.append(_translate(step, origin))
                origin = tuple(origin[i] for i in back)
                fired = True
                break
        if not fired:
            break
    return KernelResult(cur, KernelTrace(tuple(steps)), k, origin, source)


@dataclass(frozen=True)
class LiftResult:
    ordering: Ordering
    profile: int
    kernel_profile: int
    exact: bool  # lifted profile == kernel profile + suppression cost
    notes: tuple[str, ...] = field(default_factory=tuple)
    kernel_optimal: bool | None = None  # set only when the caller asked for the check


def _side(adj: dict[int, set[int]], start: int, banned: tuple[int, int]) -> set[int]:
    a, b = banned
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if {u, v} == {a, b} or u in seen:
                continue
            seen.add(u)
            stack.append(u)
    return seen


def lift_ordering(
    result: KernelResult, kernel_ordering: Ordering | Sequence[int], check_optimal: bool = False
) -> LiftResult:
    """Turn a kernel block permutation into an ordering of the input graph.

    Suppressions are undone by putting the two sides of the new edge ``xy``
    one after the other and inserting the suppressed vertex (after its
    pendant) between them; merges put the original pendants back in one run.
    The lifted ordering is optimal when the kernel ordering is; with
    ``check_optimal`` the latter is verified by the exact solver and reported
    in ``kernel_optimal``.
    """
    kern = result.kernel
    kseq = kernel_ordering.sequence if isinstance(kernel_ordering, Ordering) else tuple(kernel_ordering)
    kernel_value = weighted_profile(kern, kseq)
    seq = [result.origin[v] for v in kseq]
    weight = {result.origin[v]: kern.weight[v] for v in range(kern.n)}
    adj: dict[int, set[int]] = {result.origin[v]: {result.origin[u] for u in kern.graph.adjacency[v]}
                                for v in range(kern.n)}
    notes = []
    for step in reversed(result.trace.steps):
        if isinstance(step, PendantMerge):
            i = seq.index(step.survivor)
            seq[i : i + 1] = [v for v, _ in step.merged]
            for v, w in step.merged:
                weight[v] = w
                adj.setdefault(v, set()).add(step.anchor)
                adj[step.anchor].add(v)
            continue
        x, y, v = step.x, step.y, step.vertex
        xs = _side(adj, x, (x, y))
        if seq[0] in xs or seq[-1] not in xs:
            first = xs
        else:
            first = set(adj) - xs
            notes.append(f"suppression of {v}: y-side placed first")
        head = [u for u in seq if u in first]
        tail = [u for u in seq if u not in first]
        middle = [v] if step.pendant is None else [step.pendant[0], v]
        if head != [u for u in seq[: len(head)]]:
            notes.append(f"suppression of {v}: sides were interleaved and have been separated")
        seq = head + middle + tail
        adj[x].discard(y)
        adj[y].discard(x)
        adj[v] = {x, y}
        adj[x].add(v)
        adj[y].add(v)
        weight[v] = 1
        if step.pendant is not None:
            w, rho = step.pendant
            weight[w] = rho
            adj[w] = {v}
            adj[v].add(w)
    src = result.source
    if sorted(seq) != list(range(src.n)):
        raise InvalidOrderingError("trace replay did not reproduce the input vertex set")
    ordering = Ordering.weighted(seq, src.weight)
    value = weighted_profile(src, ordering)
    exact = value == kernel_value + result.suppression_cost
    optimal = None
    if check_optimal:
        from .solvers import exact_weighted_profile

        optimal = kernel_value == exact_weighted_profile(kern).profile
        if not optimal:
            notes.append("kernel ordering is not optimal; the lifted ordering may not be either")
    return LiftResult(ordering, value, kernel_value, exact, tuple(notes), optimal)

"""Line-oriented edge-list format.

::

    c any comment
    v LABEL          declares a vertex (needed only for isolated ones)
    e LABEL LABEL    an edge
    w LABEL WEIGHT   weight of a degree-1 vertex

Labels are arbitrary non-whitespace strings. Dense vertex ids follow the
canonical label order: integer-looking labels numerically, then the rest.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from ..errors import ParseError
from ..graph_core import Graph, WeightedGraph


def label_key(label: str):
    return (0, int(label), "") if label.lstrip("-").isdigit() else (1, 0, label)


@dataclass(frozen=True)
class GraphDocument:
    labels: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    weights: dict[str, int] = field(default_factory=dict)

    @classmethod
    def canonical(cls, labels, edges, weights=None) -> GraphDocument:
        labels = tuple(sorted(set(labels), key=label_key))
        rank = {lab: i for i, lab in enumerate(labels)}
        edges = sorted(
            (tuple(sorted(e, key=rank.__getitem__)) for e in edges), key=lambda e: (rank[e[0]], rank[e[1]])
        )
        weights = {lab: weights[lab] for lab in sorted(weights or {}, key=rank.__getitem__)}
        return cls(labels, tuple(edges), weights)

    @classmethod
    def from_graph(cls, g: Graph | WeightedGraph, labels: Sequence[str] | None = None) -> GraphDocument:
        weight = g.weight if isinstance(g, WeightedGraph) else None
        graph = g.graph if isinstance(g, WeightedGraph) else g
        labels = [str(v) for v in range(graph.n)] if labels is None else list(labels)
        edges = [(labels[u], labels[v]) for u, v in graph.edges()]
        weights = {} if weight is None else {labels[v]: w for v, w in enumerate(weight) if w > 1}
        return cls.canonical(labels, edges, weights)

    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def to_graph(self) -> Graph:
        rank = self.index()
        return Graph.from_edges(len(self.labels), [(rank[a], rank[b]) for a, b in self.edges])

    def to_weighted(self) -> WeightedGraph:
        rank = self.index()
        weight = [1] * len(self.labels)
        for lab, w in self.weights.items():
            weight[rank[lab]] = w
        return WeightedGraph(self.to_graph(), tuple(weight))

    @property
    def is_weighted(self) -> bool:
        return any(w > 1 for w in self.weights.values())


def parse_graph(text: str) -> GraphDocument:
    labels: set[str] = set()
    edges: dict[frozenset[str], int] = {}
    weights: dict[str, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        kind = tok[0]
        if kind == "v" and len(tok) == 2:
            labels.add(tok[1])
        elif kind == "e" and len(tok) == 3:
            a, b = tok[1], tok[2]
            if a == b:
                raise ParseError(f"self-loop at {a!r}", lineno)
            key = frozenset((a, b))
            if key in edges:
                raise ParseError(f"duplicate edge {a} {b} (first on line {edges[key]})", lineno)
            edges[key] = lineno
            labels.update((a, b))
        elif kind == "w" and len(tok) == 3:
            try:
                w = int(tok[2])
            except ValueError:
                raise ParseError(f"weight {tok[2]!r} is not an integer", lineno) from None
            if w < 1:
                raise ParseError(f"weight {w} is not positive", lineno)
            if tok[1] in weights:
                raise ParseError(f"second weight for {tok[1]!r}", lineno)
            weights[tok[1]] = (w, lineno)
            labels.add(tok[1])
        else:
            raise ParseError(f"malformed line {raw.strip()!r}", lineno)
    degree = dict.fromkeys(labels, 0)
    for key in edges:
        for lab in key:
            degree[lab] += 1
    for lab, (w, lineno) in weights.items():
        if w > 1 and degree[lab] != 1:
            raise ParseError(f"weight on {lab!r}, which has degree {degree[lab]} instead of 1", lineno)
    for lab, (w, lineno) in weights.items():
        if w > 1:
            (other,) = [o for key in edges if lab in key for o in key if o != lab]
            if degree[other] == 1 and weights.get(other, (1, 0))[0] > 1:
                raise ParseError(f"both ends of the isolated edge {lab} {other} are weighted", lineno)
    doc_edges = [tuple(key) for key in edges]
    return GraphDocument.canonical(labels, doc_edges, {lab: w for lab, (w, _) in weights.items() if w > 1})


def emit_graph(doc: GraphDocument) -> str:
    touched = {lab for e in doc.edges for lab in e}
    lines = [f"c n={len(doc.labels)} m={len(doc.edges)}"]
    lines += [f"v {lab}" for lab in doc.labels if lab not in touched]
    lines += [f"e {a} {b}" for a, b in doc.edges]
    lines += [f"w {lab} {w}" for lab, w in doc.weights.items()]
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, doc: GraphDocument) -> list[int]:
    """Vertex labels in position order, whitespace separated; comment lines allowed."""
    rank = doc.index()
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        for lab in tok:
            if lab not in rank:
                raise ParseError(f"unknown vertex {lab!r} in ordering", lineno)
            out.append(rank[lab])
    return out

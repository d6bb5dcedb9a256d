"""Command-line front end: ``minprofile <command> ...``.

Exit status is 0 on success (YES for ``decide``), 1 for a NO answer and 2 for
any input, validation or capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..decomposition import bridgeless_components, chain_decomposition, ear_decomposition, find_bridges
from ..errors import ProfileError
from ..graph_core import profile_of_ordering
from ..kernelization import kernelize
from ..solvers import SolverConfig, decide_pavgv, exact_profile, exact_weighted_profile, interval_supergraph, lower_bound
from . import generators
from .formats import GraphDocument, emit_graph, parse_graph, parse_ordering


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _config(args) -> SolverConfig:
    base = SolverConfig()
    return SolverConfig(
        dp_cap=args.cap if args.cap is not None else base.dp_cap,
        weighted_cap=args.cap if args.cap is not None else base.weighted_cap,
        node_budget=args.budget if args.budget is not None else base.node_budget,
        time_budget=args.time_budget,
    )


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_solve(args) -> int:
    doc = parse_graph(_read(args.file))
    config = _config(args)
    if doc.is_weighted:
        wg = doc.to_weighted()
        res = exact_weighted_profile(wg, config)
        bound = lower_bound(wg) if wg.graph.is_connected() else None
    else:
        g = doc.to_graph()
        res = exact_profile(g, config)
        bound = lower_bound(g) if g.is_connected() else None
    order = [doc.labels[v] for v in res.witness.sequence]
    payload = {"profile": res.profile, "ordering": order, "bounds": {"lower": bound}, "nodes": res.node_count}
    _emit(args, payload, [str(res.profile), " ".join(order)])
    return 0


def cmd_decide(args) -> int:
    doc = parse_graph(_read(args.file))
    graph = doc.to_weighted() if doc.is_weighted else doc.to_graph()
    dec = decide_pavgv(graph, args.k, _config(args))
    order = None if dec.witness is None else [doc.labels[v] for v in dec.witness.sequence]
    payload = {
        "decision": "YES" if dec.answer else "NO",
        "profile": dec.witness_profile,
        "ordering": order,
        "kernel": {"n": dec.kernel_n, "m": dec.kernel_m, "rho": dec.kernel_rho, "profile": dec.kernel_profile},
        "bounds": {"target": dec.target, "kernel_n_max": 12 * args.k + 6, "kernel_m_max": 13 * args.k + 5},
        "reason": dec.reason,
    }
    lines = ["YES" if dec.answer else "NO", f"target {dec.target}"]
    if dec.answer:
        lines += [f"profile {dec.witness_profile}", " ".join(order)]
    _emit(args, payload, lines)
    return 0 if dec.answer else 1


def cmd_kernelize(args) -> int:
    doc = parse_graph(_read(args.file))
    res = kernelize(doc.to_weighted(), args.k)
    labels = [doc.labels[v] for v in res.origin]
    kdoc = GraphDocument.from_graph(res.kernel, labels)
    trace = res.trace.to_text(doc.labels)
    if args.json:
        payload = {
            "kernel": {"n": res.kernel.n, "m": res.kernel.graph.m, "rho": res.kernel.total_weight},
            "document": emit_graph(kdoc),
            "trace": trace.splitlines(),
            "bounds": {"n_max": 12 * args.k + 6, "m_max": 13 * args.k + 5},
        }
        print(json.dumps(payload, indent=2))
        return 0
    sys.stdout.write(emit_graph(kdoc))
    if args.emit_trace:
        for line in trace.splitlines():
            print(f"c trace {line}")
    return 0


def cmd_decompose(args) -> int:
    doc = parse_graph(_read(args.file))
    g = doc.to_graph()
    lab = doc.labels
    bridges = find_bridges(doc.to_weighted())
    comps = bridgeless_components(g)
    chain = chain_decomposition(g)
    ears = []
    for comp in comps:
        if len(comp) < 3:
            continue
        sub, back = g.induced(comp)
        dec = ear_decomposition(sub)
        ears.append([
            {"kind": kind, "walk": [lab[back[v]] for v in ear]} for ear, kind in zip(dec.ears, dec.kinds)
        ])
    payload = {
        "bridges": [{"edge": [lab[b.edge[0]], lab[b.edge[1]]], "order": b.order} for b in bridges],
        "components": [[lab[v] for v in c] for c in comps],
        "chain": None if chain is None else [sorted((lab[v] for v in c), key=doc.labels.index) for c in chain.components],
        "ears": ears,
    }
    lines = ["bridges: " + (" ".join(f"{lab[b.edge[0]]}-{lab[b.edge[1]]}(order {b.order})" for b in bridges) or "none")]
    lines.append("components: " + " ".join("{" + " ".join(lab[v] for v in c) + "}" for c in comps))
    if chain is None:
        lines.append("chain: not a chain")
    else:
        lines.append("chain: " + " -> ".join("{" + " ".join(x) + "}" for x in payload["chain"]))
    for i, comp_ears in enumerate(ears):
        for ear in comp_ears:
            lines.append(f"ear[{i}] {ear['kind']}: " + " ".join(ear["walk"]))
    _emit(args, payload, lines)
    return 0


def cmd_interval(args) -> int:
    doc = parse_graph(_read(args.file))
    g = doc.to_graph()
    if args.ordering:
        seq = parse_ordering(_read(args.ordering), doc)
    else:
        seq = exact_profile(g, _config(args)).witness.sequence
    model = interval_supergraph(g, seq)
    value = profile_of_ordering(g, seq).total
    order = [doc.labels[v] for v in seq]
    payload = {
        "profile": value,
        "ordering": order,
        "intervals": {doc.labels[v]: list(iv) for v, iv in enumerate(model.intervals)},
        "supergraph_edges": model.edge_count,
    }
    lines = [f"{doc.labels[v]} [{lo}, {hi}]" for v, (lo, hi) in enumerate(model.intervals)]
    lines += [f"edges {model.edge_count}", f"profile {value}"]
    _emit(args, payload, lines)
    return 0


def _base_graph(base_text: str, seed: int):
    family, _, rest = base_text.partition(":")
    vals = [v for v in rest.split(",") if v]
    return _build(family, vals, seed)


def _build(family: str, vals: list[str], seed: int):
    if family in ("path", "cycle", "clique", "star"):
        (n,) = vals
        return generators.generate(family, int(n))
    if family == "random_connected":
        n, p = vals
        return generators.random_connected(int(n), float(p), seed)
    if family in ("random_tree", "random_chain"):
        (n,) = vals
        return generators.generate(family, int(n), seed)
    if family == "chain_of_cycles":
        return generators.chain_of_cycles([int(v) for v in vals])
    if family == "pendant_attach":
        base, *pairs = vals
        counts = {}
        for item in pairs:
            v, c = item.split(":")
            counts[int(v)] = int(c)
        return generators.pendant_attach(_base_graph(base, seed), counts)
    if family == "vap":
        base, r, k = vals
        return generators.vap_gadget(_base_graph(base, seed), int(r), int(k))
    raise ValueError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    try:
        g = _build(args.family, args.args, args.seed)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ProfileError):
            raise
        raise ValueError(f"bad arguments for {args.family}: {' '.join(args.args)}") from exc
    sys.stdout.write(emit_graph(GraphDocument.from_graph(g)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minprofile", description="Minimum profile of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--cap", type=int, help="exact-solver vertex cap")
        p.add_argument("--budget", type=int, help="branch-and-bound node budget")
        p.add_argument("--time-budget", type=float, help="branch-and-bound time budget in seconds")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("solve", help="minimum profile and an optimal ordering")
    p.add_argument("file")
    solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decide", help="is prf(G) <= |V| - 1 + k ?")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    solver_flags(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("kernelize", help="reduce to a kernel for parameter k")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--emit-trace", action="store_true", help="append the rule trace as comment lines")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("decompose", help="bridges, bridgeless components, chain and ears")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("interval", help="interval supergraph of an ordering")
    p.add_argument("file")
    p.add_argument("--ordering", help="file listing vertex labels in position order")
    solver_flags(p)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("gen", help="write a generated graph to standard output")
    p.add_argument("family", choices=sorted(generators.FAMILIES) + ["vap"])
    p.add_argument("args", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProfileError, ValueError, OSError) as exc:
        print(f"minprofile: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

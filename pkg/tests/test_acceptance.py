"""Acceptance run: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from minprofile import (  # noqa: E402
    conformalize,
    decide_pavgv,
    exact_profile,
    exact_weighted_profile,
    interval_supergraph,
    is_conformal,
    is_two_edge_connected,
    kernelize,
    profile_by_edge_lengths,
    profile_by_prefix_boundary,
    profile_of_ordering,
)
from minprofile.cli_io.generators import clique, cycle, path, pendant_attach, random_chain, vap_gadget, vap_parameters  # noqa: E402
from oracles import (  # noqa: E402
    atlas_connected,
    brute_force_profile,
    definitional_profile,
    optimal_orderings,
    random_connected_graph,
    random_two_edge_connected,
)


def c01_cycles():
    """exact_profile(C_n) = 2n - 3 for n = 3..14 in under 10 s."""
    start = time.perf_counter()
    wrong = [n for n in range(3, 15) if exact_profile(cycle(n)).profile != 2 * n - 3]
    elapsed = time.perf_counter() - start
    return not wrong and elapsed < 10, f"wrong at {wrong}" if wrong else "n = 3..14", 10


def c02_cliques():
    """exact_profile(K_i) = C(i, 2) for i = 2..8."""
    wrong = [i for i in range(2, 9) if exact_profile(clique(i)).profile != math.comb(i, 2)]
    return not wrong, f"wrong at {wrong}" if wrong else "i = 2..8", None


def c03_oracle():
    """Exact solver equals permutation brute force on the atlas up to 7 vertices plus 200 random 8-vertex graphs."""
    start = time.perf_counter()
    graphs = list(atlas_connected(7))
    rng = random.Random(2003)
    graphs += [random_connected_graph(8, rng) for _ in range(200)]
    wrong = 0
    for g in graphs:
        res = exact_profile(g)
        if res.profile != brute_force_profile(g) or definitional_profile(g, res.witness.sequence) != res.profile:
            wrong += 1
    elapsed = time.perf_counter() - start
    return wrong == 0 and elapsed < 300, f"{len(graphs)} graphs, {wrong} mismatches", 300


def c04_identities():
    """Definitional, edge-length and prefix-boundary profiles agree on 1000 (graph, ordering) pairs in under 10 s."""
    start = time.perf_counter()
    rng = random.Random(2004)
    wrong = 0
    for _ in range(1000):
        n = rng.randint(1, 14)
        g = random_connected_graph(n, rng)
        seq = list(range(n))
        rng.shuffle(seq)
        values = {
            definitional_profile(g, seq),
            profile_of_ordering(g, seq).total,
            profile_by_edge_lengths(g, seq),
            profile_by_prefix_boundary(g, seq),
        }
        wrong += len(values) != 1
    elapsed = time.perf_counter() - start
    return wrong == 0 and elapsed < 10, f"1000 pairs, {wrong} disagreements", 10


def c05_two_edge_connected():
    """prf(G) >= ceil((3n - 3) / 2) on 100 two-edge-connected graphs with n <= 12."""
    rng = random.Random(2005)
    wrong = 0
    for _ in range(100):
        g = random_two_edge_connected(rng.randint(3, 12), rng)
        assert is_two_edge_connected(g)
        wrong += exact_profile(g).profile < math.ceil((3 * g.n - 3) / 2)
    return wrong == 0, f"100 graphs, {wrong} below the bound", None


def _kernel_sweep():
    """200 chain-structured graphs with pendants and at most 14 vertices, each k in {1, 2, 3} under the promise."""
    rng = random.Random(2006)
    rows = []
    for _ in range(200):
        spine = rng.randint(2, 10)
        g = random_chain(spine, rng.randrange(10**9), cycle_prob=0.3)
        room = 14 - g.n
        if room:
            extra = {rng.randrange(g.n): rng.randint(1, min(3, room))}
            g = pendant_attach(g, extra)
        prf = exact_profile(g).profile
        for k in (1, 2, 3):
            if prf > g.n - 1 + k:
                continue
            res = kernelize(g, k)
            kern = res.kernel
            kprf = exact_weighted_profile(kern).profile
            rows.append((g, k, prf - g.n, kprf - kern.total_weight, kern.n, kern.graph.m))
    return rows


_SWEEP: list | None = None


def _sweep():
    global _SWEEP
    if _SWEEP is None:
        _SWEEP = _kernel_sweep()
    return _SWEEP


def c06_kernel_soundness():
    """prf - rho is unchanged by kernelization under the promise."""
    rows = _sweep()
    wrong = sum(before != after for _, _, before, after, _, _ in rows)
    per_k = {k: sum(row[1] == k for row in rows) for k in (1, 2, 3)}
    shrunk = sum(n < g.n for g, _, _, _, n, _ in rows)
    detail = f"{len(rows)} (graph, k) pairs {per_k}, {shrunk} kernels smaller than their input, {wrong} mismatches"
    return wrong == 0 and all(per_k.values()), detail, None


def c07_kernel_size():
    """Fixpoint kernels satisfy n <= 12k + 6 and m <= 13k + 5 in the same sweep."""
    rows = _sweep()
    wrong = sum(n > 12 * k + 6 or m > 13 * k + 5 for _, k, _, _, n, m in rows)
    largest = max(n for *_, n, _ in rows)
    return wrong == 0 and bool(rows), f"{len(rows)} kernels, largest n = {largest}, {wrong} oversized", None


def c08_decide():
    """decide_pavgv agrees with the exact solver on 300 sampled (graph, k), with verified witnesses, in under 10 min."""
    start = time.perf_counter()
    rng = random.Random(2008)
    wrong = yes = 0
    for i in range(300):
        n = rng.randint(1, 12)
        if i % 2:
            g = random_chain(n, rng.randrange(10**9))
        else:
            g = random_connected_graph(n, rng, p=rng.uniform(0.0, 0.5))
        k = rng.randint(1, 5)
        truth = exact_profile(g).profile <= g.n - 1 + k
        dec = decide_pavgv(g, k)
        if dec.answer != truth:
            wrong += 1
        elif dec.answer:
            yes += 1
            wrong += profile_of_ordering(g, dec.witness).total > g.n - 1 + k
    elapsed = time.perf_counter() - start
    return wrong == 0 and elapsed < 600, f"300 samples, {yes} YES, {wrong} wrong", 600


def c09_conformal():
    """conformalize keeps every optimal ordering of every connected graph up to 7 vertices optimal and makes it conformal."""
    count = wrong = 0
    for g in atlas_connected(7):
        for seq in optimal_orderings(g):
            count += 1
            out = conformalize(g, seq)
            wrong += not is_conformal(g, out) or definitional_profile(g, out.sequence) != definitional_profile(g, seq)
    return wrong == 0, f"{count} optimal orderings, {wrong} failures", None


def c10_interval():
    """The interval supergraph of an optimal ordering has prf(G) edges and contains G, on 100 graphs with n <= 10."""
    rng = random.Random(2010)
    wrong = 0
    for _ in range(100):
        g = random_connected_graph(rng.randint(1, 10), rng)
        opt = exact_profile(g)
        model = interval_supergraph(g, opt.witness)
        contains = all(model.supergraph.has_edge(u, v) for u, v in g.edges())
        wrong += model.edge_count != opt.profile or model.supergraph.m != opt.profile or not contains
    return wrong == 0, f"100 graphs, {wrong} failures", None


def c11_vap():
    """prf(G') = k prf(G) + C(i, 2) for P3, P4, C4 with k = 2, and prf(G) <= r iff prf(G') <= k |V(G')|."""
    k = 2
    wrong = checked = 0
    for base in (path(3), path(4), cycle(4)):
        prf = exact_profile(base).profile
        for r in range(max(0, prf - 2), prf + 3):
            i, _ = vap_parameters(base.n, r, k)
            gadget = vap_gadget(base, r, k)
            total = 0
            for comp in gadget.components():
                sub, _ = gadget.induced(comp)
                total += math.comb(i, 2) if len(comp) == i else exact_profile(sub).profile
            checked += 1
            wrong += total != k * prf + math.comb(i, 2)
            wrong += (prf <= r) != (total <= k * gadget.n)
    return wrong == 0, f"{checked} gadgets, {wrong} failures", None


CRITERIA = [
    ("1 cycle formula", c01_cycles),
    ("2 clique formula", c02_cliques),
    ("3 oracle equivalence", c03_oracle),
    ("4 evaluation identities", c04_identities),
    ("5 2-edge-connected bound", c05_two_edge_connected),
    ("6 kernel soundness", c06_kernel_soundness),
    ("7 kernel size", c07_kernel_size),
    ("8 end-to-end decision", c08_decide),
    ("9 conformalization", c09_conformal),
    ("10 interval equivalence", c10_interval),
    ("11 VAP gadget", c11_vap),
]


def run(name, check):
    start = time.perf_counter()
    ok, detail, limit = check()
    elapsed = time.perf_counter() - start
    budget = f" (limit {limit} s)" if limit else ""
    return ok, f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}; {elapsed:.1f} s{budget}"


@pytest.mark.parametrize("name, check", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion(name, check, capsys):
    ok, line = run(name, check)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run(name, check) for name, check in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

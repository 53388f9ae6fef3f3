#!/usr/bin/env python3
"""Compare the compiled and pure-Python flow kernels on representative
workloads: global connectivity, brute-force minimality sweeps, and a small
theorem-style batch.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from groupgraphs import _flowpure
from groupgraphs.builders import order_superpower_graph
from groupgraphs.families import parse_group_spec
from groupgraphs.graphs import complete_graph, graph_from_edges
from groupgraphs.groups import build_group

try:
    from groupgraphs import _flowcore
except ImportError:
    _flowcore = None


def group_graph(text):
    return order_superpower_graph(build_group(parse_group_spec(text))).graph


def workloads():
    k32 = complete_graph(32)
    s48 = group_graph("Z(48)")
    s60 = group_graph("Z(60)")
    ladder = graph_from_edges(
        40, [(i, i + 2) for i in range(38)] + [(i, i + 1) for i in range(0, 39, 2)])
    yield "edge_conn  K32", "edge_conn", k32
    yield "edge_conn  S(Z60)", "edge_conn", s60
    yield "vertex_conn S(Z60)", "vertex_conn", s60
    yield "mec        K32", "mec_witness", k32
    yield "mec        S(Z48)", "mec_witness", s48
    yield "mc         K32", "mc_witness", k32
    yield "mc         ladder40", "mc_witness", ladder


def run(module, fn_name, graph, repeat):
    us, vs = graph.edge_arrays()
    fn = getattr(module, fn_name)
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(graph.n, us, vs)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _flowcore is None:
        print("compiled kernel not built; showing pure timings only")
    header = f"{'workload':24s} {'result':>7s} {'pure':>10s}"
    if _flowcore is not None:
        header += f" {'compiled':>10s} {'speedup':>8s}"
    print(header)
    for label, fn_name, graph in workloads():
        pure_result, pure_time = run(_flowpure, fn_name, graph, args.repeat)
        line = f"{label:24s} {pure_result!r:>7s} {pure_time * 1000:9.1f}ms"
        if _flowcore is not None:
            core_result, core_time = run(_flowcore, fn_name, graph, args.repeat)
            assert core_result == pure_result, (label, core_result, pure_result)
            line += f" {core_time * 1000:9.1f}ms {pure_time / core_time:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()

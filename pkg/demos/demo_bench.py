#!/usr/bin/env python3
"""Walkthrough: the benchmark harness.

Builds an oracle, runs a seeded random query workload, and reports build
time, query-time percentiles, structure size, and the agreement rate against
the brute-force ground truth (anything below 1.0 is a bug).
"""

import json

from vertexcuts.bench import run_bench
from vertexcuts.generators import gen_connected_gnp, gen_lb_family
from vertexcuts.oracle import OracleMode

g = gen_connected_gnp(96, 0.07, seed=2)
report = run_bench(g, f=4, n_queries=300, seed=1)
print(json.dumps({k: report[k] for k in
                  ("n", "m", "f", "mode", "build_seconds", "query_us",
                   "agreement_rate", "structure_bytes")}, indent=1))

lb, _ = gen_lb_family(64, 4, seed=3)   # f-connected by construction
report = run_bench(lb, f=4, mode=OracleMode.FCONNECTED, n_queries=300, seed=1)
print(json.dumps({k: report[k] for k in
                  ("n", "f", "mode", "agreement_rate", "stats_law_rate",
                   "max_nodes_visited")}, indent=1))

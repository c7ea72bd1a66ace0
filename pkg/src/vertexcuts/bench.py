"""Benchmark harness: build + query workloads with agreement checking."""

from __future__ import annotations

import random
import statistics
import time
from typing import Optional

from .decomposition import TreeParams
from .graph import Graph, is_cut_bruteforce
from .io import oracle_to_bytes
from .oracle import OracleMode, build_oracle
from .validate import check_query_stats

SCHEMA_VERSION = 1


def run_bench(g: Graph, f: int, mode: OracleMode = OracleMode.GENERAL,
              n_queries: int = 500, seed: int = 0,
              params: Optional[TreeParams] = None,
              check_agreement: bool = True) -> dict:
    """Build an oracle, run a seeded random query workload, and report build
    time, query-time distribution, stats-law compliance, structure size, and
    the agreement rate against the brute-force oracle (must be 1.0)."""
    rng = random.Random(seed)
    t0 = time.perf_counter()
    oracle = build_oracle(g, f, mode, params)
    build_seconds = time.perf_counter() - t0

    sizes = ([f] * n_queries if mode is OracleMode.FCONNECTED
             else [rng.randint(0, f) for _ in range(n_queries)])
    queries = [frozenset(rng.sample(range(g.n), k)) for k in sizes]

    times_us: list[float] = []
    agree = 0
    stats_ok = 0
    max_nodes = 0
    for fs in queries:
        t0 = time.perf_counter()
        got, stats_list = oracle.query_with_stats(fs)
        times_us.append((time.perf_counter() - t0) * 1e6)
        if all(check_query_stats(st) for st in stats_list):
            stats_ok += 1
        max_nodes = max(max_nodes, sum(st.nodes_visited for st in stats_list))
        if check_agreement:
            if got == is_cut_bruteforce(g, fs):
                agree += 1
        else:
            agree += 1
    times_sorted = sorted(times_us)

    def pct(p: float) -> float:
        return times_sorted[min(len(times_sorted) - 1, int(p * len(times_sorted)))]

    return {
        "schema_version": SCHEMA_VERSION,
        "n": g.n,
        "m": g.m,
        "f": f,
        "mode": mode.value,
        "build_seconds": build_seconds,
        "queries": n_queries,
        "query_us": {
            "mean": statistics.fmean(times_us) if times_us else 0.0,
            "p50": pct(0.50) if times_us else 0.0,
            "p95": pct(0.95) if times_us else 0.0,
            "max": times_sorted[-1] if times_us else 0.0,
        },
        "agreement_rate": agree / n_queries if n_queries else 1.0,
        "stats_law_rate": stats_ok / n_queries if n_queries else 1.0,
        "max_nodes_visited": max_nodes,
        "structure_bytes": len(oracle_to_bytes(oracle)),
        "oracle_manifest": oracle.manifest,
    }

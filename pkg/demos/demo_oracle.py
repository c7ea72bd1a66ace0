#!/usr/bin/env python3
"""Walkthrough: build an f-vertex cut oracle and query it.

The oracle answers "is F a vertex cut?" for any F with |F| <= f. Internally
it sparsifies the graph, decomposes it into a tree of left/right instances,
attaches small cut detectors, and iterates terminal reduction until the
terminal set empties.
"""

from itertools import combinations

from vertexcuts import Graph, build_oracle, is_cut_bruteforce
from vertexcuts.oracle import OracleMode

# Two K5 blocks sharing vertex 4: the shared vertex is the only 1-cut.
edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
edges += [(i, j) for i in range(4, 9) for j in range(i + 1, 9)]
g = Graph(9, edges)

oracle = build_oracle(g, f=2)
print("manifest:", oracle.manifest["rounds"])

for fs in [(4,), (0,), (0, 4), (5, 6)]:
    print(f"F={fs}: oracle says {'cut' if oracle.query(fs) else 'not a cut'}, "
          f"brute force says {'cut' if is_cut_bruteforce(g, fs) else 'not a cut'}")

# exhaustive agreement, the property the whole construction is tested against
mismatch = sum(1 for k in range(3) for fs in combinations(range(9), k)
               if oracle.query(fs) != is_cut_bruteforce(g, fs))
print("exhaustive |F| <= 2 mismatches:", mismatch)

# f-connected fast path: C6 is 2-connected, queries are minimum-cut sized
cycle = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
fc = build_oracle(cycle, 2, OracleMode.FCONNECTED)
verdict, stats = fc.query_with_stats({0, 3})
print("C6 - {0,3} minimum cut:", verdict, "| nodes visited:",
      stats[0].nodes_visited if stats else 0)

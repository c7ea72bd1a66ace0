#!/usr/bin/env python3
"""Walkthrough: the generator families used for lower-bound style experiments.

The subset family pins down oracle space (each chosen f-subset of the clique
is a cut, every fresh one is not, so the oracle's bits encode the family);
the chorded path does the same for f = 1; the OV and OuMv graphs turn vector
problems into cut queries.
"""

from itertools import combinations

from vertexcuts import build_oracle, is_cut_bruteforce
from vertexcuts.generators import (gen_lb_family, gen_lb_path, gen_ov_graph,
                                   gen_oumv_graph, lb_path_chord_queries)
from vertexcuts.io import oracle_to_bytes

g, family = gen_lb_family(16, 2, seed=7)
oracle = build_oracle(g, 2)
print("chosen subsets:", [sorted(s) for s in family])
hits = sum(oracle.query(s) for s in family)
fresh = [frozenset(p) for p in combinations(range(8), 2) if frozenset(p) not in set(family)]
false_hits = sum(oracle.query(s) for s in fresh)
print(f"chosen subsets answered cut: {hits}/{len(family)}; "
      f"fresh subsets answered cut: {false_hits}/{len(fresh)}")
print("serialized oracle size:", len(oracle_to_bytes(oracle)), "bytes")

print()
path = gen_lb_path(13, seed=3)
o1 = build_oracle(path, 1)
bits = [int(not o1.query([q])) for q, _ in lb_path_chord_queries(13)]
truth = [int(path.has_edge(*chord)) for _, chord in lb_path_chord_queries(13)]
print("chord bits recovered from oracle answers:", bits)
print("chord bits in the generated graph:      ", truth)

print()
vectors = [(1, 0, 1), (0, 1, 1)]
gv, qmap = gen_ov_graph(vectors)
for b in [(0, 1, 0), (1, 1, 1)]:
    orth = any(all(a[i] * b[i] == 0 for i in range(3)) for a in vectors)
    print(f"b={b}: orthogonal mate exists={orth}, "
          f"F_b is a cut={is_cut_bruteforce(gv, qmap(b))}")

m = [[1, 0], [0, 1]]
gm, qm = gen_oumv_graph(m)
u, v = (1, 0), (0, 1)
prod = any(u[i] and m[i][j] and v[j] for i in range(2) for j in range(2))
print(f"u^T M v = {int(prod)}, F(u,v) is a cut = {is_cut_bruteforce(gm, qm(u, v))}")

#!/usr/bin/env python3
"""Walkthrough: the cut-respecting terminal-expander decomposition.

A graph is split recursively along sparse terminal cuts into left/right
instances until every piece is a terminal expander or has few terminals.
The leaves of all terminal-reduction rounds jointly capture every small cut.
"""

from fractions import Fraction

from vertexcuts import Graph
from vertexcuts.decomposition import (TreeParams, build_lr_tree, export_ted,
                                      validate_lr_tree, validate_ted)

edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
edges += [(i, j) for i in range(4, 9) for j in range(i + 1, 9)]
g = Graph(9, edges)   # two K5 blocks sharing vertex 4

# A large eps forces the recursion to actually split at this size.
params = TreeParams(eps_override=Fraction(1, 2))
tree = build_lr_tree(g, range(9), f=1, params=params)
print("tree depth (levels):", tree.depth)
for node in tree.nodes:
    pad = "  " * node.depth
    sep = sorted(node.cut.sep) if node.cut else ""
    print(f"{pad}{node.kind.value}: |V|={node.graph.n} |T|={len(node.terminals)} {sep}")
print("union of separators S*:", sorted(tree.s_star))
print("tree validation:", "ok" if validate_lr_tree(tree, g, range(9)).ok else "FAILED")

print()
ted = export_ted(g, f=1, params=params)
print(f"decomposition: {len(ted.entries)} pairs over {ted.rounds} rounds")
for e in ted.entries:
    print(f"  round {e.round_index}: {e.kind.value}, |V|={e.graph.n}, "
          f"T={sorted(e.terminals)}")
rep = validate_ted(ted, g, 1)
print("decomposition validation:")
print(rep.summary())

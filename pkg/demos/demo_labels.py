#!/usr/bin/env python3
"""Walkthrough: vertex cut labels.

Every vertex gets a short label; a cut query F is answered from the labels
of F alone. High-degree vertices carry explicit records describing the
largest component left when a subset of them is deleted.
"""

from vertexcuts import Graph, is_cut_bruteforce
from vertexcuts.labels import (build_labels, label_length_report,
                               query_labels_scheme)

# A star: the center is the lone high-degree vertex at f = 1.
star = Graph(9, [(0, i) for i in range(1, 9)])
scheme = build_labels(star, f=1)
print("high-degree set:", sorted(scheme.high))
center = scheme.labels[0]
rec = center.explicit[frozenset({0})]
print(f"explicit record for K={{0}}: largest component size {rec.size_a}")

for fs in [(0,), (3,)]:
    print(f"F={fs}: labels say {'cut' if query_labels_scheme(scheme, fs) else 'not a cut'}, "
          f"brute force says {'cut' if is_cut_bruteforce(star, fs) else 'not a cut'}")

print()
print("length accounting:")
for key, value in sorted(label_length_report(scheme).items()):
    print(f"  {key}: {value}")

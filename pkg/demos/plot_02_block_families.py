"""
Perfect matchings of M(K4), grouped by the line-graph matching they extend
==========================================================================

M(G) splits into one K4 per vertex of G. Every perfect matching of M(G)
restricts to a perfect matching of L(G) on the "occupied" blocks, and the
remaining free blocks can be completed in 3 ways each.
"""

import json

from dimerlab import audit_bijection, middle_graph, named_cubic, structured_pm_families
from dimerlab.transforms import k4_decomposition

g = named_cubic("K4")
mg = middle_graph(g)

for block in k4_decomposition(mg):
    print("block at vertex", block.base_vertex, "edges", block.base_edges)

families = structured_pm_families(g, mg)
for fam in families:
    print(json.dumps(fam.to_dict()))

# Cross-check against brute-force enumeration of M(K4).
print(audit_bijection(g).to_dict())

"""
Reducing a subcubic graph to its cubic core
===========================================

Pendant removal and smoothing of degree-2 vertices leave the number of
dimer coverings of the vertex-edge graph unchanged. We follow one graph
step by step and watch the count stay put.
"""

from dimerlab import count_pm, middle_graph, predict_pm_middle, reduce_to_base
from dimerlab.lattices import random_subcubic
from dimerlab.transforms import ReductionTrace

g = random_subcubic(9, seed=0, extra=1.0, even_edges=False)
print("input:", g, "degrees", g.degrees())

base, trace = reduce_to_base(g)
cur = g
print(f"{'start':>22s}  p(M) = {count_pm(middle_graph(cur))}")
for step in trace.steps:
    cur = ReductionTrace(steps=[step]).replay(cur)
    print(f"{step.kind:>8s} vertex {step.vertex:2d} -> {cur}  p(M) = {count_pm(middle_graph(cur))}")

print("base class:", trace.base_class)
print("prediction:", predict_pm_middle(g).to_dict())

"""
Weighted silicate network on the torus
======================================

The silicate network is the vertex-edge graph of the honeycomb torus. With
six direction weights a, b, c, x, y, z the weighted dimer sum factorises as
2^(mn+1) (xyz)^(mn/2) (ax+by+cz)^(mn/2).
"""

from dimerlab import (
    count_pm,
    kagome_torus,
    pm_kagome_weighted,
    pm_silicate_weighted,
    silicate_torus,
    weighted_pm_sum,
)

rows, cols = 2, 2

k = kagome_torus(rows, cols)
print("Kagome  ", k, "count", count_pm(k))
print("  weighted:", weighted_pm_sum(k))
print("  formula: ", pm_kagome_weighted(cols, rows))

s = silicate_torus(rows, cols)
print("Silicate", s, "count", count_pm(s))
got = weighted_pm_sum(s)
want = pm_silicate_weighted(cols, rows)
print("  weighted:", got)
print("  agrees with closed form:", got == want)

# Evaluate at concrete weights, e.g. a=b=c=1, x=2, y=3, z=5.
print("  at a=b=c=1, x=2, y=3, z=5:", got.evaluate(x=2, y=3, z=5))

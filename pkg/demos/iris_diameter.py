"""
The diameter of Iris, five ways
===============================

Brute force against the four greedy searches on the 150 x 4 Iris table.
"""

import numpy as np

import furthest_pair as fp

# Iris ships with the package.  The class label (column 4) is dropped on load.
ds = fp.iris()
print(ds.name, ds.n, "points in", ds.d, "dimensions")

# brute force looks at every one of the n(n-1)/2 pairs
bf = fp.brute_force(ds)
print(f"BF    {bf.value:.6f}  pair {bf.pair}  {bf.distance_evals} distances")

# the pair is ordinary data, so the value can be checked by hand
a, b = ds.points[list(bf.pair)]
print("by hand", np.sqrt(((a - b) ** 2).sum()))

# the greedy searches evaluate far fewer distances
cfg = fp.AlgoConfig(seed=7)
for alg in ("norms", "hc", "tabu", "beam"):
    res = fp.run(alg, ds, cfg)
    print(f"{res.algorithm.value:5} {res.value:.6f}  pair {res.pair}  "
          f"{res.iterations:3} iterations  {res.distance_evals:5} distances")

# hill climbing keeps the best distance of every scan; the last scan finds nothing better
hc = fp.hill_climbing(ds, cfg)
print("hill climbing trace", [round(t, 3) for t in hc.trace])

# on a handful of seeds the randomized searches still land on the exact answer
hits = sum(fp.hill_climbing(ds, cfg.with_seed(s)).value == bf.value for s in range(20))
print(f"hill climbing exact on {hits}/20 seeds")

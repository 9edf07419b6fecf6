"""
Ties, tabu lists and beams
==========================

Binary data has few distinct distances, so many points tie for "furthest".
Hill climbing stops at the first plateau.  The tabu search queues every tied
point and keeps going.  Beam search starts from several random points at once.
"""

import statistics

import furthest_pair as fp

spec = fp.SyntheticSpec(256, 16, distribution="bernoulli", seed=0)
ds = fp.generate_synthetic(spec)
exact = fp.brute_force(ds).value
print("bernoulli 256 x 16, exact diameter", exact)

cfg = fp.AlgoConfig(seed=0)
hc = fp.hill_climbing(ds, cfg)
tabu = fp.tabu_search(ds, cfg)
print(f"hill climbing {hc.value:.4f} after {hc.iterations} scans")
print(f"tabu search   {tabu.value:.4f} after {tabu.iterations} iterations ({tabu.passes} dequeued)")

# over many seeds the queue of ties makes tabu search run longer
its_hc, its_tabu = [], []
for s in range(30):
    d = fp.generate_synthetic(fp.SyntheticSpec(256, 16, distribution="bernoulli", seed=s))
    its_hc.append(fp.hill_climbing(d, fp.AlgoConfig(seed=s)).iterations)
    its_tabu.append(fp.tabu_search(d, fp.AlgoConfig(seed=s)).iterations)
print("median iterations: hill climbing", statistics.median(its_hc),
      "tabu", statistics.median(its_tabu))

# real-valued data rarely ties; a relative tolerance widens what counts as one
cube = fp.generate_synthetic(fp.SyntheticSpec(400, 6, -1, 1, seed=3))
for tol in (0.0, 1e-3, 1e-2):
    r = fp.tabu_search(cube, fp.AlgoConfig(seed=1, tie_tolerance=tol))
    print(f"tie tolerance {tol:g}: {r.passes} points dequeued")

# wider beams cost more distances and lose less
exact = fp.brute_force(cube).value
for width in (1, 5, 20, 80):
    r = fp.beam_search(cube, fp.AlgoConfig(seed=1, beam_width=width))
    print(f"beam width {width:3}: gap {exact - r.value:.5f}, {r.distance_evals} distances")

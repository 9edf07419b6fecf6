"""
Counting operations instead of seconds
======================================

Most published diameter algorithms only exist as complexity bounds.  Setting
every hidden constant to 1 turns them into operation counts that can be set
next to brute force and the greedy searches.
"""

import furthest_pair as fp

dims = [("iris", 150, 4), ("sonar", 208, 60), ("phoneme", 5404, 5), ("waveform", 5000, 40)]

rows = fp.compare_cost_models(dims, epsilon=0.5)
methods = [r.method for r in rows if r.dataset == "iris"]
print("method " + "".join(f"{name:>12}" for name, _, _ in dims))
for m in methods:
    cells = [next(r.ops for r in rows if r.dataset == name and r.method == m) for name, _, _ in dims]
    print(f"{m:6} " + "".join(f"{c:12.2E}" for c in cells))

# the bounds with an exponential dependence on d explode on wide data
for d in (4, 20, 60, 112):
    print(f"d = {d:3}: M7 predicts {fp.predicted_ops('M7', fp.CostInputs(5000, d)):.2E} operations")

# epsilon = 1 switches the approximation terms off
print("M1 at epsilon 1:", fp.predicted_ops("M1", fp.CostInputs(150, 4, epsilon=1.0)))

# the greedy searches cost one n*d scan per iteration
print("A2 with 4 iterations on iris:", fp.predicted_ops("GREEDY", fp.CostInputs(150, 4, iterations=4)))

"""
Accuracy, efficiency and reports
================================

Accuracy is the share of the true diameter that an algorithm recovers.
Efficiency discounts it by cost relative to brute force, so brute force
itself always scores one half.
"""

import furthest_pair as fp

print("accuracy 26.1 of 34.5:", round(fp.accuracy(34.5, 26.1), 4))
print("brute force efficiency:", fp.efficiency(1.0, 44700, 44700))
print("exact in 2400 operations:", round(fp.efficiency(1.0, 2400, 44700), 3))

# an algorithm known only by its bound is assumed to be off by epsilon
acc = fp.assumed_accuracy(7.09, 0.5)
print("assumed accuracy on iris:", round(acc, 4))

# a full experiment: BF and A1 once, the randomized searches once per seed
rec = fp.run_experiment(fp.iris(), fp.AlgoConfig(), repeats=10, timing=False)
for alg in rec.per_algorithm:
    s = rec.statistics(alg)
    print(f"{alg.value:3} mean value {s['value_mean']:.4f}  "
          f"iterations {s['iterations_min']}..{s['iterations_max']}  exact {rec.exact_fraction(alg):.0%}")

# reports come as a human table, CSV or versioned JSON
rows = fp.compare_cost_models([("iris", 150, 4)])
print(fp.render_report([rec], rows, fmt="table", basis="ops"))
print(fp.render_report([rec], fmt="csv").splitlines()[0])

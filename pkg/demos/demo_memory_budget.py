"""From memory-operation counts to a clock-period floor.

Every photonic cycle the controller performs a block search whose memory
writes must all fit inside the clock period T_p. This script measures the
average predecessor writes per cycle for both algorithms at high edge
probability, shows the closed-form limits (2BH for the global search, H for
the incremental one), and converts the counts into the maximum acceptable
memory write time - plus the reverse question: given a realistic 150 ps
memory, how slow must the photonic clock be?

Run:  python3 demos/demo_memory_budget.py
"""

from clusterpath import ExperimentConfig, run_point
from clusterpath.timing import (clock_floor, gbfs_asymptotic_bound,
                                write_time_bound)

H, B, T_P = 20, 5, 1e-9

print(f"H={H}, B={B}, p=0.99, clock period {T_P * 1e9:.0f} ns")
print(f"closed-form global-search limit: 2BH = {2 * B * H} writes "
      f"-> t_write ~ {gbfs_asymptotic_bound(T_P, B, H) * 1e12:.1f} ps")
print()

for alg, limit in (("gbfs", 2 * B * H), ("ibfs", H)):
    cfg = ExperimentConfig(algorithm=alg, H=H, B=B, W=205, p=0.99,
                           reps=500, master_seed=2024)
    pt = run_point(cfg)
    t_write = write_time_bound(T_P, pt.mean_pred_writes)
    print(f"{alg}: measured {pt.mean_pred_writes:6.1f} writes/cycle "
          f"(limit {limit}), worst cycle {pt.max_pred_writes}")
    print(f"      -> max acceptable write time {t_write * 1e12:6.1f} ps")

print()
t_mem = 150e-12
print(f"with a {t_mem * 1e12:.0f} ps memory, the global search at these "
      f"parameters needs a clock period of at least "
      f"{clock_floor(t_mem, 2 * B * H) * 1e9:.0f} ns")

"""Watch the incremental search die where the global search survives.

The incremental search never rewrites a predecessor, so after it has laid a
horizontal trail through a well-connected region it cannot see the vertical
detours around a missing link: the new column exposes no usable successor
and the path ends. This script hunts for such a cluster, replays the dying
cycles in trace form, and shows the global search sailing past the same spot
on the identical edge stream.

Run:  python3 demos/demo_failure_case.py
"""

from clusterpath import ExperimentConfig, find_failure_case, trial_trace

P, B, H = 0.9, 4, 9

found = find_failure_case(p=P, B=B, H=H, max_seeds=100, W=300,
                          master_seed=77)
assert found is not None, "no failure within 100 seeds (p too close to 1?)"
idx, res_i, res_g = found

print(f"trial index {idx} (p={P}, B={B}, H={H})")
print(f"  incremental: depth {res_i.max_depth:4d}  ({res_i.termination})")
print(f"  global:      depth {res_g.max_depth:4d}  ({res_g.termination})")
print()

cfg = ExperimentConfig(algorithm="ibfs", H=H, B=B, W=300, p=P, reps=1,
                       master_seed=77)
trace = trial_trace(cfg, idx)
lines = trace.splitlines()
# show the last two cycles before death
starts = [i for i, ln in enumerate(lines) if ln.startswith("== cycle")]
print("\n".join(lines[starts[-2]:]))

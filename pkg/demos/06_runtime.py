"""Basic quadratic algorithm against the early-stop variant on random binary words."""

import sys

from unbordered.experiments import ExperimentConfig, loglog_slope, timing_experiment, write_csv

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 300
rows = timing_experiment(
    ExperimentConfig(n_values=tuple(range(10, 101, 10)), sigmas=(2,), trials=trials)
)
write_csv(rows, sys.stdout)
for r in rows:
    print(f"n={r.n:3d} speedup {r.times['basic'] / r.times['early_stop']:6.1f}x")

big = timing_experiment(ExperimentConfig(n_values=(128, 256, 512), sigmas=(2,), trials=20, repeats=7))
print("basic log-log slope:", round(loglog_slope([r.n for r in big], [r.times["basic"] for r in big]), 3))
print("early-stop log-log slope:", round(loglog_slope([r.n for r in big], [r.times["early_stop"] for r in big]), 3))

"""Average n - b(S): exact for short words, Monte Carlo for longer ones.

Writes gap.csv next to this script; plot mean_gap against n per sigma.
"""

import sys
from pathlib import Path

from unbordered.experiments import ExperimentConfig, gap_experiment, write_csv

exact = gap_experiment(ExperimentConfig(n_min=1, n_max=10, sigmas=(2, 3, 4), mode="exhaustive"))
write_csv(exact, sys.stdout)

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
rows = gap_experiment(ExperimentConfig(n_min=1, n_max=100, sigmas=(2, 3, 4, 5), trials=trials))
out = Path(__file__).with_name("gap.csv")
write_csv(rows, str(out))
for r in rows:
    if r.n == 100:
        print(f"sigma={r.sigma} n=100 mean gap {r.mean_gap:.3f} (sd {r.sd_gap:.3f})")
print("wrote", out)

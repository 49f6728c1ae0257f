# %% [markdown]
# # Training and comparison
#
# First a short A-PINN run on P3 to show the training loop. Then the default
# runs cached under runs/ are compared against the finite-difference
# baseline. Fill the cache with `python -m beampinn train --problem p3
# --model apinn --seed 0` (and so on); missing runs are skipped here.

# %%
from pathlib import Path

import numpy as np

from beampinn.cli import fdm_predictor, load_predictor
from beampinn.metrics import compute_errors, slice_at_time
from beampinn.network import MlpConfig
from beampinn.optim import TrainSchedule, train
from beampinn.problems import PROBLEM_IDS, get_problem
from beampinn.sampler import sample

RUNS = Path("../runs") if Path("../runs").exists() else Path("runs")

# %% [markdown]
# ## A short run
# 2000 epochs on a small network with fixed weights, so this takes well under a minute.

# %%
p3 = get_problem("p3")
colloc = sample(p3, counts=(200, 50, 50, 200), seed=0)
sched = TrainSchedule(total_epochs=2000, weight_mode="fixed")
params, report = train(p3, "apinn", MlpConfig(hidden_layers=2, width=20, outputs=2), sched, colloc, seed=0)
print(report.stop_reason, f"loss {report.initial_total:.3e} -> {report.final.total:.3e}")

# %%
totals = report.totals
for e in (0, len(totals) // 4, len(totals) // 2, len(totals) - 1):
    print(f"epoch {e + 1:4d}  total {totals[e]:.3e}")

# %% [markdown]
# ## Cached default runs

# %%
for pid in PROBLEM_IDS:
    prob = get_problem(pid)
    fdm = compute_errors(fdm_predictor(prob)[0], prob, model="fdm")
    print(f"{pid} fdm   E3={fdm.e3:.3e}")
    for model in ("pinn", "apinn", "sann"):
        for run in sorted(RUNS.glob(f"{pid}_{model}_s*")):
            if not (run / "params.json").exists():
                continue
            rep = compute_errors(load_predictor(run)[0], prob, model=model)
            print(f"{pid} {model:5s} {run.name:16s} E2={rep.e2:.3e} E3={rep.e3:.3e} E4={rep.e4:.3e}")

# %% [markdown]
# A slice table for the first cached A-PINN run on P3, if present.

# %%
run = RUNS / "p3_apinn_s0"
if (run / "params.json").exists():
    pred = load_predictor(run)[0]
    for row in slice_at_time(pred, p3, 0.9):
        print(*row)

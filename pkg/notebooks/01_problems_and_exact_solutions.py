# %% [markdown]
# # Benchmark problems
#
# Three simply supported beams, each with a closed-form solution. This
# notebook prints their parameters, checks that the exact solutions satisfy
# the equation, and prints the ground-truth slices used by the comparison
# tables.

# %%
import numpy as np

from beampinn.metrics import slice_at_time
from beampinn.problems import PROBLEM_IDS, get_problem, residual_of_exact

# %%
for pid in PROBLEM_IDS:
    p = get_problem(pid)
    print(f"{p.id}: x in [{p.x_min:.4g}, {p.x_max:.4g}], T={p.T}, c^2={p.c_sq}, kappa={p.kappa}, "
          f"counts={p.counts}")

# %% [markdown]
# The residual of the exact solution should sit at round-off. P2 has the
# largest forcing (about 16 pi^2), so it shows the largest round-off.

# %%
for pid in PROBLEM_IDS:
    p = get_problem(pid)
    X, T = np.meshgrid(np.linspace(p.x_min, p.x_max, 50), np.linspace(0, p.T, 50))
    print(pid, f"max |r| = {np.max(np.abs(residual_of_exact(p, X, T))):.2e}")

# %% [markdown]
# Ground-truth slices at the two table times of each problem.

# %%
for pid in PROBLEM_IDS:
    p = get_problem(pid)
    for t in p.table_times:
        rows = slice_at_time(None, p, t)
        print(f"{pid} t={t}: " + " ".join(gt for _, gt, _, _ in rows))

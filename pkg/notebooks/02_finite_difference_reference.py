# %% [markdown]
# # Finite-difference reference
#
# The explicit leapfrog scheme is the classical baseline. It converges at
# second order, and it blows up once dt passes the stability limit.

# %%
import numpy as np

from beampinn.fdm import FdmInstability, Grid, sample_solution, solve_fdm, stability_limit
from beampinn.metrics import compute_errors
from beampinn.problems import PROBLEM_IDS, get_problem

p1 = get_problem("p1")

# %% [markdown]
# ## Convergence at t = 0.25
# Halving dx, with dt = dx^2/4, should cut the max error by about four.

# %%
errs = []
for nx in (11, 21, 41, 81):
    sol = solve_fdm(p1, Grid.for_problem(p1, nx))
    x = sol.grid.x
    errs.append(np.max(np.abs(sample_solution(sol, x, np.full_like(x, 0.25)) - p1.exact(x, 0.25))))
    print(f"nx={nx:3d} dt={sol.grid.dt:.3e} max err {errs[-1]:.3e}")
print("observed orders", np.round(np.log2(np.array(errs[:-1]) / np.array(errs[1:])), 3))

# %% [markdown]
# ## Stability
# The conservative limit is dx^2/(2c). The discrete operator on 11 nodes
# allows a little more, so we show the blow-up at 5% above the limit.

# %%
limit = stability_limit(0.1, p1.c_sq)
for factor in (0.98, 1.05):
    dt = factor * limit
    try:
        sol = solve_fdm(p1, Grid.for_problem(p1, 11, dt=dt), check_stability=False)
        print(f"dt={dt:.5f}: stable, max |u| = {np.max(np.abs(sol.values)):.3f}")
    except FdmInstability as exc:
        print(f"dt={dt:.5f}: {exc}")

# %% [markdown]
# ## Errors on the evaluation grid
# The coarse default grid (11 nodes) is what the comparison tables use.

# %%
for pid in PROBLEM_IDS:
    p = get_problem(pid)
    sol = solve_fdm(p)
    rep = compute_errors(lambda x, t: sample_solution(sol, x, t), p, model="fdm")
    print(f"{pid}: E2={rep.e2:.3e} E3={rep.e3:.3e} E4={rep.e4:.3e}")

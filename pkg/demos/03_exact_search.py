# %% [markdown]
# Exact search
#
# Branch and bound over point sets, pruned with the 2*gcd ceiling and
# per-line caps. Small cases are cross-checked against plain enumeration.

# %%
import time

from torus_no3il import SearchLimits, TorusDims, brute_force_tau, max_no3il
from torus_no3il.serialize import render_ascii

for m, n in [(2, 2), (2, 4), (3, 4), (4, 4)]:
    dims = TorusDims(m, n)
    print(m, n, max_no3il(dims).tau, brute_force_tau(dims))

# %%
# p x p: the search confirms p + 1 and never finds p + 2
for p in [3, 5, 7]:
    res = max_no3il(TorusDims(p, p))
    print(p, res.tau, res.stats.nodes, "nodes")

# %%
# composite gcd values the closed forms do not cover
table = {}
for m, n in [(4, 4), (6, 6), (8, 8), (9, 9), (10, 10)]:
    t = time.perf_counter()
    res = max_no3il(TorusDims(m, n), translations=True)
    table[m, n] = res.tau
    print(f"T_{m}x{n}: {res.tau} (exact={res.exact}, {time.perf_counter() - t:.2f} s)")

# %%
print(render_ascii(max_no3il(TorusDims(6, 6), translations=True).witness))

# %%
# a tiny node budget returns a valid set, honestly flagged as inexact
res = max_no3il(TorusDims(9, 9), SearchLimits(max_nodes=100))
print(res.tau, res.exact)

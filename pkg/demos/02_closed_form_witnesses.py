# %% [markdown]
# Closed-form witnesses
#
# For gcd 1, gcd 2 and odd prime gcd the maximum no-three-in-line size is
# known, together with an explicit set reaching it.

# %%
from torus_no3il import TorusDims, conic_points, construct_max, verify_no3il
from torus_no3il.serialize import render_ascii

for m, n in [(5, 7), (4, 6), (3, 9), (5, 10), (6, 9)]:
    res = construct_max(TorusDims(m, n))
    print(f"T_{m}x{n}: tau = {res.tau:2d}  via {res.provenance}")

# %%
# the parabola pair on T_3x9
res = construct_max(TorusDims(3, 9))
print(render_ascii(res.witness))

# %%
# the conic x^2 + q y^2 = 1 gives p + 1 points with no three on a line
for p in [3, 5, 7, 11, 13]:
    cfg = conic_points(p)
    print(p, len(cfg), verify_no3il(cfg.dims, cfg) is None)

# %%
print(render_ascii(conic_points(7)))

# %%
# composite gcd: only a lower bound, the search has to finish the job
res = construct_max(TorusDims(6, 6))
print(res.tau, res.exact, res.provenance)

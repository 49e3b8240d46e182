# %% [markdown]
# Lines on a small torus
#
# A line on T_{m x n} is what an integer line becomes after reducing both
# coordinates. Some of them wrap around and hit points you would not expect.

# %%
import numpy as np

from torus_no3il import TorusDims, enumerate_lines, line_through, torus_collinear

dims = TorusDims(4, 6)
print(dims, "gcd", dims.g, "lcm", dims.l)

# %%
# direction (1, 1) from the origin visits lcm(4, 6) = 12 points
line = line_through(dims, (0, 0), (1, 1))
print(line.period, line.points)

# %%
# occupancy grid: 1 where the line passes
grid = np.zeros((dims.n, dims.m), dtype=int)
for x, y in line.points:
    grid[y, x] = 1
print(grid[::-1])

# %%
lines = enumerate_lines(dims)
sizes = np.array([len(l) for l in lines])
print(len(lines), "lines; sizes:", dict(zip(*(a.tolist() for a in np.unique(sizes, return_counts=True)))))

# %%
# (0,0), (2,2), (0,4) look scattered but all lie on the (1, 1) line drawn above
print(torus_collinear(dims, (0, 0), (2, 2), (0, 4)))
print(torus_collinear(dims, (0, 0), (0, 1), (1, 0)))

# p-primary homotopy of odd spheres below the stem 2p(p-1)-2.
# Run: python3 demos/05_serre_range.py

# %%
from pikernel import BundleTarget, SphereTarget, ghost_obstruction_vanishes, serre_bound, serre_pi
from pikernel import top_obstruction_group_vanishes

p = 5
print("covered stems:", serre_bound(p))
for dim in (3, 5, 7):
    nonzero = [t for t in range(1, serre_bound(p)) if not serre_pi(dim, t, p).is_trivial]
    print(f"S{dim}: Z/{p} in stems {nonzero}")

# %% obstruction groups behind self-maps of B_n(p)
print([(n, m) for n in range(1, p) for m in range(1, 6) if m not in (n, n + p - 1) and not ghost_obstruction_vanishes(n, m, p)])
print(top_obstruction_group_vanishes(1, SphereTarget(21), p))
print(top_obstruction_group_vanishes(1, BundleTarget(2, 3), 3))

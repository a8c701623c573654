# p-local splittings of Lie groups into odd spheres and the bundles B_n(p).
# Run: python3 demos/03_local_decompositions.py

# %%
from pikernel import E6, E8, F4, SO, Sp, Spin, SU, U
from pikernel import covering_reduction, decompose, is_p_regular, is_quasi_p_regular, sz_lz

for g, p in ((E8, 11), (E8, 13), (F4, 5), (E6, 5), (SU(4), 5), (Sp(3), 5), (Spin(8), 7)):
    print(f"{g} at {p}: {decompose(g, p)}")

# %% regular means spheres only
for p in (3, 5, 7, 11, 13):
    print(p, is_quasi_p_regular(Sp(4), p), is_p_regular(Sp(4), p))

# %% SO(n) and U(n) go through their coverings first
print(covering_reduction(SO(9), 5), decompose(covering_reduction(SO(9), 5), 5))
print(covering_reduction(U(3), 5))

# %% stability and length at p
for g, p in ((Spin(8), 7), (Spin(10), 7), (E8, 31), (U(4), 5)):
    r = sz_lz(g, p)
    print(f"{g} at {p}: sz={r.sz} lz={r.lz}")

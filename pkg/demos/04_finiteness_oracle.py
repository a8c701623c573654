# Is Z^infinity(G) finite?  Rationally G is a product of odd spheres, and a
# free summand needs a product of distinct generators landing on a generator degree.
# Run: python3 demos/04_finiteness_oracle.py

# %%
from pikernel import EXCEPTIONAL, LieGroup, Sp, Spin, SU, U, ghost_monomials, rational_type, z_infty_finite

for make, name, params in ((SU, "SU", range(2, 12)), (Sp, "Sp", range(10, 16)), (U, "U", range(2, 8))):
    print(name, [n for n in params if z_infty_finite(make(n))])

# %% exceptional groups: only E6 has a witness
for f in EXCEPTIONAL:
    g = LieGroup(f)
    found = ghost_monomials(g)
    print(f, "finite" if not found else found[0].degrees(rational_type(g)))

# %% the Spin family is not an interval: the Pfaffian degree 2n-1 completes sums
print([n for n in range(3, 40) if z_infty_finite(Spin(n))])
for n in (14, 18, 22, 26):
    g = Spin(n)
    print(g, ghost_monomials(g)[0].degrees(rational_type(g)))

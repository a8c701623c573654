# Kernels of self-maps for the rank-two groups SU(3), Sp(2) and G2.
# Run: python3 demos/01_rank_two_kernels.py

# %%
from pikernel import G2, INF, Sp, SU, UNKNOWN, e_sharp_group, z_n_group

for g in (SU(3), Sp(2), G2):
    print(g)
    for n in (1, 3, 5, 7, 11, 14, 15, INF):
        print(f"  Z^{n}: {z_n_group(g, n)}")

# %% the odd-primary part of Z^n(G2) settles at n = 11 and stays put
print(z_n_group(G2, INF, "odd"), z_n_group(G2, INF, 7), z_n_group(G2, INF, 3))

# %% integrally the G2 series is open beyond 14
print(z_n_group(G2, 15) is UNKNOWN)

# %% in the stable range E_#^n agrees with Z^n
for g in (SU(3), Sp(2)):
    print(g, e_sharp_group(g, INF), e_sharp_group(g, 4))

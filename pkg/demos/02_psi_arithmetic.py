# Arithmetic in Psi(m,n) = <x, y, z | z central, z^m = 1, [x,y] = z^n>.
# Psi(12,1) and Psi(120,12) are the self-map groups [SU(3),SU(3)] and [Sp(2),Sp(2)].
# Run: python3 demos/02_psi_arithmetic.py

# %%
from pikernel import PsiGroup

P = PsiGroup(12, 1)
x, y, z = P.x, P.y, P.z
print(P.render(P.commutator(x, y)))          # z^1
print(P.render(P.mul(y, x)))                 # moving y past x costs z^-n
print(P.render(P.evaluate("xxyXz")))

# %% words; capitals are inverses
for word in ("XYxy", "xyXY", "z" * 12, ""):
    print(repr(word[:8]), "->", P.render(P.evaluate(word)))

# %% powers: (xy)^k picks up a triangular number of z's
g = P.mul(x, y)
for k in range(1, 6):
    print(k, P.render(P.pow(g, k)))

# %% the commutator subgroup is central and torsion lives only on z
Q = PsiGroup(120, 12)
c = Q.commutator(Q.element(3, -2, 5), Q.element(-1, 7, 40))
print(Q.render(c), Q.is_central(c), Q.order(c), Q.order(Q.x))

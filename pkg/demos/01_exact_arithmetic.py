# Exact arithmetic in cyclotomic fields and Laurent polynomial rings.
#
# Everything downstream is computed without floating point; this script
# shows the building blocks.

# %%
from twistalex.algebra import CycloNumber, LaurentPoly, PolyMatrix, determinant

z3 = CycloNumber.root(3)
print("z3^2 + z3 + 1 =", z3 * z3 + z3 + 1)
print("1 / (z3 + 2)  =", 1 / (z3 + 2))

# %%
# An element of Q(zeta_5) viewed inside Q(zeta_20).
z5 = CycloNumber.root(5)
print("z5 in Q(zeta_20):", z5.embed(20))
print("conjugate of z5 :", z5.conjugate())

# %%
# Laurent polynomials are compared up to multiplication by +-t^k.
t = LaurentPoly.t(5)
p = (t * t - z5) * (t * t - z5.inverse())
print("p(t)          =", p)
print("normalized -t^3 p =", (-(t ** 3) * p).normalize())
print("p(-t) == p(t):", p.substitute(-1) == p)

# %%
# Determinants of polynomial matrices are fraction-free and exact.
one = LaurentPoly.constant(5, 1)
M = PolyMatrix([[t, one], [one, t]])
print("det [[t, 1], [1, t]] =", determinant(M))

# From a Seifert-surface presentation of the trefoil to its twisted invariants.

# %%
from twistalex.group import abelianization, fox_derivative
from twistalex.knots import builtin_lin
from twistalex.representations import adjoint, enumerate_metabelian
from twistalex.twisted import alexander_polynomial, knot_determinant, wada_invariant

L = builtin_lin("trefoil")
P = L.to_presentation()
for r in P.relators:
    print("relator:", P.word_string(r))

# %%
# Fox derivatives of the first relator.
r = P.relators[0]
for g, name in enumerate(P.generators):
    print(f"d r / d {name} =", fox_derivative(r, g).to_string(P.generators))

# %%
alpha = abelianization(P)
delta = alexander_polynomial(P, alpha)
n = knot_determinant(delta)
print("abelianization:", dict(zip(P.generators, alpha)))
print("Alexander polynomial:", delta, " determinant:", n)

# %%
# One irreducible metabelian class; its twisted invariants over Q(zeta_12).
for cls, rho in enumerate_metabelian(L, n):
    print(cls.label)
    print("  Delta^rho     =", wada_invariant(P, alpha, rho).reduced)
    print("  Delta^Ad(rho) =", wada_invariant(P, alpha, adjoint(rho)).reduced)

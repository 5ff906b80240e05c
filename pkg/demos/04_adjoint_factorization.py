# The adjoint twisted invariant factors through Delta(-t) and the associated
# representation evaluated at i*t.  verify_factorization computes every
# piece and reports each check separately.

# %%
from twistalex.knots import builtin_lin, list_examples
from twistalex.representations import enumerate_metabelian
from twistalex.twisted import alexander_polynomial, knot_determinant, verify_factorization

for name in list_examples():
    L = builtin_lin(name)
    n = knot_determinant(alexander_polynomial(L.to_presentation()))
    print(f"== {name}")
    for cls, _ in enumerate_metabelian(L, n):
        r = verify_factorization(L, cls)
        print(f"  {cls.label}")
        print(f"    Delta^Ad(rho)  = {r.twisted_adjoint}")
        print(f"    Delta^rho_hat  = {r.twisted_rho_hat}")
        print(f"    P              = {r.P}")
        print(f"    checks         = {r.booleans()}")

# %%
# The 5_2 constants are real cyclotomic numbers z7^j + z7^-j + 2.
from twistalex.algebra import CycloNumber

z7 = CycloNumber.root(28, 4)
for j in (1, 2, 3):
    print(f"z7^{j} + z7^-{j} + 2 =", z7 ** j + z7 ** -j + 2)

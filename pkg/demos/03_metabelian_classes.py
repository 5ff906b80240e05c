# Counting irreducible metabelian SL(2) representations.
#
# The exponent system has exactly |Delta(-1)| solutions mod n and the
# nonzero ones pair up as {k, -k}.

# %%
from twistalex.knots import builtin_lin, list_examples
from twistalex.representations import associated_class, enumerate_metabelian, solution_set
from twistalex.twisted import alexander_polynomial, knot_determinant

for name in list_examples():
    L = builtin_lin(name)
    n = knot_determinant(alexander_polynomial(L.to_presentation()))
    classes = [c for c, _ in enumerate_metabelian(L, n)]
    print(f"{name:8s} n={n}  solutions={len(solution_set(L, n))}  classes={len(classes)}")
    for c in classes:
        print(f"    {c.label:14s} -> associated {associated_class(c).label}")

"""
Two obstructions to regular group actions on Hilb_k(P^2)
========================================================

A regular action would force (a) every root of the Poincare polynomial
to be zero or a root of unity, and (b) the nilpotent part to act on R_k
with a single Jordan block.  Both fail, each in its own degree range.
"""

from cohomix import (
    IntegerPolynomial,
    b2_regularity_verdict,
    jordan_regularity_check,
    nilpotent_matrix_on_Rk,
    poincare_of_hilb,
    strip_cyclotomic_factors,
)

# obstruction (a): strip powers of the variable and cyclotomic factors;
# whatever survives has a root off the unit circle
for k in (1, 2, 3):
    poly = poincare_of_hilb(k)
    ok, residual = strip_cyclotomic_factors(poly)
    verdict = b2_regularity_verdict(poly)
    print("k=%d: %s" % (k, poly.str_with_variable("t")))
    print("      residual after stripping: %s  ->  %s"
          % (residual.str_with_variable("t"), verdict))

# the Grassmannian, by contrast, strips clean: its Poincare polynomial
# is a product of cyclotomics (the Gaussian binomial)
gauss = IntegerPolynomial([1, 1, 2, 1, 1])
print("Gaussian binomial [4,2]_q:", b2_regularity_verdict(gauss))

# obstruction (b): the derivation X_0 -> X_1 -> X_2 -> 0 on degree-k forms
print("\nnilpotent action on R_2, reference basis order:")
basis = [(0, 0, 2), (0, 1, 1), (1, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]
matrix = nilpotent_matrix_on_Rk(2, basis)
for row in matrix.entries:
    print("  ", [int(x) for x in row])

for k in range(1, 5):
    jt, regular = jordan_regularity_check(k)
    print("k=%d: Jordan type (%s)  single block: %s" % (k, jt, regular))

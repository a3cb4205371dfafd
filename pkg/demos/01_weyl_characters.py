"""
Weyl characters and their oracles
=================================

Build a few Weyl characters from semistandard tableaux and check them
against the bialternant formula and the Weyl dimension product.
"""

from fractions import Fraction

from schur_repdim import weyl_character, orbit_sum, frobenius_twist
from schur_repdim.oracle import alternant_eval, dimension_via_product

# chi((2,1,0)) is the adjoint-like 8-dimensional character of GL_3
chi = weyl_character((2, 1, 0))
print(chi)
print("dimension:", chi.dimension(), "=", dimension_via_product((2, 1, 0)))
print("multiplicity of (1,1,1):", chi[(1, 1, 1)])

# evaluate both sides at an exact rational point
pt = [Fraction(2), Fraction(5), Fraction(1, 3)]
print("tableaux:", chi.evaluate(pt), " bialternant:", alternant_eval((2, 1, 0), pt))

# symmetric power S^p E has dimension p + 1, but the Frobenius twist of the
# natural module still has dimension 2
E = weyl_character((1, 0))
for p in (2, 3, 5, 7):
    print(f"p={p}: dim S^pE = {weyl_character((p, 0)).dimension()},"
          f" dim E^F = {frobenius_twist(E, p).dimension()}")

# orbit sums are the monomial symmetric functions
print(orbit_sum((2, 1, 0)))

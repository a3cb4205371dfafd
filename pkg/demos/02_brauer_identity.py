"""
Brauer's identity for the Steinberg tilting modules
===================================================

For a restricted weight ``lam`` with ``lam_1 < p`` the product of the
Steinberg character with the orbit sum of ``lam`` splits into exactly
``|W lam|`` Weyl characters, all with sign +1.
"""

from schur_repdim import brauer_expand, orbit_sum, steinberg_tilting, weyl_character
from schur_repdim.characters import brauer_sum
from schur_repdim.weights import delta, restricted_weights

n, p = 3, 3
st = (p - 1) * delta(n)
chi_st = weyl_character(st)

for lam in restricted_weights(n, p):
    terms = brauer_expand(st, lam)
    lhs = chi_st * orbit_sum(lam)
    ok = lhs == brauer_sum(terms, n)
    d = steinberg_tilting(n, p, lam, with_character=False)
    print(f"lam={lam}: {len(terms)} summands, identity {'holds' if ok else 'FAILS'},"
          f" socle {d.socle_weight}, End dimension {d.end_dimension} ({d.end_algebra})")

# outside the restricted regime the expansion needs signs and walls
print(brauer_expand((1, 0, 0), (3, 0, 0)))

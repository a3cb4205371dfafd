"""
The digit construction of mu
============================

For ``P = p^m > n`` and ``r`` above the threshold, the weight ``mu`` in
``Lambda+(n, r)`` is assembled from the base-P digits of the excess.
Its injective hull has a truncated polynomial endomorphism algebra in at
least ``h`` variables, which bounds the representation dimension of the
Schur algebra ``S(n, r)`` below by ``h + 1``.
"""

from schur_repdim import (
    ClassicalParams,
    QuantumParams,
    construct_classical,
    construct_quantum,
    max_h_classical,
    min_r_classical,
    suggest_m,
)

# the smallest interesting case: n = 2, p = 3, h = 2, r = 12
res = construct_classical(ClassicalParams(n=2, p=3, m=1, h=2, r=12), with_character=True)
print("mu =", res.mu)
print("End(I(mu)) =", res.end_algebra, "of dimension", res.end_algebra.dimension)
print("character of I(mu):", len(res.descriptor.character), "weights,",
      "dimension", res.descriptor.character.dimension())
print("repdim S(2,12) >=", res.repdim_lower_bound)

# how the bound grows with r for GL_3 in characteristic 2
n, p = 3, 2
m = suggest_m(n, p)
print(f"\nn={n}, p={p}, m={m}, P={p**m}")
for h in range(1, 6):
    print(f"  h={h}: r >= {min_r_classical(n, p, m, h)}")
for r in (100, 10**4, 10**8):
    print(f"  r={r}: repdim >= {max_h_classical(n, p, m, r) + 1}")

# a large instance: only weights are computed, never characters
big = construct_classical(ClassicalParams(n=3, p=2, m=2, h=8, r=10**6))
print("\nmu for r = 10^6:", big.mu, " digits:", big.digits)

# the quantum version with q a primitive square root of unity
q = construct_quantum(QuantumParams(n=2, p=3, m=1, h=1, r=24, l=2))
print("\nquantum mu =", q.mu, "level factor", q.level_factor,
      " repdim S_q(2,24) >=", q.repdim_lower_bound)

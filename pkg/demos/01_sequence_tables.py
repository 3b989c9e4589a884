"""
Sequence families with dividing formulas
========================================

Every generator in this package produces an integer sequence q(n) built so
that an inclusion-exclusion transform of q is divisible by n (or by 2n).
This script prints the first values of each family and shows that the
recurrences run in exact arbitrary-precision arithmetic, far past the point
where 64-bit integers would overflow.
"""

from divseq import make_theorem4, make_theorem5_phi, make_theorem5_psi

# the shifted doubling family: m*(2^n - 1) + k while n <= j, then each value
# is the sum of the previous j values minus (j-1)*k
fam = make_theorem4(3, 5, 2)
print("theorem4(j=3, k=5, m=2):")
print("  n:", *range(1, 11), sep="\t")
print("  q:", *(fam(n) for n in range(1, 11)), sep="\t")
print()

# the zigzag-map pair: phi counts solutions of g^n(x) = x, psi counts
# solutions of g^n(x) = -x; both start as explicit powers of three and then
# satisfy one shared linear recurrence of order 2j-1
for j in (2, 3):
    phi, psi = make_theorem5_phi(j), make_theorem5_psi(j)
    print(f"zigzag family pair at j={j}:")
    print("  n:  ", *range(1, 11), sep="\t")
    print("  phi:", *(phi(n) for n in range(1, 11)), sep="\t")
    print("  psi:", *(psi(n) for n in range(1, 11)), sep="\t")
    print()

# growth is geometric, so values leave the 64-bit range around n = 50 for
# j = 2 and sooner for larger j; Python ints keep everything exact
phi2 = make_theorem5_phi(2)
print("phi_2(120) has", len(str(phi2(120))), "decimal digits:")
print(" ", phi2(120))

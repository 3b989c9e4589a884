"""
Counting periodic points of a zigzag map, exactly
=================================================

The map g_j folds the interval [-j, j] onto itself along a zigzag of integer
breakpoints.  Composing it with itself n times gives a piecewise-linear map
with exponentially many pieces; every arithmetic step uses Fractions, so the
solution counts are exact.  The counts reproduce the phi/psi families, which
is the whole point: the families were built to count these solutions.
"""

from fractions import Fraction

from divseq import (
    build_gj,
    compose,
    count_antifixed,
    count_fixed,
    iterate,
    make_theorem5_phi,
    make_theorem5_psi,
)

g = build_gj(2)
print("g_2 breakpoints:", list(zip(g.xs, g.ys)))
print("g_2(1/2) =", g(Fraction(1, 2)), "(exact rational, no rounding)")
print()

# piece counts under composition: each iterate roughly triples the count
power = g
print("pieces of g_2^n:")
for n in range(1, 9):
    if n > 1:
        power = compose(g, power)
    print(f"  n={n}: {power.pieces} pieces")
print()

# fixed points of g^n solve g^n(x) = x; antifixed points solve g^n(x) = -x.
# Both counts match the recurrence families for every n.
phi, psi = make_theorem5_phi(2), make_theorem5_psi(2)
print("n | fixed(g_2^n) phi_2(n) | antifixed(g_2^n) psi_2(n)")
for n in range(1, 9):
    cf, ca = count_fixed(g, n), count_antifixed(g, n)
    print(f"{n} | {cf:>12} {phi(n):>8} | {ca:>16} {psi(n):>8}")
print()

# iterate() is compose() in a loop; counting fixed points of the composite
# in one shot agrees with counting via a partial iterate
g3 = build_gj(3)
assert count_fixed(g3, 6) == count_fixed(iterate(g3, 2), 3)
print("count_fixed(g_3, 6) == count_fixed(g_3^2, 3) ==", count_fixed(g3, 6))

"""
Standard generators of cyclic subgroups
=======================================

For every m dividing p^n - 1 there is a standard element y_m of order m,
and the choice is coherent: y_m^(m/d) = y_d whenever d divides m.
"""

from fractions import Fraction

from stdff import element_order, factor_pn_minus_1, standard_generator

p, n = 3, 4
N = p**n - 1
print(f"|GF({p}^{n})^x| = {N} = {factor_pn_minus_1(p, n)}")

# A generator of the whole multiplicative group, and its order.
y = standard_generator(p, n, N)
print(f"y_80 = {y!r}, order", element_order(y, factor_pn_minus_1(p, n)))

# Powers of y_80 reproduce the smaller standard generators.
for d in (2, 4, 5, 8, 16, 40):
    assert y ** (N // d) == standard_generator(p, n, d)
print("y_80^(80/d) == y_d for d in 2, 4, 5, 8, 16, 40")

# The same y_8 is found from inside the subfield GF(3^2).
small = standard_generator(p, 2, 8)
print(f"y_8 from GF(3^2): {small!r}, embedded: {small.embed(y.field)!r}")

# Discrete logarithms to base y_m give the lift value a/m in [0, 1).
x = y**17
for k in range(N):
    if y**k == x:
        print("x = y_80^17 has lift value", Fraction(k, N))
        break

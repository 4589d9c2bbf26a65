"""
Building standard finite fields
===============================

Every GF(p^n) has one fixed model: a defining polynomial over GF(p) and a
numbering of its elements by Steinitz numbers 0 .. p^n - 1.
"""

from stdff import standard_field, standard_prime_degree_poly, tower_degree_list

# The building blocks are the standard polynomials f_{r,i} of prime degree r.
# Coefficients are printed as Steinitz numbers, constant term first.
for p, r in [(2, 3), (2, 5), (3, 2), (5, 2), (3, 5)]:
    rec = standard_prime_degree_poly(p, r, 1)
    print(f"p={p} r={r}:", rec.coeff_steinitz)

# GF(2^4) is a tower GF(2) < GF(2^2) < GF(2^4).  Its degree list records the
# degree over GF(2) of each tower basis vector.
F = standard_field(2, 4)
print("degree list of GF(2^4):", tower_degree_list(4))
print("defining polynomial of GF(2^4):", F.defining_poly.coeffs)

# Elements are addressed by Steinitz number and print that way too.
a, b = F.from_steinitz(5), F.from_steinitz(7)
print(f"{a!r} * {b!r} = {a * b!r}")
print(f"inverse of 5: {a ** -1!r}")
print("as a polynomial in the primitive element x_4:", a)

# The multivariate form shows an element in terms of the tower generators.
print("element 13 =", F.from_steinitz(13).multivariate_str())

# Larger fields use the same interface; arithmetic runs on numpy vectors.
G = standard_field(7, 12)
x = G.from_steinitz(123456789)
print(G, "element degree:", x.degree(), " x^(7^12) == x:", x ** (7**12) == x)

"""
Compatible embeddings
=====================

If m divides n, GF(p^m) sits inside GF(p^n) in one standard way.  The
Steinitz number changes under embedding but the Steinitz pair (degree,
number in the smallest field) does not.
"""

import numpy as np

from stdff import standard_field

F8, F64 = standard_field(2, 3), standard_field(2, 6)

# The image has a new Steinitz number and the same Steinitz pair.
x = F8.from_steinitz(2)
print("2 in GF(2^3) becomes", x.embed(F64).steinitz, "in GF(2^6)")
print("Steinitz pair of the image:", x.embed(F64).steinitz_pair())

# The embedding is a matrix over GF(2) acting on power-basis vectors.
E = F8.embedding_matrix(F64)
print("embedding matrix GF(2^3) -> GF(2^6):")
print(E)

# It is a ring homomorphism: check it on all 64 pairs at once.
V = F8.all_vectors()
i, j = np.divmod(np.arange(64), 8)
left = F8.mul_rows(V[i], V[j]) @ E % 2
right = F64.mul_rows(V[i] @ E % 2, V[j] @ E % 2)
print("multiplicative on all pairs:", np.array_equal(left, right))

# Embeddings compose: GF(2^2) -> GF(2^6) -> GF(2^12) equals the direct map.
F4, F4096 = standard_field(2, 2), standard_field(2, 12)
two_step = F4.embedding_matrix(F64) @ F64.embedding_matrix(F4096) % 2
print("transitive:", np.array_equal(two_step, F4.embedding_matrix(F4096)))

# Mixing elements of different fields lands in the smallest common field.
y = standard_field(2, 4).from_steinitz(9)
z = x * y
print("GF(2^3) element times GF(2^4) element:", repr(z))

"""
Bridging to Conway polynomials
==============================

Conway polynomials are read from a table.  Among the roots of C_n inside the
standard GF(p^n), the bridge picks the compatible one with the smallest
Steinitz number, so results can be translated between the two conventions.
"""

from pathlib import Path

from stdff import conway_generator, load_conway_table, steinitz_pair_conway_generator

table = load_conway_table(Path(__file__).parent.parent / "fixtures" / "conway.txt")
print(len(table), "Conway polynomials loaded")

# The root z_n of C_n chosen in the standard field, as a Steinitz pair.
for n in range(1, 7):
    print(f"p=2 n={n}:", table.lookup(2, n).coeffs, "->", steinitz_pair_conway_generator(2, n, table))

# Compatibility: the norm of z_6 down to GF(2^3) is z_3.
z6 = conway_generator(2, 6, table)
z3 = conway_generator(2, 3, table)
print("z_6^9 == z_3:", z6 ** ((2**6 - 1) // (2**3 - 1)) == z3.embed(z6.field))

"""
Arithmetic in GF(p^r)
=====================

Elements are coefficient vectors in the polynomial basis, indexed by
sum(c_i * p**i).  The modulus is the lexicographically smallest monic
irreducible, so every run labels the field the same way.
"""

import numpy as np

from paleydesigns import GF

F = GF(3, 2)
print(F, "modulus coefficients (low to high):", F.modulus)

a, b = F([1, 1]), F([2, 1])      # x + 1 and x + 2
print("(x+1)(x+2) =", a * b)      # x^2 + 3x + 2 = x^2 + 2 = 1 mod (x^2 + 1)

w = F.primitive_root
print("primitive root:", w, "index", w.index)
print("powers of w:", [(w**j).index for j in range(8)])

# quadratic character and power classes, as lookup tables by index
print("chi:", F.chi_table.tolist())
print("log_w mod 4:", F.power_class_table().tolist())

# the vectorised index arithmetic used to build adjacency matrices
idx = np.arange(F.q)
print("x - 1 for every x:", F.sub_indices(idx, 1).tolist())

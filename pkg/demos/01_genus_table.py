# Minimal non-orientable genus in lens spaces.
#
# L(p, q) contains a closed non-orientable surface exactly when p is even.
# The smallest genus N(p, q) can be read off a continued fraction of p/q,
# or found by brute force over all non-crossing chord diagrams on 2k = p
# points. This script prints both side by side.

# %%
from math import gcd

import numpy as np

from onesided import chords, genus

# %% the continued fraction and its b-sequence for L(8, 3)
cf = genus.continued_fraction(8, 3)
print("8/3 =", cf.terms, "->", cf.value())
print("b =", genus.b_sequence(cf), " N =", genus.minimal_genus_formula(8, 3))

# %% a table of N(p, q); rows are p, columns q, blanks where gcd(p, q) > 1
pmax = 20
table = np.zeros((pmax // 2, pmax), dtype=int)
for p in range(2, pmax + 1, 2):
    for q in range(1, p):
        if gcd(p, q) == 1:
            table[p // 2 - 1, q] = genus.minimal_genus_formula(p, q)

print("\n  p \\ q " + "".join(f"{q:3d}" for q in range(1, pmax)))
for p in range(2, pmax + 1, 2):
    cells = "".join(f"{table[p // 2 - 1, q]:3d}" if table[p // 2 - 1, q] else "  ." for q in range(1, pmax))
    print(f"{p:6d}  {cells}")

# %% the exhaustive search agrees; c is the number of curves of the best diagram
mismatches = 0
for p in range(2, pmax + 1, 2):
    for q in range(1, p):
        if gcd(p, q) == 1:
            c, _ = chords.max_cycles(p // 2, q)
            mismatches += genus.minimal_genus_formula(p, q) != p // 2 + 1 - c
print(f"\nformula vs search mismatches for p <= {pmax}: {mismatches}")

# %% N(2k, 1) = k grows without bound, while N(4a + 4, 2a + 1) stays at 2
print([genus.minimal_genus_formula(2 * k, 1) for k in range(1, 11)])
print([genus.minimal_genus_formula(4 * a + 4, 2 * a + 1) for a in range(1, 11)])

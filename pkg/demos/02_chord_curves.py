# Curves spanned by a chord diagram.
#
# Put 2k points on the boundary of a disk and pair them by disjoint chords.
# Draw the chords on the bottom and top disks of a cylinder, and add the
# helices that join point a at the bottom to a + q at the top. The result is
# a system of c closed curves, and it bounds a non-orientable surface of
# genus k + 1 - c inside L(2k, q).

# %%
from collections import Counter

from onesided import chords, splittings

# %% the Klein bottle diagram for L(12, 5)
tau = splittings.klein_tau(2)
print(chords.dumps_tau(tau))
dec = chords.cycle_decomposition(tau, 5)
for cyc in dec.cycles:
    print(" -> ".join(f"{n.label}{'b' if n.level == chords.BOTTOM else 't'}" for n in cyc))
print("c =", dec.c, " genus =", chords.genus_of_tau(tau, 5))

# %% how the number of curves is distributed over all 132 diagrams at k = 6
counts = Counter(chords.cycle_counts(chords._table(6), 5).tolist())
for c in sorted(counts):
    print(f"c = {c}: {counts[c]:4d} diagrams  " + "#" * (counts[c] // 2))

# %% the best diagram found by search
c, witness = chords.max_cycles(6, 5)
print("max c =", c, "witness", witness.pairs)

# %% the curve count only depends on the diagram up to rotation
print({chords.cycle_decomposition(tau.rotated(r), 5).c for r in range(12)})

# First homology of a solid torus glued to the twisted I-bundle over the
# Klein bottle.
#
# The boundary of the I-bundle is a torus with basis (l, m). A gluing matrix
# G with determinant -1 says how (l', m') on the solid torus side match it.
# H_1 comes out as a quotient of Z^4 on (v, lambda1, lambda2, mu), reduced by
# Smith normal form.

# %%
import itertools
from collections import Counter

from onesided import abelian

# %% the relation matrix and its Smith form for the swap gluing
G = abelian.GluingMatrix([[0, 1], [1, 0]])
R = abelian.klein_gluing_relations(G)
print("generators", abelian.KLEIN_GENERATORS)
for row in R.rows:
    print("  ", row)
D, U, V = abelian.smith_normal_form(R)
print("D =", D.tolist(), " U A V == D:", U @ R @ V == D)
print("H1 =", abelian.h1_from_klein_gluing(G))

# %% the two ways of assigning l and m to the band cores agree
print("printed convention:", abelian.h1_from_klein_gluing(G, convention="printed"))

# %% every small gluing matrix gives a group with exponent dividing 4
groups = Counter()
for a, b, c, d in itertools.product(range(-3, 4), repeat=4):
    if a * d - b * c == -1:
        groups[str(abelian.h1_from_klein_gluing([[a, b], [c, d]]))] += 1
for name, count in groups.most_common():
    print(f"{count:4d}  {name}")

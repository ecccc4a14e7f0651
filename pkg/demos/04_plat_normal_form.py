# Plat normal form of a link diagram in a one-sided splitting.
#
# A Morse word is a list of events read from N(U) down to the handlebody:
# maxima (cap), minima (cup), crossings (sigma) and trips around the handles
# of the splitting surface. Normalizing pushes every minimum down into the
# handlebody and every maximum up into N(U), leaving a surface braid closed
# off by two matchings.

# %%
import random
import time

from onesided import plat
from onesided.plat import Cap, Cup, Handle, Sigma

# %% a small word with interior extrema
w = plat.validate_word([Cap(1), Cap(3), Sigma(2, 1), Cup(1), Cap(1),
                        Handle("a", 2, 2), Sigma(1, -1), Cup(2), Cup(1)], surface_genus=2)
print(plat.dumps_word(w))
print("strand counts:", w.levels())
print("components:", plat.trace(w).component_count)

# %%
p = plat.normalize(w, check=True)
print(plat.dumps_presentation(p))
print("components after:", plat.plat_components(p))

# %% the normal form is stable: re-expanding it and normalizing again is a no-op
print("idempotent:", plat.normalize(plat.to_word(p)) == p)

# %% random words, timed
rng = random.Random(1)
start = time.perf_counter()
sizes = []
for _ in range(1000):
    w = plat.random_closed_word(rng, max_events=40, genus=3)
    p = plat.normalize(w)
    assert plat.plat_components(p) == plat.trace(w).component_count
    sizes.append((len(w.events), p.n, len(p.braid_word)))
elapsed = time.perf_counter() - start
print(f"1000 words in {elapsed:.2f}s")
print("mean events %.1f, mean strands %.1f, mean braid length %.1f"
      % tuple(sum(s[i] for s in sizes) / len(sizes) for i in range(3)))

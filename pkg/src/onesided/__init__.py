"""One-sided Heegaard splittings: minimal genus of non-orientable surfaces in
lens spaces, chord-diagram curve systems, Smith normal form homology, and
non-orientable plat closures of surface braids."""

from .abelian import (AbelianGroup, GluingMatrix, IntMatrix, group_from_presentation,
                      h1_from_klein_gluing, smith_normal_form)
from .chords import (TauInvolution, cycle_decomposition, enumerate_taus, genus_of_tau,
                     max_cycles, minimal_genus_search, validate_tau)
from .genus import (ContinuedFraction, b_sequence, continued_fraction, embeddable_genera,
                    minimal_genus_formula)
from .plat import (Cap, Cup, Handle, MorseWord, PlatPresentation, Sigma, normalize,
                   plat_components, trace, validate_word)
from .splittings import (SplittingDescriptor, is_splittable_lens, lens_splitting,
                         trivial_bundle_splitting)

__version__ = "0.1.0"

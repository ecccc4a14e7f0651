"""One-sided splittings M = H u N(U) for the lens space and circle bundle families.

A closed non-orientable surface U of genus g has an orientable double cover
of genus g - 1, so the complementary handlebody H and the braid surface
dH both have genus g - 1.
"""
from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from . import chords
from .abelian import GluingMatrix, h1_from_klein_gluing
from .errors import NonSplittable, OneSidedError
from .genus import minimal_genus_formula


@dataclass(frozen=True)
class Lens:
    p: int
    q: int

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class TrivialBundle:
    g: int

    def __str__(self):
        return f"Sigma_{self.g} x S^1"


@dataclass(frozen=True)
class Custom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class SplittingDescriptor:
    manifold: Union[Lens, TrivialBundle, Custom]
    u_genus: int
    witness_tau: Optional[chords.TauInvolution] = None
    witness_source: str = ""

    @property
    def handlebody_genus(self):
        return self.u_genus - 1

    @property
    def braid_surface_genus(self):
        return self.u_genus - 1

    def to_json(self):
        m = self.manifold
        if isinstance(m, Lens):
            manifold = {"type": "lens", "p": m.p, "q": m.q}
        elif isinstance(m, TrivialBundle):
            manifold = {"type": "trivial_bundle", "g": m.g}
        else:
            manifold = {"type": "custom", "name": m.name}
        return {
            "manifold": manifold,
            "name": str(m),
            "u_genus": self.u_genus,
            "handlebody_genus": self.handlebody_genus,
            "braid_surface_genus": self.braid_surface_genus,
            "witness_tau": chords.dumps_tau(self.witness_tau) if self.witness_tau else None,
            "witness_source": self.witness_source or None,
        }


def is_splittable_lens(p, q):
    """L(p, q) contains a closed non-orientable surface iff p is even."""
    if p < 1 or gcd(p, q) != 1:
        raise OneSidedError(f"L({p},{q}) needs p >= 1 and gcd(p, q) = 1")
    return p % 2 == 0


def adjacent_tau(k):
    """tau(2i - 1) = 2i: the one-curve involution used for L(2k, 1)."""
    return chords.validate_tau([(2 * i - 1, 2 * i) for i in range(1, k + 1)], k)


def klein_tau(a):
    """The Klein bottle involution for L(4a + 4, 2a + 1), a >= 1."""
    if a < 1:
        raise OneSidedError(f"family parameter a must be positive, got {a}")
    pairs = [(1, 2 * a + 2)]
    pairs += [(2 * i, 2 * i + 1) for i in range(1, a + 1)]
    pairs += [(2 * j + 1, 2 * j + 2) for j in range(a + 1, 2 * a + 2)]
    return chords.validate_tau(pairs, 2 * a + 2)


def lens_splitting(p, q):
    """Bredon-Wood splitting of L(p, q) with a witness involution.

    The witness comes from the explicit families when (p, q) is (2k, 1) or
    (4a + 4, 2a + 1), otherwise from exhaustive search.
    """
    if not is_splittable_lens(p, q):
        raise NonSplittable(f"L({p},{q}) has odd p and no one-sided splitting")
    q = q % p
    n = minimal_genus_formula(p, q)
    k = p // 2
    if q == 1:
        tau, source = adjacent_tau(k), "adjacent pairs"
    elif p % 4 == 0 and p >= 8 and q == p // 2 - 1:
        tau, source = klein_tau((p - 4) // 4), "Klein bottle family"
    else:
        _, tau = chords.max_cycles(k, q)
        source = "exhaustive search"
    if chords.genus_of_tau(tau, q) != n:
        raise ArithmeticError(f"witness for L({p},{q}) spans genus "
                              f"{chords.genus_of_tau(tau, q)}, expected {n}")
    return SplittingDescriptor(Lens(p, q), n, tau, source)


def trivial_bundle_splitting(g):
    """Sigma_g x S^1 splits along a surface of non-orientable genus 2g + 4.

    The construction is stated for g >= 1; g = 0 (S^2 x S^1) just evaluates
    the same formula.
    """
    if g < 0:
        raise OneSidedError(f"surface genus must be non-negative, got {g}")
    return SplittingDescriptor(TrivialBundle(g), 2 * g + 4)


def klein_gluing_splitting(matrix, name=None):
    """A solid torus glued to the twisted I-bundle over the Klein bottle."""
    G = GluingMatrix(matrix)
    if name is None:
        h1 = h1_from_klein_gluing(G)
        name = f"V u_G C(K), G={[list(r) for r in G.matrix.rows]}, H1={h1}"
    return SplittingDescriptor(Custom(name), 2)

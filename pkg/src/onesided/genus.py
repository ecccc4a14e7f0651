"""Continued fractions and the Bredon-Wood minimal genus of lens spaces.

All arithmetic is on Python integers; rationals are ``fractions.Fraction``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NonSplittable, OneSidedError


def _check_lens_pair(p, q):
    if not (isinstance(p, int) and isinstance(q, int)):
        raise OneSidedError(f"p and q must be integers, got {p!r}, {q!r}")
    if not 0 < q < p:
        raise OneSidedError(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise OneSidedError(f"p={p} and q={q} are not coprime")


def _check_even(p):
    if p % 2:
        raise NonSplittable(
            f"L({p}, q) with odd p contains no non-orientable surface")


@dataclass(frozen=True)
class ContinuedFraction:
    """Regular continued fraction a_0 + 1/(a_1 + 1/(...)).

    Instances built through :func:`continued_fraction` or :meth:`from_terms`
    are canonical: every term is positive and the last one is at least 2
    when there is more than one term.
    """
    terms: tuple

    @classmethod
    def from_terms(cls, terms):
        """Accept either convention for the final term and canonicalize.

        ``[..., a, 1]`` denotes the same rational as ``[..., a + 1]``.
        """
        terms = [int(t) for t in terms]
        if not terms or any(t < 1 for t in terms):
            raise OneSidedError(f"continued fraction terms must be positive: {terms}")
        while len(terms) > 1 and terms[-1] == 1:
            terms.pop()
            terms[-1] += 1
        return cls(tuple(terms))

    def value(self):
        x = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            x = a + 1 / x
        return x

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def continued_fraction(p, q):
    """Canonical continued fraction of p/q via the Euclidean algorithm.

    >>> continued_fraction(8, 3).terms
    (2, 1, 2)
    """
    _check_lens_pair(p, q)
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    # Euclid already ends on a term >= 2 whenever there is more than one term.
    return ContinuedFraction(tuple(terms))


def b_sequence(cf):
    """The b-sequence attached to a continued fraction.

    ``b_0 = a_0``; for i >= 1 the term is dropped (``b_i = 0``) exactly when
    the previous term was kept (``b_{i-1} = a_{i-1}``) and the partial sum
    ``b_0 + ... + b_{i-1}`` is even, otherwise ``b_i = a_i``.
    """
    a = list(cf.terms) if isinstance(cf, ContinuedFraction) else list(cf)
    b = [a[0]]
    total = a[0]
    for i in range(1, len(a)):
        if b[i - 1] == a[i - 1] and total % 2 == 0:
            b.append(0)
        else:
            b.append(a[i])
            total += a[i]
    return tuple(b)


def minimal_genus_formula(p, q):
    """N(p, q): the smallest non-orientable genus embedding in L(p, q)."""
    _check_lens_pair(p, q)
    _check_even(p)
    total = sum(b_sequence(continued_fraction(p, q)))
    if total % 2:
        raise ArithmeticError(f"odd b-sum {total} for L({p}, {q})")
    return total // 2


def embeddable_genera(p, q, bound):
    """All genera g <= bound of closed non-orientable surfaces in L(p, q).

    These are exactly N(p, q) + 2h for h >= 0.
    """
    n = minimal_genus_formula(p, q)
    if bound < n:
        raise OneSidedError(f"bound {bound} is below the minimal genus {n}")
    return list(range(n, bound + 1, 2))

"""Worked examples for the lens space, Klein bottle and circle bundle cases.

Each case returns a list of :class:`Check` records comparing an expected
value with the computed one.
"""
from dataclasses import dataclass
from math import gcd
from typing import Any

from . import chords, genus, splittings
from .abelian import AbelianGroup, h1_from_klein_gluing


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    computed: Any

    @property
    def passed(self):
        return self.expected == self.computed

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: expected {self.expected}, computed {self.computed}"

    def to_json(self):
        return {"name": self.name, "expected": _plain(self.expected),
                "computed": _plain(self.computed), "passed": self.passed}


def _plain(x):
    if isinstance(x, AbelianGroup):
        return str(x)
    if isinstance(x, tuple):
        return list(x)
    return x


def klein_gluing():
    g = h1_from_klein_gluing([[0, 1], [1, 0]])
    return [
        Check("H1 for gluing [[0,1],[1,0]]", AbelianGroup(1, (2, 2)), g),
        Check("rank", 1, g.rank),
        Check("torsion", (2, 2), g.torsion),
        Check("torsion contains Z/2 + Z/2", True, g.contains_klein_four()),
        Check("printed convention agrees",
              g, h1_from_klein_gluing([[0, 1], [1, 0]], convention="printed")),
    ]


def lens_2k_1(kmax=8):
    out = [
        Check("L(2,1) is splittable", True, splittings.is_splittable_lens(2, 1)),
        Check("L(3,1) is not splittable", False, splittings.is_splittable_lens(3, 1)),
        Check("N(2,1)", 1, genus.minimal_genus_formula(2, 1)),
        Check("genera in L(4,1) up to 6", [2, 4, 6], genus.embeddable_genera(4, 1, 6)),
    ]
    for k in range(1, kmax + 1):
        tau = splittings.adjacent_tau(k)
        dec = chords.cycle_decomposition(tau, 1)
        c_max, _ = chords.max_cycles(k, 1)
        s = splittings.lens_splitting(2 * k, 1)
        out += [
            Check(f"k={k}: continued fraction of {2 * k}/1",
                  (2 * k,), genus.continued_fraction(2 * k, 1).terms),
            Check(f"k={k}: b-sequence", (2 * k,),
                  genus.b_sequence(genus.continued_fraction(2 * k, 1))),
            Check(f"k={k}: N(2k,1)", k, genus.minimal_genus_formula(2 * k, 1)),
            Check(f"k={k}: c(adjacent tau)", 1, dec.c),
            Check(f"k={k}: genus of adjacent tau", k, chords.genus_of_tau(tau, 1)),
            Check(f"k={k}: max c over all tau", 1, c_max),
            Check(f"k={k}: handlebody genus", k - 1, s.handlebody_genus),
        ]
    return out


def _cyclic_key(cycle):
    """Canonical rotation/direction of a cyclic node sequence."""
    seqs = [list(cycle), list(reversed(cycle))]
    return min(tuple(s[r:] + s[:r]) for s in seqs for r in range(len(s)))


def klein_short_cycles(a):
    """The 2a four-vertex curves of the Klein bottle witness, written out."""
    n = 4 * a + 4

    def lab(x):
        return (x - 1) % n + 1

    starts = list(range(2, 2 * a + 1, 2)) + list(range(2 * a + 5, 4 * a + 4, 2))
    return [[(lab(i), 0), (lab(i + 1), 0), (lab(2 * a + i + 2), 1), (lab(2 * a + i + 1), 1)]
            for i in starts]


def lens_4a4(amax=5):
    out = [
        Check("L(12,5) is splittable", True, splittings.is_splittable_lens(12, 5)),
        Check("genera in L(8,3) up to 7", [2, 4, 6], genus.embeddable_genera(8, 3, 7)),
        Check("max c for k=4, q=3", 3, chords.max_cycles(4, 3)[0]),
        Check("max c for k=6, q=5", 5, chords.max_cycles(6, 5)[0]),
        Check("L(8,3) handlebody genus", 1, splittings.lens_splitting(8, 3).handlebody_genus),
    ]
    for a in range(1, amax + 1):
        p, q, k = 4 * a + 4, 2 * a + 1, 2 * a + 2
        cf = genus.continued_fraction(p, q)
        tau = splittings.klein_tau(a)
        dec = chords.cycle_decomposition(tau, q)
        long_cycle = [(1, 0), (2 * a + 2, 0), (4 * a + 3, 1), (4 * a + 4, 1),
                      (2 * a + 3, 0), (2 * a + 4, 0), (1, 1), (2 * a + 2, 1)]
        out += [
            Check(f"a={a}: continued fraction of {p}/{q}", (2, a, 2), cf.terms),
            Check(f"a={a}: b-sequence", (2, 0, 2), genus.b_sequence(cf)),
            Check(f"a={a}: N({p},{q})", 2, genus.minimal_genus_formula(p, q)),
            Check(f"a={a}: c(tau)", 2 * a + 1, dec.c),
            Check(f"a={a}: genus of tau", 2, chords.genus_of_tau(tau, q)),
            Check(f"a={a}: cycle lengths", sorted([8] + [4] * (2 * a)),
                  sorted(dec.cycle_lengths)),
            Check(f"a={a}: long cycle", long_cycle, [tuple(nd) for nd in dec.cycles[0]]),
            Check(f"a={a}: short cycles",
                  sorted(_cyclic_key(c) for c in klein_short_cycles(a)),
                  sorted(_cyclic_key([tuple(nd) for nd in c])
                         for c in dec.cycles if len(c) == 4)),
            Check(f"a={a}: handlebody genus", 1, splittings.lens_splitting(p, q).handlebody_genus),
        ]
    return out


def bundle(gmax=10):
    out = []
    for g in range(gmax + 1):
        s = splittings.trivial_bundle_splitting(g)
        out += [
            Check(f"g={g}: genus of U", 2 * g + 4, s.u_genus),
            Check(f"g={g}: handlebody genus", 2 * g + 3, s.handlebody_genus),
        ]
    return out


def genus_table(pmax=24):
    out = []
    for p in range(2, pmax + 1, 2):
        for q in range(1, p):
            if gcd(p, q) == 1:
                out.append(Check(f"N({p},{q}) formula vs search",
                                 genus.minimal_genus_formula(p, q),
                                 chords.minimal_genus_search(p, q)))
    return out


CASES = {
    "klein-gluing": klein_gluing,
    "lens-2k-1": lens_2k_1,
    "lens-4a4": lens_4a4,
    "bundle": bundle,
    "genus-table": genus_table,
}


def reproduce(case):
    try:
        return CASES[case]()
    except KeyError:
        raise KeyError(f"unknown case {case!r}; choose from {sorted(CASES)}") from None

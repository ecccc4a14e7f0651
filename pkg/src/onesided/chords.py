"""Non-crossing involutions of Z_2k and the curve systems they span.

A ``TauInvolution`` pairs the points 1..2k on the boundary circle of a disk
by pairwise disjoint chords. Together with a lens parameter ``q`` it
determines a system of simple closed curves on the boundary of the solid
cylinder D^2 x I: the chords at both levels, plus the helices joining
``(a, bottom)`` to ``(a + q, top)``. The number of curves ``c`` gives the
genus ``k + 1 - c`` of the spanned non-orientable surface.

Labels are 1-based throughout the public interface; label arithmetic is
mod 2k mapped back into 1..2k.
"""
import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import NamedTuple

import numpy as np

from .errors import (CapacityError, Crossing, FixedPoint, NonSplittable, NotMatching,
                     OneSidedError)

DEFAULT_MAX_K = 16
MAX_K_ENV = "ONESIDED_MAX_K"

# rows per numpy block during enumeration
_BLOCK_ROWS = 1 << 18

BOTTOM, TOP = 0, 1


def max_enumeration_k():
    value = os.environ.get(MAX_K_ENV)
    return int(value) if value else DEFAULT_MAX_K


def catalan(k):
    return comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class TauInvolution:
    """A fixed-point free, non-crossing involution of {1, ..., 2k}.

    ``pairs`` is stored canonically: each pair sorted, pairs sorted by their
    smaller element. Construct through :func:`validate_tau` to get the
    invariants checked.
    """
    k: int
    pairs: tuple

    @property
    def partner(self):
        """Tuple ``t`` with ``t[a - 1] == tau(a)``."""
        out = [0] * (2 * self.k)
        for a, b in self.pairs:
            out[a - 1], out[b - 1] = b, a
        return tuple(out)

    def __call__(self, a):
        return self.partner[(a - 1) % (2 * self.k)]

    def rotated(self, r):
        """Conjugate by the rotation a -> a + r."""
        n = 2 * self.k
        return _canonical(self.k, [((a - 1 + r) % n + 1, (b - 1 + r) % n + 1)
                                   for a, b in self.pairs])

    def reflected(self):
        """Conjugate by the reflection a -> -a (mod 2k)."""
        n = 2 * self.k
        return _canonical(self.k, [((-a) % n or n, (-b) % n or n) for a, b in self.pairs])


def _canonical(k, pairs):
    return TauInvolution(k, tuple(sorted(tuple(sorted(p)) for p in pairs)))


def _chords_cross(p, r):
    (a, b), (c, d) = sorted(p), sorted(r)
    return a < c < b < d or c < a < d < b


def validate_tau(pairs, k):
    """Check that ``pairs`` is a non-separating involution of Z_2k.

    Raises ``FixedPoint``, ``NotMatching`` or ``Crossing`` (in that order of
    precedence). ``Crossing(a, b)`` names the smaller endpoints of the first
    crossing pair of chords.
    """
    if not isinstance(k, int) or k < 1:
        raise OneSidedError(f"k must be a positive integer, got {k!r}")
    pairs = [tuple(int(x) for x in p) for p in pairs]
    for p in pairs:
        if len(p) != 2:
            raise NotMatching(f"{p} is not a pair")
        if p[0] == p[1]:
            raise FixedPoint(p[0])
    seen = [x for p in pairs for x in p]
    if sorted(seen) != list(range(1, 2 * k + 1)):
        raise NotMatching(f"expected each of 1..{2 * k} exactly once")
    tau = _canonical(k, pairs)
    for i, p in enumerate(tau.pairs):
        for r in tau.pairs[i + 1:]:
            if _chords_cross(p, r):
                raise Crossing(p[0], r[0])
    return tau


class Node(NamedTuple):
    label: int
    level: int  # BOTTOM or TOP


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple

    @property
    def c(self):
        return len(self.cycles)

    @property
    def cycle_lengths(self):
        return [len(cyc) for cyc in self.cycles]


def _check_q(k, q):
    if gcd(q, 2 * k) != 1:
        raise OneSidedError(f"q={q} is not coprime to 2k={2 * k}")
    return q % (2 * k)


def cycle_decomposition(tau, q):
    """Components of the chord/helix curve system on the cylinder boundary.

    Each cycle starts at its smallest node (label first, bottom before top)
    and leaves along the chord edge; cycles are sorted by starting node.
    """
    k, n = tau.k, 2 * tau.k
    q = _check_q(k, q)
    partner = tau.partner

    def helix(node):
        if node.level == BOTTOM:
            return Node((node.label - 1 + q) % n + 1, TOP)
        return Node((node.label - 1 - q) % n + 1, BOTTOM)

    seen = set()
    cycles = []
    for start in sorted(Node(a, lv) for a in range(1, n + 1) for lv in (BOTTOM, TOP)):
        if start in seen:
            continue
        cyc = []
        node, along_chord = start, True
        while True:
            seen.add(node)
            cyc.append(node)
            node = Node(partner[node.label - 1], node.level) if along_chord else helix(node)
            along_chord = not along_chord
            if node == start:
                break
        cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles))


def genus_of_tau(tau, q):
    return tau.k + 1 - cycle_decomposition(tau, q).c


def euler_characteristic(tau, q):
    return cycle_decomposition(tau, q).c - tau.k


# ---------------------------------------------------------------------------
# enumeration

def _check_capacity(k):
    if not isinstance(k, int) or k < 1:
        raise OneSidedError(f"k must be a positive integer, got {k!r}")
    bound = max_enumeration_k()
    if k > bound:
        raise CapacityError(f"k={k} exceeds the enumeration bound {bound} "
                            f"(set {MAX_K_ENV} to override)")


def _combine(j, inner, outer):
    """Tables with point 0 matched to 2j+1, ``inner`` on 1..2j, ``outer`` after."""
    m = 1 + (inner.shape[1] + outer.shape[1]) // 2
    rows = len(inner) * len(outer)
    out = np.empty((rows, 2 * m), dtype=np.int16)
    out[:, 0] = 2 * j + 1
    out[:, 1:2 * j + 1] = np.repeat(inner + 1, len(outer), axis=0)
    out[:, 2 * j + 1] = 0
    out[:, 2 * j + 2:] = np.tile(outer + 2 * j + 2, (len(inner), 1))
    return out


@lru_cache(maxsize=None)
def _table(m):
    """All non-crossing matchings of 0..2m-1 as 0-based partner rows, lex order."""
    if m == 0:
        return np.zeros((1, 0), dtype=np.int16)
    table = np.concatenate([_combine(j, _table(j), _table(m - 1 - j)) for j in range(m)])
    table.setflags(write=False)
    return table


def _blocks(m):
    if catalan(m) <= _BLOCK_ROWS:
        yield _table(m)
        return
    for j in range(m):
        for inner in _blocks(j):
            for outer in _blocks(m - 1 - j):
                step = max(1, _BLOCK_ROWS // len(outer))
                for s in range(0, len(inner), step):
                    yield _combine(j, inner[s:s + step], outer)


def _from_row(k, row):
    return TauInvolution(k, tuple((a + 1, int(b) + 1) for a, b in enumerate(row) if a < b))


def enumerate_taus(k):
    """Yield every non-separating involution of Z_2k once, in lexicographic
    order of the partner tuple ``(tau(1), ..., tau(2k))``."""
    _check_capacity(k)
    for block in _blocks(k):
        for row in block:
            yield _from_row(k, row)


def cycle_counts(partners, q):
    """Vectorized c(tau) for a stack of 0-based partner rows.

    Going once around a curve visits the bottom labels a, tau(a), s(a),
    tau(s(a)), ... where s(a) = tau(tau(a) + q) - q; every curve contributes
    exactly two cycles of s, one per direction of travel.
    """
    partners = np.asarray(partners, dtype=np.int64)
    n = partners.shape[1]
    shifted = np.take_along_axis(partners, (partners + q) % n, axis=1)
    step = (shifted - q) % n
    low = np.broadcast_to(np.arange(n), partners.shape).copy()
    span = 1
    while span < n:
        low = np.minimum(low, np.take_along_axis(low, step, axis=1))
        step = np.take_along_axis(step, step, axis=1)
        span *= 2
    cycles = (low == np.arange(n)).sum(axis=1)
    return cycles // 2


def max_cycles(k, q):
    """Maximal c(tau) over all non-separating tau, with the lexicographically
    smallest maximizer as witness."""
    _check_capacity(k)
    q = _check_q(k, q)
    best, witness = -1, None
    for block in _blocks(k):
        counts = cycle_counts(block, q)
        i = int(np.argmax(counts))
        if counts[i] > best:
            best, witness = int(counts[i]), block[i]
    return best, _from_row(k, witness)


def minimal_genus_search(p, q):
    """N(p, q) by exhaustive search: p/2 + 1 - max c(tau)."""
    if p % 2:
        raise NonSplittable(f"L({p}, q) with odd p contains no non-orientable surface")
    k = p // 2
    c, _ = max_cycles(k, q)
    return k + 1 - c


# ---------------------------------------------------------------------------
# text format: "k=<int>" then one "a b" line per pair

def dumps_tau(tau):
    lines = [f"k={tau.k}"] + [f"{a} {b}" for a, b in tau.pairs]
    return "\n".join(lines) + "\n"


def loads_tau(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise OneSidedError("empty tau file")
    head = lines[0].replace(" ", "")
    if not head.startswith("k="):
        raise OneSidedError(f"expected 'k=<int>' header, got {lines[0]!r}")
    k = int(head[2:])
    pairs = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise OneSidedError(f"expected 'a b', got {ln!r}")
        pairs.append((int(fields[0]), int(fields[1])))
    if len(pairs) != k:
        raise NotMatching(f"header says k={k} but {len(pairs)} pairs given")
    return validate_tau(pairs, k)


def node_json(node):
    return [node.label, "bottom" if node.level == BOTTOM else "top"]

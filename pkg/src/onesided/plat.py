"""Morse words for links in H u (Sigma x I) u N(U) and their plat normal form.

A Morse word lists events from the N(U) side down to the handlebody side.
Strand positions are 1-based and count from the left at each level.

``Cap(i)``     a local maximum: two new strands appear at positions i, i+1
``Cup(i)``     a local minimum: strands i and i+1 are joined
``Sigma(i, s)`` crossing of strands i and i+1; ``s = +1`` puts strand i over
``Handle(kind, r, i)`` strand i runs once along the surface loop a_r or b_r

Normalization pushes every minimum down into the handlebody and every
maximum up into N(U), leaving a surface braid whose ends are joined by the
bottom matching (arcs in H) and the top matching (capping curves in N(U)).
The surface-braid alphabet above is a convention of this package: no
generating set for the surface braid group is singled out.
"""
import json
import os
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from .errors import (GenusExceeded, IndexOutOfRange, NegativeStrands, NonTerminating,
                     OneSidedError, WordError)

BUDGET_ENV = "ONESIDED_REWRITE_BUDGET"


@dataclass(frozen=True)
class Cup:
    i: int

    def token(self):
        return f"cup {self.i}"


@dataclass(frozen=True)
class Cap:
    i: int

    def token(self):
        return f"cap {self.i}"


@dataclass(frozen=True)
class Sigma:
    i: int
    sign: int = 1

    def token(self):
        return f"sigma {self.i} {'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Handle:
    kind: str  # "a" or "b"
    r: int
    i: int

    def token(self):
        return f"handle {self.kind} {self.r} {self.i}"


def parse_event(text):
    f = text.split()
    try:
        if f[0] == "cup" and len(f) == 2:
            return Cup(int(f[1]))
        if f[0] == "cap" and len(f) == 2:
            return Cap(int(f[1]))
        if f[0] == "sigma" and len(f) == 3 and f[2] in "+-":
            return Sigma(int(f[1]), 1 if f[2] == "+" else -1)
        if f[0] == "handle" and len(f) == 4 and f[1] in ("a", "b"):
            return Handle(f[1], int(f[2]), int(f[3]))
    except (ValueError, IndexError):
        pass
    raise OneSidedError(f"cannot parse event {text!r}")


def _shift(e, by):
    if isinstance(e, Handle):
        return Handle(e.kind, e.r, e.i + by)
    return type(e)(e.i + by) if not isinstance(e, Sigma) else Sigma(e.i + by, e.sign)


def _delta(e):
    return 2 if isinstance(e, Cap) else -2 if isinstance(e, Cup) else 0


@dataclass(frozen=True)
class MorseWord:
    surface_genus: int
    events: tuple
    start_strands: int = 0
    end_strands: int = 0

    @property
    def closed(self):
        return self.start_strands == 0 and self.end_strands == 0

    def levels(self):
        """Strand count before each event, followed by the final count."""
        out = [self.start_strands]
        for e in self.events:
            out.append(out[-1] + _delta(e))
        return out


def validate_word(events, surface_genus, start_strands=0):
    """Type-check a sequence of events and compute the final strand count."""
    if surface_genus < 0:
        raise OneSidedError(f"surface genus must be non-negative, got {surface_genus}")
    if start_strands < 0 or start_strands % 2:
        raise OneSidedError(f"start_strands must be even and non-negative, got {start_strands}")
    events = tuple(events)
    n = start_strands
    for step, e in enumerate(events):
        if isinstance(e, Cup):
            if n < 2:
                raise NegativeStrands(step, f"cup with {n} strands")
            if not 1 <= e.i <= n - 1:
                raise IndexOutOfRange(step, f"cup {e.i} with {n} strands")
        elif isinstance(e, Cap):
            if not 1 <= e.i <= n + 1:
                raise IndexOutOfRange(step, f"cap {e.i} with {n} strands")
        elif isinstance(e, Sigma):
            if not 1 <= e.i <= n - 1 or e.sign not in (1, -1):
                raise IndexOutOfRange(step, f"sigma {e.i} with {n} strands")
        elif isinstance(e, Handle):
            if not 1 <= e.i <= n:
                raise IndexOutOfRange(step, f"handle on strand {e.i} with {n} strands")
            if e.kind not in ("a", "b") or e.r < 1:
                raise WordError(step, f"bad handle letter {e.token()}")
            if e.r > surface_genus:
                raise GenusExceeded(step, f"handle {e.r} on a genus {surface_genus} surface")
        else:
            raise WordError(step, f"unknown event {e!r}")
        n += _delta(e)
    return MorseWord(surface_genus, events, start_strands, n)


# ---------------------------------------------------------------------------
# component tracing

@dataclass(frozen=True)
class TraceResult:
    component_count: int
    pairing: tuple = ()  # ((endpoint, endpoint), ...) for open words


def trace(word):
    """Follow strands through every event; union-find over strand segments.

    Boundary endpoints are ``("top", j)`` before the first event and
    ``("bottom", j)`` after the last one.
    """
    ds = DisjointSet()
    positions = []
    for j in range(1, word.start_strands + 1):
        ds.add(("top", j))
        positions.append(("top", j))
    for step, e in enumerate(word.events):
        if isinstance(e, Cap):
            arc = ("arc", step)
            ds.add(arc)
            positions[e.i - 1:e.i - 1] = [arc, arc]
        elif isinstance(e, Cup):
            ds.merge(positions[e.i - 1], positions[e.i])
            del positions[e.i - 1:e.i + 1]
        elif isinstance(e, Sigma):
            positions[e.i - 1], positions[e.i] = positions[e.i], positions[e.i - 1]
    for j, seg in enumerate(positions, start=1):
        ds.add(("bottom", j))
        ds.merge(("bottom", j), seg)
    pairing = []
    for subset in ds.subsets():
        ends = sorted(x for x in subset if x[0] != "arc")
        if ends:
            pairing.append(tuple(ends))
    return TraceResult(len(ds.subsets()), tuple(sorted(pairing)))


# ---------------------------------------------------------------------------
# plat presentations

def _check_matching(pairs, n, what):
    seen = sorted(x for p in pairs for x in p[:2])
    if seen != list(range(1, n + 1)):
        raise OneSidedError(f"{what} is not a perfect matching on 1..{n}")


@dataclass(frozen=True)
class PlatPresentation:
    """A surface braid on ``n`` strands closed by two matchings.

    ``top_caps`` entries are ``(i, j, band)``: a capping curve in N(U)
    threading cross-cap ``band``. ``bottom_caps`` entries are
    ``(i, j, decoration)`` with ``decoration`` a (possibly empty) string of
    handle letters such as ``"a1b2"`` describing how the arc in H wraps.
    """
    surface_genus: int
    n: int
    bottom_caps: tuple
    braid_word: tuple
    top_caps: tuple

    def __post_init__(self):
        if self.n % 2 or self.n < 0:
            raise OneSidedError(f"strand count must be even, got {self.n}")
        _check_matching(self.bottom_caps, self.n, "bottom matching")
        _check_matching(self.top_caps, self.n, "top matching")
        for _, _, band in self.top_caps:
            if not 1 <= band <= self.surface_genus + 1:
                raise OneSidedError(f"band {band} outside 1..{self.surface_genus + 1}")
        if any(isinstance(e, (Cup, Cap)) for e in self.braid_word):
            raise OneSidedError("braid word may not contain cups or caps")
        validate_word(self.braid_word, self.surface_genus, self.n)

    def strand_permutation(self):
        """``perm[x - 1]`` is the bottom position reached from top position x."""
        where = list(range(1, self.n + 1))  # where[pos - 1] = top label now at pos
        for e in self.braid_word:
            if isinstance(e, Sigma):
                where[e.i - 1], where[e.i] = where[e.i], where[e.i - 1]
        perm = [0] * self.n
        for pos, label in enumerate(where, start=1):
            perm[label - 1] = pos
        return perm

    def to_json(self):
        return {
            "genus": self.surface_genus,
            "n": self.n,
            "bottom": [list(p) for p in self.bottom_caps],
            "braid": [e.token() for e in self.braid_word],
            "top": [list(p) for p in self.top_caps],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            surface_genus=int(data["genus"]),
            n=int(data["n"]),
            bottom_caps=tuple((int(i), int(j), str(d)) for i, j, d in data["bottom"]),
            braid_word=tuple(parse_event(t) for t in data["braid"]),
            top_caps=tuple((int(i), int(j), int(b)) for i, j, b in data["top"]),
        )


def plat_components(p):
    """Number of link components of the plat closure."""
    ds = DisjointSet([("top", x) for x in range(1, p.n + 1)]
                     + [("bottom", x) for x in range(1, p.n + 1)])
    for i, j, _ in p.top_caps:
        ds.merge(("top", i), ("top", j))
    for i, j, _ in p.bottom_caps:
        ds.merge(("bottom", i), ("bottom", j))
    for x, y in enumerate(p.strand_permutation(), start=1):
        ds.merge(("top", x), ("bottom", y))
    return len(ds.subsets())


def _cup_sequence(pairs, n):
    """Cups (read downward) that close a non-crossing matching on 1..n."""
    mate = {}
    for i, j, *_ in pairs:
        mate[i], mate[j] = j, i
    labels = list(range(1, n + 1))
    cups = []
    while labels:
        for idx in range(len(labels) - 1):
            if mate[labels[idx]] == labels[idx + 1]:
                cups.append(Cup(idx + 1))
                del labels[idx:idx + 2]
                break
        else:
            raise OneSidedError("matching is not planar; it has no Morse realization")
    return cups


def to_word(p):
    """A plat-shaped Morse word realizing the presentation (decorations dropped)."""
    caps = [Cap(c.i) for c in reversed(_cup_sequence(p.top_caps, p.n))]
    cups = _cup_sequence(p.bottom_caps, p.n)
    return validate_word(caps + list(p.braid_word) + cups, p.surface_genus, 0)


def hstack(left, right):
    """Split union: ``right`` placed to the right of ``left``."""
    if left.surface_genus != right.surface_genus:
        raise OneSidedError("cannot juxtapose presentations on different surfaces")
    k = left.n
    return PlatPresentation(
        left.surface_genus,
        left.n + right.n,
        left.bottom_caps + tuple((i + k, j + k, d) for i, j, d in right.bottom_caps),
        left.braid_word + tuple(_shift(e, k) for e in right.braid_word),
        left.top_caps + tuple((i + k, j + k, b) for i, j, b in right.top_caps),
    )


# ---------------------------------------------------------------------------
# normalization

def default_budget(event_count):
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else 50 * event_count ** 2


def _swap_cup(cup, e):
    """Rewrite ``cup`` followed by ``e`` so that the minimum comes last."""
    i = cup.i
    if isinstance(e, Sigma):
        if e.i <= i - 2:
            return [e, cup]
        if e.i >= i:
            return [Sigma(e.i + 2, e.sign), cup]
        # the crossing straddles the minimum: the right strand first passes
        # both legs of the arc, then makes the original crossing
        return [Sigma(i + 1, e.sign), Sigma(i, e.sign), Sigma(i - 1, e.sign), Cup(i + 1)]
    if isinstance(e, Handle):
        return [e if e.i < i else _shift(e, 2), cup]
    if isinstance(e, Cap):
        return [e, Cup(i + 2)] if e.i < i else [Cap(e.i + 2), cup]
    raise AssertionError(f"cup cannot pass {e!r}")


def _reverse(events):
    flip = {Cup: Cap, Cap: Cup}
    return [flip[type(e)](e.i) if type(e) in flip else e for e in reversed(events)]


class _Rewriter:
    def __init__(self, word, budget, check):
        self.genus = word.surface_genus
        self.budget = budget
        self.steps = 0
        self.check = check
        self.expected = trace(word) if check else None

    def _step(self, events, reversed_):
        self.steps += 1
        if self.steps > self.budget:
            raise NonTerminating(f"rewrite budget of {self.budget} steps exhausted")
        if self.check:
            seq = _reverse(events) if reversed_ else events
            got = trace(validate_word(seq, self.genus, 0))
            assert got == self.expected, f"rewrite changed the trace: {got} != {self.expected}"

    def remove_kinks(self, events):
        """Delete crossings between the two legs of an adjacent extremum."""
        idx = 0
        while idx < len(events) - 1:
            e, f = events[idx], events[idx + 1]
            if isinstance(e, Sigma) and isinstance(f, Cup) and e.i == f.i:
                del events[idx]
            elif isinstance(e, Cap) and isinstance(f, Sigma) and e.i == f.i:
                del events[idx + 1]
            else:
                idx += 1
                continue
            self._step(events, False)
            idx = max(idx - 1, 0)
        return events

    def sink_cups(self, events, reversed_=False):
        """Move every cup below all non-cup events, bottom-most cup first."""
        while True:
            tail = len(events)
            while tail and isinstance(events[tail - 1], Cup):
                tail -= 1
            idx = next((x for x in range(tail - 1, -1, -1) if isinstance(events[x], Cup)), None)
            if idx is None:
                return events
            while idx + 1 < len(events) and not isinstance(events[idx + 1], Cup):
                new = _swap_cup(events[idx], events[idx + 1])
                events[idx:idx + 2] = new
                idx += len(new) - 1
                self._step(events, reversed_)


def _matching_from_caps(caps):
    labels = []
    for k, c in enumerate(caps):
        labels[c.i - 1:c.i - 1] = [k, k]
    first, pairs = {}, []
    for pos, k in enumerate(labels, start=1):
        if k in first:
            pairs.append((first[k], pos))
        else:
            first[k] = pos
    return sorted(pairs)


def _matching_from_cups(cups, n):
    labels = list(range(1, n + 1))
    pairs = []
    for c in cups:
        pairs.append(tuple(sorted((labels[c.i - 1], labels[c.i]))))
        del labels[c.i - 1:c.i + 1]
    return sorted(pairs)


def _commutes(a, b):
    """True when two braid letters act on disjoint strands."""
    def support(e):
        return {e.i, e.i + 1} if isinstance(e, Sigma) else {e.i}
    return not support(a) & support(b)


def _absorb_boundary_kinks(braid, bottom, top):
    """Drop crossings between two strands joined by an innermost arc, when
    the crossing can be commuted to that end of the braid."""
    bottom_adj = {i for i, j in bottom if j == i + 1}
    top_adj = {i for i, j in top if j == i + 1}
    changed = True
    while changed:
        changed = False
        for idx in range(len(braid) - 1, -1, -1):
            e = braid[idx]
            if isinstance(e, Sigma) and e.i in bottom_adj \
                    and all(_commutes(e, f) for f in braid[idx + 1:]):
                del braid[idx]
                changed = True
                break
        for idx in range(len(braid)):
            e = braid[idx]
            if isinstance(e, Sigma) and e.i in top_adj \
                    and all(_commutes(e, f) for f in braid[:idx]):
                del braid[idx]
                changed = True
                break
    return braid


def _bands(braid, top, n):
    """Lowest handle index met by either strand of each top cap, default 1."""
    lowest = {x: None for x in range(1, n + 1)}
    where = list(range(1, n + 1))
    for e in braid:
        if isinstance(e, Sigma):
            where[e.i - 1], where[e.i] = where[e.i], where[e.i - 1]
        elif isinstance(e, Handle):
            label = where[e.i - 1]
            if lowest[label] is None or e.r < lowest[label]:
                lowest[label] = e.r
    out = []
    for i, j in top:
        rs = [r for r in (lowest[i], lowest[j]) if r is not None]
        out.append((i, j, min(rs) if rs else 1))
    return tuple(out)


def normalize(word, budget=None, check=False):
    """Plat normal form of a closed Morse word.

    With ``check=True`` every rewrite step re-traces the whole word and
    asserts that the component structure is unchanged.
    """
    if not word.closed:
        raise OneSidedError("only closed words (0 strands at both ends) can be normalized")
    if budget is None:
        budget = default_budget(len(word.events))
    rw = _Rewriter(word, budget, check)
    events = rw.remove_kinks(list(word.events))
    events = rw.remove_kinks(rw.sink_cups(events))
    events = rw.remove_kinks(_reverse(rw.sink_cups(_reverse(events), reversed_=True)))

    head = 0
    while head < len(events) and isinstance(events[head], Cap):
        head += 1
    tail = len(events)
    while tail > head and isinstance(events[tail - 1], Cup):
        tail -= 1
    caps, braid, cups = events[:head], events[head:tail], events[tail:]
    n = 2 * len(caps)
    top = _matching_from_caps(caps)
    bottom = _matching_from_cups(cups, n)
    braid = _absorb_boundary_kinks(braid, bottom, top)
    return PlatPresentation(
        surface_genus=word.surface_genus,
        n=n,
        bottom_caps=tuple((i, j, "") for i, j in bottom),
        braid_word=tuple(braid),
        top_caps=_bands(braid, top, n),
    )


# ---------------------------------------------------------------------------
# random words and text format

def random_closed_word(rng, max_events=40, genus=3):
    """A random valid closed word with at most ``max_events`` events."""
    target = rng.randint(2, max_events)
    events, n = [], 0
    while True:
        room = target - len(events)
        options = []
        if room - 1 >= (n + 2) // 2:
            options.append("cap")
        if n >= 2:
            options.append("cup")
            if room - 1 >= n // 2:
                options.append("sigma")
        if genus and n and room - 1 >= n // 2:
            options.append("handle")
        if not options or (n == 0 and events and room < 3):
            break
        kind = rng.choice(options)
        if kind == "cap":
            events.append(Cap(rng.randint(1, n + 1)))
        elif kind == "cup":
            events.append(Cup(rng.randint(1, n - 1)))
        elif kind == "sigma":
            events.append(Sigma(rng.randint(1, n - 1), rng.choice((1, -1))))
        else:
            events.append(Handle(rng.choice("ab"), rng.randint(1, genus), rng.randint(1, n)))
        n += _delta(events[-1])
    while n:
        events.append(Cup(rng.randint(1, n - 1)))
        n -= 2
    return validate_word(events, genus, 0)


def dumps_word(word):
    lines = [f"genus={word.surface_genus} strands={word.start_strands}"]
    lines += [e.token() for e in word.events]
    return "\n".join(lines) + "\n"


def loads_word(text):
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise OneSidedError("empty Morse word file")
    header = dict(f.split("=", 1) for f in lines[0].split() if "=" in f)
    try:
        genus, strands = int(header["genus"]), int(header.get("strands", 0))
    except (KeyError, ValueError):
        raise OneSidedError(f"expected 'genus=<g> strands=<n>', got {lines[0]!r}") from None
    return validate_word([parse_event(ln) for ln in lines[1:]], genus, strands)


def dumps_presentation(p):
    return json.dumps(p.to_json(), indent=2) + "\n"


def loads_presentation(text):
    return PlatPresentation.from_json(json.loads(text))

"""Exception hierarchy shared by all modules.

Every domain error derives from :class:`OneSidedError`, itself a
``ValueError``, so callers can catch input problems uniformly.
"""


class OneSidedError(ValueError):
    pass


class NonSplittable(OneSidedError):
    """Raised for lens spaces L(p, q) with p odd: they contain no closed
    non-orientable surface, hence admit no one-sided splitting."""


class CapacityError(OneSidedError):
    """An exhaustive search was requested beyond the configured bound."""


class InvalidTau(OneSidedError):
    pass


class Crossing(InvalidTau):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"chords through {a} and {b} cross")


class FixedPoint(InvalidTau):
    def __init__(self, a):
        self.a = a
        super().__init__(f"{a} is matched to itself")


class NotMatching(InvalidTau):
    def __init__(self, detail=""):
        super().__init__("pairs do not form a perfect matching" + (f": {detail}" if detail else ""))


class WordError(OneSidedError):
    """Ill-formed Morse word; ``step`` is the 0-based index of the first bad event."""

    def __init__(self, step, detail=""):
        self.step = step
        super().__init__(f"{type(self).__name__} at event {step}" + (f": {detail}" if detail else ""))


class IndexOutOfRange(WordError):
    pass


class NegativeStrands(WordError):
    pass


class GenusExceeded(WordError):
    pass


class NonTerminating(OneSidedError):
    """Plat normalization exceeded its rewrite budget."""

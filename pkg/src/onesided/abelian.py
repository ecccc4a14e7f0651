"""Exact integer linear algebra and finitely presented abelian groups.

Relations are rows, generators are columns. Entries are Python ints, so
nothing overflows.
"""
from dataclasses import dataclass

from .errors import OneSidedError


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple
    ncols: int

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise OneSidedError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise OneSidedError(f"ragged matrix: expected {ncols} columns in every row")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise OneSidedError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
                         other.ncols)

    def transpose(self):
        return IntMatrix([list(c) for c in zip(*self.rows)] if self.rows
                         else [[] for _ in range(self.ncols)], self.nrows)

    def is_diagonal(self):
        return all(x == 0 for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def diagonal(self):
        return [self.rows[i][i] for i in range(min(self.shape))]

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise OneSidedError("determinant of a non-square matrix")
        if n == 0:
            return 1
        m = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for t in range(n - 1):
            if m[t][t] == 0:
                swap = next((i for i in range(t + 1, n) if m[i][t]), None)
                if swap is None:
                    return 0
                m[t], m[swap] = m[swap], m[t]
                sign = -sign
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) // prev
            prev = m[t][t]
        return sign * m[n - 1][n - 1]

    def tolist(self):
        return [list(r) for r in self.rows]


def smith_normal_form(A):
    """Return ``(D, U, V)`` with ``U @ A @ V == D``, U and V unimodular and
    D diagonal with non-negative entries d_1 | d_2 | ...

    Pivots are the smallest nonzero |entry| of the remaining block, ties
    broken by row then column index.
    """
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):  # row dst += f * row src
        for M in (D, U):
            M[dst] = [x + f * y for x, y in zip(M[dst], M[src])]

    def add_col(src, dst, f):  # col dst += f * col src
        for M in (D, V):
            for r in M:
                r[dst] += f * r[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
    return IntMatrix(D, n), IntMatrix(U, m), IntMatrix(V, n)


def invariant_factors(A):
    D, _, _ = smith_normal_form(A)
    return [d for d in D.diagonal() if d]


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/d_1 + ... + Z/d_t with d_1 | ... | d_t and every d_i >= 2."""
    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        if self.rank < 0 or any(d < 2 for d in torsion):
            raise OneSidedError(f"invalid abelian group data {self.rank}, {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise OneSidedError(f"torsion {torsion} is not a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def primary_decomposition(self):
        """Prime-power orders of the cyclic torsion summands (display only)."""
        out = []
        for d in self.torsion:
            p = 2
            while d > 1:
                if d % p == 0:
                    e = 1
                    while d % p == 0:
                        d //= p
                        e *= p
                    out.append(e)
                p += 1
        return sorted(out)

    def contains_klein_four(self):
        return sum(1 for d in self.torsion if d % 2 == 0) >= 2

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


def group_from_presentation(n, relations):
    """The abelian group on ``n`` generators modulo the rows of ``relations``."""
    if isinstance(relations, IntMatrix):
        rel = relations
    else:
        rel = IntMatrix(relations, n)
    if rel.ncols != n:
        raise OneSidedError(f"relations have {rel.ncols} columns, expected {n}")
    if rel.nrows == 0:
        return AbelianGroup(n)
    factors = invariant_factors(rel)
    return AbelianGroup(n - len(factors), tuple(d for d in factors if d > 1))


@dataclass(frozen=True)
class GluingMatrix:
    """Homology action [l'; m'] = M [l; m] of a torus gluing, with det M = -1."""
    matrix: IntMatrix

    def __init__(self, matrix):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        if matrix.shape != (2, 2):
            raise OneSidedError(f"gluing matrix must be 2x2, got {matrix.shape}")
        if matrix.det() != -1:
            raise OneSidedError(f"gluing matrix must have determinant -1, got {matrix.det()}")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_entries(cls, p_l, q_l, p_m, q_m):
        return cls([[p_l, q_l], [p_m, q_m]])

    def inverse(self):
        (a, b), (c, d) = self.matrix.rows
        # det = -1
        return IntMatrix([[-d, b], [c, -a]])


KLEIN_GENERATORS = ("v", "lambda1", "lambda2", "mu")


def klein_gluing_relations(G, convention="covering"):
    """Relation rows over (v, lambda1, lambda2, mu) for a solid torus glued
    to the twisted I-bundle over the Klein bottle.

    ``v`` is the core of the solid torus, where m' bounds a disk.
    Under the ``"covering"`` convention the boundary longitude l double
    covers the band cores (l -> 2 lambda1) and the meridian m maps to
    2 mu; ``"printed"`` swaps the two images.
    """
    if not isinstance(G, GluingMatrix):
        G = GluingMatrix(G)
    (alpha, _), (gamma, _) = G.inverse().rows  # l = alpha l' + beta m', m = gamma l' + delta m'
    if convention == "covering":
        image_l, image_m = (0, 2, 0, 0), (0, 0, 0, 2)
    elif convention == "printed":
        image_l, image_m = (0, 0, 0, 2), (0, 2, 0, 0)
    else:
        raise OneSidedError(f"unknown convention {convention!r}")
    rows = [
        (0, 2, -2, 0),
        (alpha,) + image_l[1:],
        (gamma,) + image_m[1:],
    ]
    return IntMatrix(rows)


def h1_from_klein_gluing(G, convention="covering"):
    """H_1 of V glued to the Klein-bottle mapping cylinder along G."""
    return group_from_presentation(4, klein_gluing_relations(G, convention))


# ---------------------------------------------------------------------------
# text format: "generators <n>" then one relation row of n integers per line

def loads_presentation(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise OneSidedError("empty presentation file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "generators":
        raise OneSidedError(f"expected 'generators <n>', got {lines[0]!r}")
    n = int(head[1])
    rows = [[int(x) for x in ln.replace(",", " ").split()] for ln in lines[1:]]
    for i, r in enumerate(rows):
        if len(r) != n:
            raise OneSidedError(f"relation {i + 1} has {len(r)} entries, expected {n}")
    return n, IntMatrix(rows, n)


def dumps_presentation(n, relations):
    rows = relations.rows if isinstance(relations, IntMatrix) else relations
    return "\n".join([f"generators {n}"] + [" ".join(str(x) for x in r) for r in rows]) + "\n"

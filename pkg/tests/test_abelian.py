import itertools

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from onesided import abelian
from onesided.abelian import AbelianGroup, GluingMatrix, IntMatrix
from onesided.errors import OneSidedError


def check_certificate(A):
    D, U, V = abelian.smith_normal_form(A)
    assert U @ A @ V == D
    assert U.det() in (1, -1) and V.det() in (1, -1)
    assert D.is_diagonal()
    diag = D.diagonal()
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert diag[:len(nonzero)] == nonzero
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    return nonzero


def random_matrix(rng, lo=-20, hi=20, maxdim=6):
    m, n = rng.randint(1, maxdim), rng.randint(1, maxdim)
    return IntMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)])


def test_snf_examples():
    assert abelian.smith_normal_form([[2, 0], [0, 3]])[0].diagonal() == [1, 6]
    assert abelian.smith_normal_form([[0, 0], [0, 0]])[0].diagonal() == [0, 0]
    assert abelian.invariant_factors([[2, -2, 0], [0, 0, 0]]) == [2]


def test_snf_big_entries():
    A = IntMatrix([[10**30 + 1, 10**29], [7, 3 * 10**40]])
    check_certificate(A)


def test_snf_matches_sympy(rng):
    for _ in range(300):
        A = random_matrix(rng)
        ours = check_certificate(A)
        theirs = [abs(int(d)) for d in sympy_invariant_factors(Matrix(A.tolist()), domain=ZZ)]
        assert ours == [d for d in theirs if d]


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-50, 50), min_size=n, max_size=n),
                       min_size=m, max_size=m))))
def test_snf_certificate_property(rows):
    check_certificate(IntMatrix(rows))


def test_det():
    assert IntMatrix([[2, 1], [7, 4]]).det() == 1
    assert IntMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]]).det() == -3
    with pytest.raises(OneSidedError):
        IntMatrix([[1, 2]]).det()


def test_ragged_rejected():
    with pytest.raises(OneSidedError):
        IntMatrix([[1, 2], [3]])


def test_group_examples():
    assert abelian.group_from_presentation(1, []) == AbelianGroup(1)
    g = abelian.group_from_presentation(3, [[2, -2, 0], [0, 0, 2]])
    assert (g.rank, g.torsion) == (1, (2, 2))
    for k in range(1, 8):
        assert abelian.group_from_presentation(1, [[2 * k]]) == AbelianGroup(0, (2 * k,))
    with pytest.raises(OneSidedError):
        abelian.group_from_presentation(3, [[1, 2]])


def test_abelian_group_validation_and_display():
    with pytest.raises(OneSidedError):
        AbelianGroup(0, (2, 3))
    with pytest.raises(OneSidedError):
        AbelianGroup(0, (1,))
    g = AbelianGroup(1, (2, 12))
    assert str(g) == "Z + Z/2 + Z/12"
    assert g.primary_decomposition() == [2, 3, 4]
    assert g.contains_klein_four()
    assert str(AbelianGroup(0)) == "0"


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 7) for n in range(1, 7)])
def test_presentation_stability(rng, m, n):
    for _ in range(100):
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        base = abelian.group_from_presentation(n, rows)
        moved = [r[:] for r in rows]
        rng.shuffle(moved)
        i = rng.randrange(m)
        moved[i] = [-x for x in moved[i]]
        if m > 1:
            a, b = rng.sample(range(m), 2)
            f = rng.randint(-3, 3)
            moved[b] = [x + f * y for x, y in zip(moved[b], moved[a])]
        assert abelian.group_from_presentation(n, moved) == base


def test_klein_gluing_example():
    g = abelian.h1_from_klein_gluing([[0, 1], [1, 0]])
    assert (g.rank, g.torsion) == (1, (2, 2))
    assert g == abelian.h1_from_klein_gluing([[0, 1], [1, 0]], convention="printed")


def test_klein_gluing_diagonal_example():
    G = [[1, 0], [0, -1]]
    g = abelian.h1_from_klein_gluing(G)
    assert g == AbelianGroup(1, (2, 2))
    # eliminating v by hand leaves 2(l1 - l2) = 0 and 2 mu = 0 on (l1, l2, mu)
    assert g == abelian.group_from_presentation(3, [[2, -2, 0], [0, 0, 2]])


def test_klein_gluing_all_small_matrices():
    count = 0
    for a, b, c, d in itertools.product(range(-3, 4), repeat=4):
        if a * d - b * c != -1:
            continue
        count += 1
        for conv in ("covering", "printed"):
            g = abelian.h1_from_klein_gluing([[a, b], [c, d]], convention=conv)
            exponent = g.torsion[-1] if g.torsion else 1
            assert 4 % exponent == 0
            relations = abelian.klein_gluing_relations(GluingMatrix([[a, b], [c, d]]), conv)
            assert g == abelian.group_from_presentation(4, relations.rows)
    assert count > 50


def test_gluing_matrix_checks():
    with pytest.raises(OneSidedError):
        GluingMatrix([[1, 0], [0, 1]])
    with pytest.raises(OneSidedError):
        GluingMatrix([[1, 0, 0], [0, 1, 0]])
    G = GluingMatrix.from_entries(2, 1, 3, 1)
    assert G.matrix @ G.inverse() == IntMatrix.identity(2)
    with pytest.raises(OneSidedError):
        abelian.h1_from_klein_gluing([[0, 1], [1, 0]], convention="sideways")


def test_presentation_text_round_trip():
    text = "generators 3\n2 -2 0\n0 0 2\n"
    n, rel = abelian.loads_presentation(text)
    assert n == 3 and rel.rows == ((2, -2, 0), (0, 0, 2))
    assert abelian.dumps_presentation(n, rel) == text
    with pytest.raises(OneSidedError):
        abelian.loads_presentation("generators 3\n1 2\n")
    with pytest.raises(OneSidedError):
        abelian.loads_presentation("gens 3\n")

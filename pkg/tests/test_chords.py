from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from onesided import chords
from onesided.chords import Node, TOP, BOTTOM
from onesided.errors import CapacityError, Crossing, FixedPoint, NotMatching


def brute_matchings(points):
    """All non-crossing matchings by plain recursion, no numpy."""
    if not points:
        yield []
        return
    first = points[0]
    for idx in range(1, len(points), 2):
        for inner in brute_matchings(points[1:idx]):
            for outer in brute_matchings(points[idx + 1:]):
                yield [(first, points[idx])] + inner + outer


def test_validate_ok():
    tau = chords.validate_tau([(4, 1), (2, 3)], 2)
    assert tau.pairs == ((1, 4), (2, 3))
    assert tau(1) == 4 and tau(3) == 2


def test_validate_errors():
    with pytest.raises(FixedPoint):
        chords.validate_tau([(1, 1), (2, 3)], 2)
    with pytest.raises(NotMatching):
        chords.validate_tau([(1, 2), (2, 3)], 2)
    with pytest.raises(NotMatching):
        chords.validate_tau([(1, 2)], 2)
    with pytest.raises(Crossing) as exc:
        chords.validate_tau([(1, 3), (2, 4)], 2)
    assert (exc.value.a, exc.value.b) == (1, 2)


def test_cycle_decomposition_k1():
    tau = chords.validate_tau([(1, 2)], 1)
    dec = chords.cycle_decomposition(tau, 1)
    assert dec.c == 1
    assert dec.cycle_lengths == [4]
    assert dec.cycles[0] == (Node(1, BOTTOM), Node(2, BOTTOM), Node(1, TOP), Node(2, TOP))


def test_curves_cover_every_node_once():
    for tau in chords.enumerate_taus(4):
        dec = chords.cycle_decomposition(tau, 3)
        nodes = [nd for cyc in dec.cycles for nd in cyc]
        assert len(nodes) == len(set(nodes)) == 16
        assert all(len(cyc) % 4 == 0 for cyc in dec.cycles)


@pytest.mark.parametrize("k", range(1, 11))
def test_catalan_count(k):
    expected = [1]
    for m in range(1, k + 1):
        expected.append(sum(expected[i] * expected[m - 1 - i] for i in range(m)))
    assert sum(1 for _ in chords.enumerate_taus(k)) == expected[k] == chords.catalan(k)


@pytest.mark.parametrize("k", range(1, 7))
def test_enumeration_matches_brute_force(k):
    got = [t.pairs for t in chords.enumerate_taus(k)]
    brute = {tuple(sorted(m)) for m in brute_matchings(list(range(1, 2 * k + 1)))}
    assert len(got) == len(set(got))
    assert set(got) == brute
    assert [t.partner for t in chords.enumerate_taus(k)] == sorted(
        chords.TauInvolution(k, p).partner for p in brute)


def test_enumeration_bound(monkeypatch):
    monkeypatch.setenv(chords.MAX_K_ENV, "5")
    with pytest.raises(CapacityError):
        next(chords.enumerate_taus(6))
    with pytest.raises(CapacityError):
        chords.max_cycles(6, 1)


def test_vectorized_counts_match_tracing():
    for k in range(1, 7):
        rows = chords._table(k)
        for q in [q for q in range(1, 2 * k, 2) if gcd(q, 2 * k) == 1]:
            fast = chords.cycle_counts(rows, q)
            slow = [chords.cycle_decomposition(chords._from_row(k, r), q).c for r in rows]
            assert list(fast) == slow


def test_max_cycles_examples():
    c, tau = chords.max_cycles(4, 3)
    assert c == 3
    assert tau.pairs == ((1, 2), (3, 4), (5, 8), (6, 7))
    assert chords.max_cycles(6, 5)[0] == 5
    assert chords.max_cycles(5, 1)[0] == 1


def test_max_cycles_block_split_is_serial_result(monkeypatch):
    serial = chords.max_cycles(7, 3)
    monkeypatch.setattr(chords, "_BLOCK_ROWS", 7)
    assert chords.max_cycles(7, 3) == serial


taus_k5 = list(chords.enumerate_taus(5))


@settings(max_examples=60)
@given(st.sampled_from(taus_k5), st.integers(0, 9), st.sampled_from([1, 3, 7, 9]))
def test_rotation_invariance(tau, r, q):
    assert chords.cycle_decomposition(tau.rotated(r), q).c == chords.cycle_decomposition(tau, q).c


@settings(max_examples=60)
@given(st.sampled_from(taus_k5), st.sampled_from([1, 3, 7, 9]))
def test_reflection_with_mirror_q(tau, q):
    assert (chords.cycle_decomposition(tau.reflected(), 10 - q).c
            == chords.cycle_decomposition(tau, q).c)


@settings(max_examples=60)
@given(st.sampled_from(taus_k5), st.sampled_from([1, 3, 7, 9]))
def test_genus_plus_euler_is_one(tau, q):
    c = chords.cycle_decomposition(tau, q).c
    assert 1 <= c <= tau.k
    assert chords.genus_of_tau(tau, q) + chords.euler_characteristic(tau, q) == 1


def test_tau_text_round_trip():
    tau = chords.validate_tau([(1, 4), (2, 3), (5, 6)], 3)
    text = chords.dumps_tau(tau)
    assert text == "k=3\n1 4\n2 3\n5 6\n"
    assert chords.dumps_tau(chords.loads_tau(text)) == text
    assert chords.loads_tau("  k = 3 \n\n 6 5\n3 2\n4   1\n") == tau


def test_tau_text_errors():
    with pytest.raises(NotMatching):
        chords.loads_tau("k=2\n1 2\n")
    with pytest.raises(Crossing):
        chords.loads_tau("k=2\n1 3\n2 4\n")

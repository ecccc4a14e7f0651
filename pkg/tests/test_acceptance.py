"""Acceptance criteria, one test each, with wall-clock limits.

Each test records a PASS/FAIL line; they are printed together in the pytest
terminal summary, and also when this file is run as a script.
"""
import random
import time
from math import gcd

from onesided import abelian, chords, genus, plat, reproduce, splittings

RESULTS = {}


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        RESULTS[self.number] = f"FAIL  [{self.number}] {self.title} (did not finish)"
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        why = "" if exc_type is None else f": {exc_type.__name__} {exc}"
        RESULTS[self.number] = (f"{'PASS' if ok else 'FAIL'}  [{self.number}] {self.title} "
                                f"({elapsed:.2f}s, limit {self.limit}s){why}")
        if exc_type is None:
            assert elapsed < self.limit, RESULTS[self.number]
        return False


def test_1_formula_vs_oracle():
    with Criterion(1, "genus formula equals exhaustive chord search, even p <= 24", 60):
        checked = 0
        for p in range(2, 25, 2):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                c_max, _ = chords.max_cycles(p // 2, q)
                assert genus.minimal_genus_formula(p, q) == p // 2 + 1 - c_max, (p, q)
                checked += 1
        assert checked == 63


def test_2_adjacent_family():
    with Criterion(2, "q = 1 family: adjacent tau has c = 1, genus k, max c = 1, k <= 8", 5):
        for k in range(1, 9):
            tau = splittings.adjacent_tau(k)
            assert chords.cycle_decomposition(tau, 1).c == 1
            assert chords.genus_of_tau(tau, 1) == k
            assert chords.max_cycles(k, 1)[0] == 1


def test_3_klein_family():
    with Criterion(3, "Klein bottle family: c = 2a+1, genus 2, cycles as listed, a <= 5", 5):
        for a in range(1, 6):
            q = 2 * a + 1
            tau = splittings.klein_tau(a)
            chords.validate_tau(tau.pairs, tau.k)
            dec = chords.cycle_decomposition(tau, q)
            assert dec.c == 2 * a + 1
            assert chords.genus_of_tau(tau, q) == 2
            assert sorted(dec.cycle_lengths) == [4] * (2 * a) + [8]
            long_cycle = [(1, 0), (2 * a + 2, 0), (4 * a + 3, 1), (4 * a + 4, 1),
                          (2 * a + 3, 0), (2 * a + 4, 0), (1, 1), (2 * a + 2, 1)]
            assert [tuple(nd) for nd in dec.cycles[0]] == long_cycle
            short = sorted(reproduce._cyclic_key(c) for c in reproduce.klein_short_cycles(a))
            got = sorted(reproduce._cyclic_key([tuple(nd) for nd in c])
                         for c in dec.cycles if len(c) == 4)
            assert short == got


def test_4_klein_gluing_homology():
    with Criterion(4, "H1 of the Klein bottle gluing [[0,1],[1,0]] is Z + Z/2 + Z/2", 1):
        g = abelian.h1_from_klein_gluing([[0, 1], [1, 0]])
        assert g.rank == 1 and g.torsion == (2, 2)


def test_5_snf_certificates():
    with Criterion(5, "SNF certificate on 1000 random matrices up to 6x6, entries in [-20, 20]", 10):
        rng = random.Random(5)
        for _ in range(1000):
            m, n = rng.randint(1, 6), rng.randint(1, 6)
            A = abelian.IntMatrix([[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)])
            D, U, V = abelian.smith_normal_form(A)
            assert U @ A @ V == D
            assert abs(U.det()) == 1 and abs(V.det()) == 1
            assert D.is_diagonal()
            d = [x for x in D.diagonal() if x]
            assert all(x > 0 for x in d)
            assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_6_catalan_enumeration():
    with Criterion(6, "enumeration size follows the Catalan recurrence, k <= 10", 10):
        cat = [1]
        for k in range(1, 11):
            cat.append(sum(cat[i] * cat[k - 1 - i] for i in range(k)))
            assert sum(1 for _ in chords.enumerate_taus(k)) == cat[k]
        assert cat[3] == 5 and cat[10] == 16796


def test_7_plat_conservation():
    with Criterion(7, "normalize 500 random closed words: in budget, plat shape, components kept", 30):
        rng = random.Random(7)
        for _ in range(500):
            w = plat.random_closed_word(rng, max_events=40, genus=rng.randint(0, 3))
            p = plat.normalize(w, budget=plat.default_budget(len(w.events)))
            assert not any(isinstance(e, (plat.Cup, plat.Cap)) for e in p.braid_word)
            assert plat.plat_components(p) == plat.trace(w).component_count


def test_8_splitting_genera():
    with Criterion(8, "bundle and lens handlebody genera", 1):
        for g in range(11):
            s = splittings.trivial_bundle_splitting(g)
            assert s.u_genus == 2 * g + 4 and s.handlebody_genus == 2 * g + 3
        assert splittings.lens_splitting(8, 3).handlebody_genus == 1
        for k in range(1, 9):
            assert splittings.lens_splitting(2 * k, 1).handlebody_genus == k - 1


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except Exception:
                pass
    for number in sorted(RESULTS):
        print(RESULTS[number])

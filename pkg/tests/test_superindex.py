import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from superdual.superindex import (Pyramid, SuperIndex, all_perms, alpha, compose, inverse, nu,
                                  orbit_representatives, permute, transposition)

bits = st.integers(0, 1)


def test_superindex_order_and_parity():
    pyr = Pyramid(2, 3)
    labels = [pyr.index(p) for p in range(5)]
    assert labels == sorted(labels, key=pyr.position)
    assert [x.parity for x in labels] == [0, 0, 1, 1, 1]
    assert SuperIndex.parse("2'") == SuperIndex(True, 2)
    assert pyr.position(SuperIndex.parse("3")) == 4


def test_alpha_examples():
    assert alpha((0, 0), (0, 0)) == 1
    assert alpha((0, 1), (1, 0)) == -1
    assert alpha((1, 1, 1), (1, 1, 1)) == -1
    with pytest.raises(ValueError):
        alpha((0,), (0, 1))


def test_nu_examples():
    for eps in itertools.product((0, 1), repeat=3):
        assert nu(eps, (0, 1, 2)) == 1
    assert nu((1, 1), (1, 0)) == -1
    assert nu((0, 1), (1, 0)) == 1


def test_permute_examples():
    i = ("1̄", "1", "2")
    assert permute(i, (0, 1, 2)) == i
    assert permute(i, transposition(3, 0, 1)) == ("1", "1̄", "2")


def test_right_action_law():
    for d in range(1, 4):
        for i in itertools.product(range(3), repeat=d):
            for s in all_perms(d):
                for t in all_perms(d):
                    assert permute(permute(i, s), t) == permute(i, compose(s, t))


def test_alpha_concatenation_exhaustive():
    for d1 in range(4):
        for d2 in range(4):
            for e1, e2, f1, f2 in itertools.product(itertools.product((0, 1), repeat=d1),
                                                    itertools.product((0, 1), repeat=d2),
                                                    itertools.product((0, 1), repeat=d1),
                                                    itertools.product((0, 1), repeat=d2)):
                lhs = alpha(e1 + e2, f1 + f2)
                rhs = alpha(e1, f1) * alpha(e2, f2) * (-1) ** (sum(f1) * sum(e2))
                assert lhs == rhs


def test_nu_cocycle_exhaustive():
    for d in range(1, 4):
        for eps in itertools.product((0, 1), repeat=d):
            for s in all_perms(d):
                for t in all_perms(d):
                    assert nu(eps, compose(s, t)) == nu(eps, s) * nu(permute(eps, s), t)


@given(st.lists(bits, min_size=1, max_size=6), st.randoms())
def test_nu_of_inverse(eps, r):
    d = len(eps)
    sigma = list(range(d))
    r.shuffle(sigma)
    sigma = tuple(sigma)
    # ν(ε,σ) ν(ε.σ, σ^{-1}) = ν(ε, id) = 1
    assert nu(eps, sigma) * nu(permute(eps, sigma), inverse(sigma)) == 1


@pytest.mark.parametrize("m,n", [(m, n) for n in range(1, 5) for m in range(1, n + 1)])
@pytest.mark.parametrize("justify", ["right", "left"])
def test_triples_count_and_nonnegative(m, n, justify):
    pyr = Pyramid(m, n, justify)
    assert len(pyr.triples) == 3 * m + n
    assert all(t[2] >= 0 and pyr.admissible(t) for t in pyr.triples)
    # every pair in J maps to K, and the chosen representatives give a bijection onto K
    assert {pyr.upsilon(h, k) for h, k in pyr.J} == set(pyr.triples)
    reps = pyr.J_representatives
    assert sorted(reps) == sorted(pyr.triples)
    assert {pyr.upsilon(*hk): t for t, hk in reps.items()} == {t: t for t in reps}


def test_triples_right_justified_ranges():
    m, n = 2, 4
    pyr = Pyramid(m, n)
    bar_plain = sorted(t[2] for t in pyr.triples if t[:2] == (0, 1))
    plain_bar = sorted(t[2] for t in pyr.triples if t[:2] == (1, 0))
    assert bar_plain == list(range(m))
    assert plain_bar == list(range(n - m, n))
    assert sorted(t[2] for t in pyr.triples if t[:2] == (1, 1)) == list(range(n))
    assert sorted(t[2] for t in pyr.triples if t[:2] == (0, 0)) == list(range(m))


def test_col_coordinates():
    pyr = Pyramid(2, 3)
    assert [pyr.col(p) for p in range(5)] == [2, 3, 1, 2, 3]
    left = Pyramid(2, 3, "left")
    assert [left.col(p) for p in range(5)] == [1, 2, 1, 2, 3]
    with pytest.raises(ValueError):
        Pyramid(3, 2)


def test_upsilon_equivariant():
    pyr = Pyramid(1, 2)
    for I in itertools.product(range(3), repeat=2):
        for J in itertools.product(range(3), repeat=2):
            for s in all_perms(2):
                assert pyr.Upsilon(permute(I, s), permute(J, s)) == permute(pyr.Upsilon(I, J), s)


def test_orbit_representatives():
    pyr = Pyramid(1, 1)
    J = pyr.J
    dom1 = [(x,) for x in J]
    orb1 = orbit_representatives(dom1, 1)
    assert len(orb1) == len(J)
    dom2 = list(itertools.product(J, repeat=2))
    orb2 = orbit_representatives(dom2, 2)
    assert len(orb2) == len(J) * (len(J) + 1) // 2
    assert sum(len(v) for v in orb2.values()) == len(dom2)
    for rep, members in orb2.items():
        for x, sigma in members:
            assert permute(rep, sigma) == x
    counts = Counter(x for v in orb2.values() for x, _ in v)
    assert set(counts.values()) == {1}

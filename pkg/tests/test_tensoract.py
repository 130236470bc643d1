import itertools
import random
from fractions import Fraction

import pytest

from superdual.exactlin import ExactMatrix, Subspace, commutant
from superdual.glsuper import (GlElement, centralizer_combinatorial, elementary, gl_basis,
                               nilpotent_from_partitions, regular_nilpotent, supertrace)
from superdual.superindex import all_perms, compose, simple
from superdual.tensoract import (TensorSpace, comodule_coeffs, phi_d, poly_insertion, psi_d,
                                 psi_generators, theta_basis, theta_from_comodule, theta_operator,
                                 theta_sigma, theta_sigma_trace)


def vec(sp, L, mi):
    """Image of basis vector v_mi as {multi-index: coeff}."""
    col = sp.index(mi)
    return {sp.basis[r]: v for r, c, v in L.items() if c == col}


def test_phi_d1_is_identity_map():
    X = elementary(1, 2, 1, 2) + elementary(1, 2, 0, 0).scale(3)
    assert phi_d(X, 1).op == X.matrix


def test_phi_odd_sign_gl11():
    sp = TensorSpace(1, 1, 2)
    L = phi_d(elementary(1, 1, 1, 0), 2, sp).op
    assert vec(sp, L, (0, 0)) == {(1, 0): 1, (0, 1): 1}
    assert vec(sp, L, (0, 1)) == {(1, 1): 1}
    assert vec(sp, L, (1, 0)) == {(1, 1): -1}
    assert vec(sp, L, (1, 1)) == {}


@pytest.mark.parametrize("m,n,d", [(1, 1, 2), (1, 2, 2), (1, 1, 3)])
def test_phi_homomorphism(m, n, d):
    sp = TensorSpace(m, n, d)
    basis = [X for _, X in gl_basis(m, n)]
    for X, Y in itertools.product(basis, repeat=2):
        lhs = phi_d(X.bracket(Y), d, sp).op
        A, B = phi_d(X, d, sp).op, phi_d(Y, d, sp).op
        rhs = A @ B - (B @ A).scale((-1) ** (X.parity * Y.parity))
        assert lhs == rhs


def test_psi_examples():
    sp = TensorSpace(1, 1, 2)
    s1 = psi_d((1, 0), sp).op
    assert vec(sp, s1, (1, 1)) == {(1, 1): -1}
    assert vec(sp, s1, (0, 0)) == {(0, 0): 1}
    assert vec(sp, s1, (0, 1)) == {(1, 0): 1}
    assert (s1 @ s1) == ExactMatrix.identity(4)


def test_psi_braid_and_action_law():
    sp = TensorSpace(1, 2, 3)
    s1, s2 = (psi_d(simple(3, j), sp).op for j in range(2))
    assert s1 @ s2 @ s1 == s2 @ s1 @ s2
    # right action: v.(στ) = (v.σ).τ, i.e. L(στ) = L(τ) L(σ)
    for s in all_perms(3):
        for t in all_perms(3):
            assert psi_d(compose(s, t), sp).op == psi_d(t, sp).op @ psi_d(s, sp).op


def test_psi_commutes_with_phi():
    sp = TensorSpace(1, 2, 2)
    s1 = psi_d((1, 0), sp).op
    for _, X in gl_basis(1, 2):
        A = phi_d(X, 2, sp).op
        assert A @ s1 == s1 @ A


def test_poly_insertion_examples():
    zero = nilpotent_from_partitions((1,), (1,))
    sp11 = TensorSpace(1, 1, 2)
    assert poly_insertion(0, sp11, zero).op.is_zero()
    sp = TensorSpace(1, 2, 2)
    e = regular_nilpotent(1, 2)
    x1 = poly_insertion(0, sp, e).op
    for mi in sp.basis:
        expected = {(1, mi[1]): 1} if mi[0] == 2 else {}
        assert vec(sp, x1, mi) == expected
    x2 = poly_insertion(1, sp, e).op
    assert x1 @ x2 == x2 @ x1
    assert (x1 @ x1).is_zero()
    with pytest.raises(ValueError):
        poly_insertion(2, sp, e)


def test_theta_d1_is_xi():
    sp = TensorSpace(1, 2, 1)
    pyr = sp.pyr
    for t, (h, k) in pyr.J_representatives.items():
        T = theta_operator(sp, (h,), (k,)).op
        expected = ExactMatrix(3, 3, {hk: 1 for hk in pyr.pairs_for(t)})
        assert T == expected


def test_theta_two_orbit():
    sp = TensorSpace(1, 2, 2)
    pyr = sp.pyr
    ts = sorted(pyr.triples)
    a, b = ts[0], ts[-1]
    ha, ka = pyr.J_representatives[a]
    hb, kb = pyr.J_representatives[b]
    T = theta_operator(sp, (ha, hb), (ka, kb)).op
    T_swapped = theta_operator(sp, (hb, ha), (kb, ka)).op
    assert Subspace(81, [T.flat()]) == Subspace(81, [T_swapped.flat()])
    with pytest.raises(ValueError):
        theta_operator(sp, (2, 0), (0, 0))


@pytest.mark.parametrize("m,n,d", [(1, 2, 2), (2, 2, 2), (1, 1, 3)])
def test_theta_spans_commutant(m, n, d):
    sp = TensorSpace(m, n, d)
    e = regular_nilpotent(m, n)
    gens = psi_generators(sp) + [poly_insertion(i, sp, e).op for i in range(d)]
    C = commutant(gens)
    thetas = [T.op for T in theta_basis(sp).values()]
    for T in thetas:
        for g in gens:
            assert (T @ g - g @ T).is_zero()
    assert Subspace(sp.dim ** 2, [T.flat() for T in thetas]) == C


def test_comodule_counit_and_theta_consistency():
    sp = TensorSpace(1, 2, 2)
    for t in sp.basis:
        terms = comodule_coeffs(sp, t)
        diag = [c for s, ups, c in terms if s == t]
        assert diag == [1]
    for rep in theta_basis(sp):
        I = tuple(sp.pyr.J_representatives[k][0] for k in rep)
        J = tuple(sp.pyr.J_representatives[k][1] for k in rep)
        assert theta_from_comodule(sp, I, J) == theta_operator(sp, I, J).op


def test_comodule_d1_leftmost():
    sp = TensorSpace(1, 2, 1)
    # unbarred 1 sits in column 1: only pairs (h, 1) with col(h) <= 1 in K reach it
    terms = comodule_coeffs(sp, (1,))
    assert [(s, c) for s, _, c in terms] == [((1,), 1)]


def _rnd_even(rng, m, n):
    N = m + n
    return GlElement(m, n, ExactMatrix(N, N, {(a, b): rng.randint(-3, 3)
                                              for a in range(N) for b in range(N) if (a < m) == (b < m)}))


def test_theta_sigma_examples():
    X = _rnd_even(random.Random(1), 1, 2)
    assert theta_sigma((0,), [X]) == supertrace(X)
    e = regular_nilpotent(1, 2).element
    assert theta_sigma((1, 0), [e, e]) == supertrace(e @ e) == 0
    with pytest.raises(ValueError):
        theta_sigma((0, 1), [e])


def test_theta_sigma_trace_identity():
    rng = random.Random(7)
    for m, n in ((1, 1), (1, 2)):
        for d in (1, 2, 3):
            sp = TensorSpace(m, n, d)
            for sigma in all_perms(d):
                Xs = [_rnd_even(rng, m, n) for _ in range(d)]
                assert theta_sigma(sigma, Xs) == theta_sigma_trace(sigma, Xs, sp)


@pytest.mark.parametrize("m,n,d", [(1, 2, 2), (2, 3, 1), (2, 2, 2)])
def test_phi_of_centralizer_raises_v_degree(m, n, d):
    sp = TensorSpace(m, n, d)
    cb = centralizer_combinatorial(m, n)
    for X, r in zip(cb.elements, cb.col_degrees):
        assert sp.degree_profile(phi_d(X, d, sp).op) == {r}

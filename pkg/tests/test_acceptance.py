"""Acceptance criteria 1-11, exact arithmetic throughout.

Each test prints one ``criterion N: PASS|FAIL`` line as it finishes, and the
full list is repeated in the terminal summary.  Run with

    pytest tests/test_acceptance.py -v
"""

import time
from fractions import Fraction

import pytest

from superdual import duality
from superdual.glsuper import (centralizer_combinatorial, centralizer_dimension_formula,
                               centralizer_oracle, nilpotent_from_partitions, regular_nilpotent)
from superdual.hecke import (CharVector, HeckeOperatorSet, check_dAHA_relations,
                             closed_vs_recursive, cyclotomic_minpoly)
from superdual.tensoract import TensorSpace
from superdual import wtrunc

RESULTS = {}

GRID = [(1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 2), (2, 3, 2)]
GRID_C = [(m, n, d, c) for (m, n, d) in GRID
          for c in (CharVector.zero(n), CharVector(range(1, n + 1)))]
SMALL = [(1, 2, 2), (2, 2, 2)]
GENERIC_C = {2: CharVector((Fraction(-1, 3), Fraction(5, 2)))}


def sergeev_grid():
    out = []
    for N in range(2, 65):
        for m in range(1, N // 2 + 1):
            d = 1
            while N ** d <= 64:
                out.append((m, N - m, d))
                d += 1
    return out


def report(capsys, n, failures, elapsed, budget):
    ok = not failures
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f} s, budget {budget} s)"
    if failures:
        line += " - " + "; ".join(str(f) for f in failures[:5])
    RESULTS[n] = line
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert elapsed < budget, f"criterion {n} over its time budget"


def test_criterion_1_hecke_relations(capsys):
    t0 = time.perf_counter()
    failures = []
    slowest = 0.0
    for m, n, d, c in GRID_C:
        t = time.perf_counter()
        H = HeckeOperatorSet.build(m, n, d, c, check=False)
        rels = check_dAHA_relations(H)
        for r in rels:
            if not r["pass"]:
                failures.append((m, n, d, str(c), r["name"]))
        # every family that exists at this d must be present
        expected = 3 if d == 2 else 5
        kinds = {_family(r["name"]) for r in rels}
        if len(kinds) != expected:
            failures.append((m, n, d, "families", sorted(kinds)))
        slowest = max(slowest, time.perf_counter() - t)
    assert slowest < 10
    report(capsys, 1, failures, time.perf_counter() - t0, 10 * len(GRID_C))


def _family(name):
    if name.startswith("x") and "s" in name:
        return "mixed" if "-" in name else "x-s commute"
    if name.startswith("x"):
        return "x commute"
    if "^2" in name:
        return "involution"
    return "braid"


def test_criterion_2_cyclotomic(capsys):
    t0 = time.perf_counter()
    failures = []
    for m, n, d, c in GRID_C:
        mp, target, same = cyclotomic_minpoly(TensorSpace(m, n, d), c)
        if not same:
            failures.append((m, n, d, str(c), mp))
    # the quoted instance: n = 2, c = 0 gives x^2
    mp, _, _ = cyclotomic_minpoly(TensorSpace(1, 2, 2), CharVector.zero(2))
    if list(mp) != [0, 0, 1]:
        failures.append(("x^2 instance", mp))
    report(capsys, 2, failures, time.perf_counter() - t0, 5 * len(GRID_C))


def test_criterion_3_closed_vs_recursive(capsys):
    t0 = time.perf_counter()
    failures = []
    for m, n, d, c in GRID_C:
        bad = closed_vs_recursive(TensorSpace(m, n, d), c)
        if bad:
            failures.append((m, n, d, str(c), bad))
    report(capsys, 3, failures, time.perf_counter() - t0, 10 * len(GRID_C))


def test_criterion_4_sergeev(capsys):
    t0 = time.perf_counter()
    failures = []
    grid = sergeev_grid()
    assert len(grid) > 60
    for m, n, d in grid:
        rep = duality.verify_sergeev(m, n, d, size_cap=64)
        if not rep.equal:
            failures.append((m, n, d))
    report(capsys, 4, failures, time.perf_counter() - t0, 60)


def test_criterion_5_vust(capsys):
    t0 = time.perf_counter()
    failures = []
    for m, n, d in [(1, 2, 2), (1, 2, 3), (2, 2, 2)]:
        rep = duality.verify_trunc_poly_dc(m, n, d)
        if not rep.equal:
            failures.append(("regular", m, n, d))
    cases = [(1, 2, 2, nilpotent_from_partitions((1,), (1, 1))),
             (1, 1, 2, nilpotent_from_partitions((1,), (1,)))]
    for m, n, d, e in cases:
        rep = duality.verify_vust(m, n, d, e)
        if not rep.equal:
            failures.append(("vust", m, n, d, e.label()))
    # e = 0 must give back the Sergeev commutant
    zero = duality.verify_vust(1, 1, 2, nilpotent_from_partitions((1,), (1,)))
    if zero.lhs_dim != duality.verify_sergeev(1, 1, 2).lhs_dim:
        failures.append("e = 0 does not reduce to Sergeev")
    report(capsys, 5, failures, time.perf_counter() - t0, 180)


def test_criterion_6_centralizer(capsys):
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 5):
        for m in range(1, n + 1):
            cb = centralizer_combinatorial(m, n)
            oracle = centralizer_oracle(regular_nilpotent(m, n))
            span = cb.span()
            if span != oracle or len(cb) != 3 * m + n or oracle.dim != 3 * m + n:
                failures.append((m, n, len(cb), oracle.dim))
            if centralizer_dimension_formula((m,), (n,)) != 3 * m + n:
                failures.append((m, n, "formula"))
    report(capsys, 6, failures, time.perf_counter() - t0, 5)


def test_criterion_7_axioms_and_theta(capsys):
    t0 = time.perf_counter()
    failures = []
    for m, n, d in SMALL:
        rep = duality.coefficient_axioms(m, n, d)
        failures += [(m, n, d, c["name"]) for c in rep.checks if not c["pass"]]
    report(capsys, 7, failures, time.perf_counter() - t0, 60)


def test_criterion_8_wchi(capsys):
    t0 = time.perf_counter()
    failures = []
    for m, n in [(1, 1), (1, 2), (2, 2)]:
        ok, rows, W = wtrunc.wchi_hilbert_check(m, n, 6)
        failures += [(m, n, k, a, b) for k, a, b in rows if a != b]
        if not ok:
            failures.append((m, n, "hilbert"))
        checked, bad = wtrunc.product_closure(W)
        if bad or not checked:
            failures.append((m, n, "products", checked, bad))
    report(capsys, 8, failures, time.perf_counter() - t0, 180)


def test_criterion_9_hecke_duality(capsys):
    t0 = time.perf_counter()
    failures = []
    for m, n, d in SMALL:
        W = wtrunc.find_wchi(m, n, 6)
        for c in (CharVector.zero(n), GENERIC_C[n]):
            rep = duality.verify_hecke_dc(m, n, d, c, nilp_wchi=W)
            failures += [(m, n, d, str(c), ch["name"]) for ch in rep.checks if not ch["pass"]]
    report(capsys, 9, failures, time.perf_counter() - t0, 180)


def test_criterion_10_theta_sigma(capsys):
    t0 = time.perf_counter()
    rep = duality.theta_sigma_checks(3, seed=2024, trials=20, conj_params=(1, 2, 2))
    failures = [ch["name"] for ch in rep.checks if not ch["pass"]]
    report(capsys, 10, failures, time.perf_counter() - t0, 10)


def test_criterion_11_filtration(capsys):
    t0 = time.perf_counter()
    failures = []
    for c in (CharVector.zero(2), CharVector((1, 2)), GENERIC_C[2]):
        rep = duality.filtration_consistency(1, 2, 2, c)
        failures += [(str(c), ch["name"]) for ch in rep.checks if not ch["pass"]]
    report(capsys, 11, failures, time.perf_counter() - t0, 10)

from math import comb, factorial

import pytest

from paseptab.perms import (
    count_2_31,
    count_31_2,
    crossing_distribution_by_wexc,
    crossings,
    descent_convention_report,
    descent_set,
    genfun_descent_class,
    genfun_wexc_class,
    pattern_distribution_by_descents,
    perms_of,
    q_eulerian,
    weak_excedence_set,
)
from paseptab.poly import Poly, Q
from paseptab.tableaux import genfun_expanse


def test_perms_of():
    assert list(perms_of(0)) == [()]
    assert list(perms_of(2)) == [(1, 2), (2, 1)]
    assert len(list(perms_of(4))) == 24
    with pytest.raises(ValueError):
        perms_of(-1)


def test_stat_sets():
    assert weak_excedence_set((2, 1, 4, 3)) == {1, 3}
    assert weak_excedence_set((1, 2, 3)) == {1, 2, 3}
    assert descent_set((2, 1, 4, 3)) == {1, 3}
    assert descent_set((1, 2, 3)) == frozenset()
    assert descent_set((3, 2, 1)) == {1, 2}


def test_crossings_examples():
    assert crossings((3, 1, 4, 2)) == 1
    assert crossings((4, 1, 3, 2)) == 0
    assert crossings((2, 1, 4, 3)) == 0
    assert crossings((1, 2, 3, 4)) == 0
    assert crossings((3, 2, 1)) == 0


def test_pattern_counts():
    assert count_2_31((2, 4, 1, 3)) == 1
    assert count_2_31((3, 4, 1, 2)) == 1
    assert count_2_31((4, 3, 2, 1)) == 0
    assert count_2_31((1, 2, 3, 4)) == 0
    assert count_31_2((3, 1, 2)) == 1
    assert count_31_2((1, 3, 2)) == 0


def test_genfun_wexc_class_examples():
    assert genfun_wexc_class((0, 1, 0)) == 2 + Q
    assert genfun_wexc_class((1, 1, 1)) == Poly.one()
    assert genfun_wexc_class(()) == Poly.one()


def test_genfun_descent_class_examples():
    assert genfun_descent_class({2}, 4) == 2 + 3 * Q
    assert genfun_descent_class(set(), 3) == Poly.one()
    with pytest.raises(ValueError):
        genfun_descent_class({3}, 3)
    with pytest.raises(ValueError):
        genfun_descent_class({0}, 3)


def test_s3_crossing_distribution():
    total = sum(
        (Poly.monomial(1, crossings(pi), 0, 0) for pi in perms_of(3)), Poly.zero()
    )
    assert total == 5 + Q


def test_q_eulerian_examples():
    assert q_eulerian(2, 3) == 3 + Q
    assert q_eulerian(1, 5) == Poly.one()
    assert q_eulerian(3, 3) == Poly.one()
    with pytest.raises(ValueError):
        q_eulerian(0, 3)
    with pytest.raises(ValueError):
        q_eulerian(4, 3)


def test_q_eulerian_matches_brute_force():
    for m in range(1, 7):
        dist = crossing_distribution_by_wexc(m)
        assert set(dist) == set(range(1, m + 1))
        for k in range(1, m + 1):
            assert dist[k] == q_eulerian(k, m)


def test_q_eulerian_specializations():
    for n in range(1, 9):
        assert sum(q_eulerian(k, n).eval_q(1) for k in range(1, n + 1)) == factorial(n)
        for k in range(1, n + 1):
            narayana = comb(n, k) * comb(n, k - 1) // n
            assert q_eulerian(k, n).eval_q(0) == narayana
            assert q_eulerian(k, n).eval_q(-1) == comb(n - 1, k - 1)


def test_descents_shift_weak_excedences():
    for m in range(1, 7):
        by_wexc = crossing_distribution_by_wexc(m)
        by_desc = pattern_distribution_by_descents(m)
        assert set(by_desc) == {k - 1 for k in by_wexc}
        for k, f in by_desc.items():
            assert f.eval_q(1) == by_wexc[k + 1].eval_q(1)


def test_global_equidistribution():
    for m in range(1, 7):
        cross = sum(crossing_distribution_by_wexc(m).values(), Poly.zero())
        pat = sum(pattern_distribution_by_descents(m).values(), Poly.zero())
        pat31 = sum(
            pattern_distribution_by_descents(m, count_31_2).values(), Poly.zero()
        )
        assert cross == pat
        assert cross == pat31
        assert cross == genfun_expanse(m).subs_ab_one()


def test_no_descent_convention_matches_classwise():
    report = descent_convention_report(3)
    assert set(report) == {
        (p, t)
        for p in ("2-31", "31-2")
        for t in ("identity", "reverse", "complement", "reverse-complement")
    }
    for ok, witness in report.values():
        assert not ok
        tau, lhs, rhs = witness
        assert genfun_wexc_class(tau).serialize() == lhs
        assert lhs != rhs

import pytest

from paseptab.ansatz import (
    AnsatzKind,
    TruncationError,
    ansatz_eval,
    build,
    check_relations,
    partition_function,
    qint,
    top_row,
)
from paseptab.poly import A, B, Poly, Q, parse
from paseptab.shapes import configurations, lambda_of_tau
from paseptab.tableaux import genfun_by_unrestricted, genfun_expanse, genfun_shape


def test_qint():
    assert qint(0) == Poly.zero()
    assert qint(1) == Poly.one()
    assert qint(3) == 1 + Q + Q**2
    with pytest.raises(ValueError):
        qint(-1)


def test_tableau_d_matrix():
    d = build(AnsatzKind.TABLEAU, "D", 4)
    for i in range(1, 5):
        for j in range(1, 5):
            expected = B if j == i + 1 else Poly.zero()
            assert d.entry(i, j) == expected


def test_tableau_e_matrix_explicit_4x4():
    e = build(AnsatzKind.TABLEAU, "E", 4)
    binv = Poly.monomial(1, 0, 0, -1)
    rows = [
        [A, 0, 0, 0],
        [A * binv, 1 + Q * A, 0, 0],
        [A * binv**2, (1 + 2 * Q * A) * binv, 1 + Q + Q**2 * A, 0],
        [
            A * binv**3,
            (1 + 3 * Q * A) * binv**2,
            (1 + 2 * Q + 3 * Q**2 * A) * binv,
            1 + Q + Q**2 + Q**3 * A,
        ],
    ]
    for i in range(1, 5):
        for j in range(1, 5):
            assert e.entry(i, j) == rows[i - 1][j - 1]
    # the subdiagonal carries an inverse power of b, not a positive one
    assert e.entry(2, 1) == Poly.monomial(1, 0, 1, -1)


def test_motzkin_matrices():
    d = build(AnsatzKind.MOTZKIN, "D", 3)
    e = build(AnsatzKind.MOTZKIN, "E", 3)
    assert d.entry(1, 1) == qint(1)
    assert d.entry(2, 3) == 1 + Q + Q**2
    assert d.entry(3, 3) == qint(3)
    assert d.entry(2, 1) == Poly.zero()
    assert e.entry(2, 1) == qint(1)
    assert e.entry(3, 2) == qint(2)
    assert e.entry(2, 2) == qint(2)
    assert e.entry(1, 2) == Poly.zero()


def test_entry_bounds():
    d = build(AnsatzKind.TABLEAU, "D", 3)
    with pytest.raises(IndexError):
        d.entry(0, 1)
    with pytest.raises(IndexError):
        d.entry(1, 4)
    with pytest.raises(ValueError):
        build(AnsatzKind.TABLEAU, "X", 3)


def test_relations_hold():
    for kind in AnsatzKind:
        for dim in (2, 5, 8):
            report = check_relations(kind, dim)
            assert report.ok, report.failure


def test_relations_detect_corruption():
    e = build(AnsatzKind.TABLEAU, "E", 5)
    bad = e.with_entry(3, 2, e.entry(3, 2) + Q)
    report = check_relations(AnsatzKind.TABLEAU, 5, e=bad)
    assert not report.ok
    assert "DE - qED" in report.failure or "WE" in report.failure
    d = build(AnsatzKind.MOTZKIN, "D", 5)
    bad_d = d.with_entry(2, 2, d.entry(2, 2) + 1)
    report = check_relations(AnsatzKind.MOTZKIN, 5, d=bad_d)
    assert not report.ok


def test_ansatz_eval_example_f3():
    f = ansatz_eval(AnsatzKind.TABLEAU, (0, 1, 0))
    assert f == A**2 + A * B + Q * A**2 * B
    assert f.serialize() == "a^2 + a*b + q*a^2*b"


def test_ansatz_eval_empty_and_singleton():
    assert ansatz_eval(AnsatzKind.TABLEAU, ()) == Poly.one()
    assert ansatz_eval(AnsatzKind.TABLEAU, (1,)) == B
    assert ansatz_eval(AnsatzKind.TABLEAU, (0,)) == A
    assert ansatz_eval(AnsatzKind.MOTZKIN, ()) == Poly.one()
    assert ansatz_eval(AnsatzKind.MOTZKIN, (1,)) == Poly.one()


def test_partition_function_z3_byte_exact():
    z3 = partition_function(AnsatzKind.TABLEAU, 3)
    golden = (
        "a^3 + 2*a^2 + 2*a + a^2*b + 2*a*b + 2*b + a*b^2 + 2*b^2 + b^3"
        " + q*a^2 + q*a^2*b + 4*q*a*b + q*a*b^2 + q*b^2"
        " + q^2*a^2*b + q^2*a*b^2"
    )
    assert z3.serialize() == golden
    assert z3 == parse(golden)
    assert z3.evaluate(1, 1, 1) == 24


def test_partition_function_is_sum_of_weights():
    for n in range(0, 7):
        total = sum(
            (ansatz_eval(AnsatzKind.TABLEAU, tau) for tau in configurations(n)),
            Poly.zero(),
        )
        assert total == partition_function(AnsatzKind.TABLEAU, n)
        assert total == genfun_expanse(n + 1)


def test_weights_match_enumeration():
    for n in range(0, 6):
        for tau in configurations(n):
            assert ansatz_eval(AnsatzKind.TABLEAU, tau) == genfun_shape(
                lambda_of_tau(tau)
            )


def test_truncation_default_is_stable():
    for n in range(0, 8):
        for tau in ((0,) * n, (1,) * n, tuple((i % 2 for i in range(n)))):
            base = ansatz_eval(AnsatzKind.TABLEAU, tau)
            assert ansatz_eval(AnsatzKind.TABLEAU, tau, dim=n + 4) == base
            assert ansatz_eval(AnsatzKind.TABLEAU, tau, dim=n + 7) == base


def test_truncation_too_small_is_refused():
    with pytest.raises(TruncationError):
        ansatz_eval(AnsatzKind.TABLEAU, (0, 1, 0), dim=4)
    with pytest.raises(TruncationError):
        partition_function(AnsatzKind.TABLEAU, 3, dim=3)
    with pytest.raises(TruncationError):
        top_row((0, 1, 0), dim=2)


def test_top_row_refines_by_unrestricted_rows():
    for tau in [(0, 1, 0), (1, 1, 0, 0), (0, 0), (1, 0, 1)]:
        shape = lambda_of_tau(tau)
        refined = genfun_by_unrestricted(shape)
        row = top_row(tau)
        for i, p in enumerate(row):
            expected = refined[i] if i < len(refined) else Poly.zero()
            assert p == expected


def test_motzkin_equals_tableau_at_ab_one():
    for n in range(0, 6):
        for tau in configurations(n):
            lhs = ansatz_eval(AnsatzKind.MOTZKIN, tau)
            rhs = ansatz_eval(AnsatzKind.TABLEAU, tau).subs_ab_one()
            assert lhs == rhs

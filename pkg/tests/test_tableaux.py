from math import factorial

import pytest

from paseptab.poly import A, B, Poly, Q
from paseptab.shapes import Diagram, lambda_of_tau, shapes_of_expanse
from paseptab.tableaux import (
    InvalidTableauError,
    PermutationTableau,
    ShapeMismatchError,
    enumerate_tableaux,
    genfun_by_unrestricted,
    genfun_expanse,
    genfun_shape,
    is_valid,
    stats,
    tableau_from_text,
)


def test_is_valid_examples():
    shape = Diagram((2, 1))
    assert is_valid(shape, ((1, 1), (0,)))
    assert is_valid(shape, ((0, 1), (1,)))
    # a 0 with a 1 above it and a 1 to its left
    assert not is_valid(Diagram((2, 2)), ((1, 1), (1, 0)))
    # a column with no 1
    assert not is_valid(Diagram((1,)), ((0,),))
    # 1 to the right of a restricted 0 is fine
    assert is_valid(Diagram((2, 2)), ((1, 1), (0, 1)))


def test_is_valid_dimension_mismatch():
    with pytest.raises(ShapeMismatchError):
        is_valid(Diagram((2, 1)), ((1, 1),))
    with pytest.raises(ShapeMismatchError):
        is_valid(Diagram((2, 1)), ((1, 1), (0, 1)))
    with pytest.raises(ValueError):
        is_valid(Diagram((1,)), ((2,),))


def test_stats_small():
    t = PermutationTableau(Diagram((2, 1)), ((1, 1), (1,)))
    s = stats(t)
    assert (s.wt, s.f, s.u) == (1, 2, 1)
    t = PermutationTableau(Diagram((0, 0)), ((), ()))
    s = stats(t)
    assert (s.wt, s.f, s.u) == (0, 0, 1)
    t = PermutationTableau(Diagram((0,)), ((),))
    assert stats(t) == stats(t)
    assert stats(t).u == 0


def test_stats_rejects_invalid():
    t = PermutationTableau(Diagram((1,)), ((0,),))
    with pytest.raises(InvalidTableauError):
        stats(t)


# a larger worked example: shape (10,9,9,8,5,2) holds 19 ones over 10
# columns (wt = 9), 5 ones in the top row (f = 5), unrestricted rows 1, 2,
# and 6 (u = 2), and expanse 6 + 10 = 16
_BIG = PermutationTableau(
    Diagram((10, 9, 9, 8, 5, 2)),
    (
        (0, 1, 1, 0, 0, 1, 0, 1, 0, 1),
        (1, 1, 1, 1, 0, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 1),
        (0, 0, 0, 1, 1),
        (1, 1),
    ),
)


def test_stats_large_example():
    assert is_valid(_BIG.shape, _BIG.rows)
    s = stats(_BIG)
    assert s.wt == 9
    assert s.f == 5
    assert s.u == 2
    assert _BIG.shape.expanse == 16


def test_text_round_trip():
    text = _BIG.to_text()
    assert tableau_from_text(text) == _BIG
    t = PermutationTableau(Diagram((2, 0)), ((1, 1), ()))
    assert t.to_text() == "2,0\n11\n\n"
    assert tableau_from_text(t.to_text()) == t
    with pytest.raises(ShapeMismatchError):
        tableau_from_text("2,1\n11\n")
    with pytest.raises(ShapeMismatchError):
        tableau_from_text("2,1\n1\n0\n")


def test_enumerate_shape_21():
    tableaux = list(enumerate_tableaux(Diagram((2, 1))))
    assert len(tableaux) == 3
    monomials = {
        (s.wt, s.f, s.u) for s in (stats(t) for t in tableaux)
    }
    assert monomials == {(0, 2, 0), (0, 1, 1), (1, 2, 1)}
    # deterministic order: fillings row-major, 0 before 1
    assert [t.rows for t in tableaux] == [
        ((0, 1), (1,)),
        ((1, 1), (0,)),
        ((1, 1), (1,)),
    ]


def test_enumerate_is_exactly_the_valid_fillings():
    from itertools import product

    for shape in [Diagram((2, 2)), Diagram((3, 1)), Diagram((2, 1, 1)),
                  Diagram((2, 1, 0))]:
        cells = sum(shape.parts)
        brute = []
        for bits in product((0, 1), repeat=cells):
            rows = []
            i = 0
            for p in shape.parts:
                rows.append(tuple(bits[i : i + p]))
                i += p
            if is_valid(shape, rows):
                brute.append(tuple(rows))
        assert sorted(brute) == sorted(t.rows for t in enumerate_tableaux(shape))


def test_genfun_shape_examples():
    assert genfun_shape(Diagram((2, 1))) == A**2 + A * B + Q * A**2 * B
    assert genfun_shape(Diagram((1, 1))) == A + B + Q * A * B
    assert genfun_shape(Diagram((1, 0))) == A * B
    assert genfun_shape(Diagram((0,))) == Poly.one()
    assert genfun_shape(Diagram((0, 0))) == B
    assert genfun_shape(Diagram((2, 2))) == (
        A + A**2 + B + Q * (A**2 + 2 * A * B) + Q**2 * A**2 * B
    )


def test_genfun_expanse_counts_factorially():
    for n in range(1, 9):
        assert genfun_expanse(n).evaluate(1, 1, 1) == factorial(n)
    with pytest.raises(ValueError):
        genfun_expanse(0)


def test_genfun_expanse_small():
    assert genfun_expanse(1) == Poly.one()
    assert genfun_expanse(2) == A + B


def test_genfun_by_unrestricted():
    parts = genfun_by_unrestricted(Diagram((2, 1)))
    assert parts == [A**2, A * B + Q * A**2 * B]
    assert genfun_by_unrestricted(Diagram((0,))) == [Poly.one()]
    assert genfun_by_unrestricted(Diagram((0, 0))) == [Poly.zero(), B]
    for shape in shapes_of_expanse(6):
        assert sum(genfun_by_unrestricted(shape), Poly.zero()) == genfun_shape(
            shape
        )


def test_empty_row_law():
    # appending an empty row forbids one unrestricted row count and shifts b
    for n in range(1, 7):
        for shape in shapes_of_expanse(n):
            taller = Diagram(shape.parts + (0,))
            lifted = genfun_by_unrestricted(taller)
            base = genfun_by_unrestricted(shape)
            assert lifted[0] == Poly.zero()
            for i, part in enumerate(base):
                assert lifted[i + 1] == B * part


def test_column_transfer_law():
    # prepending a full-height column: row i of the new first-column choices
    # transfers F^s of the old shape through the matrix entries h(r, s)
    from paseptab.ansatz import AnsatzKind, build

    for n in range(1, 7):
        for shape in shapes_of_expanse(n):
            k = shape.rows
            wider = Diagram(tuple(p + 1 for p in shape.parts))
            base = genfun_by_unrestricted(shape)
            lifted = genfun_by_unrestricted(wider)
            e = build(AnsatzKind.TABLEAU, "E", k + 1)
            for r in range(1, k + 1):
                expected = Poly.zero()
                for s in range(r, k + 1):
                    expected = expected + e.entry(s, r) * base[s - 1]
                assert lifted[r - 1] == expected


def test_genfun_shape_matches_wexc_class_at_ab_one():
    from paseptab.perms import genfun_wexc_class
    from paseptab.shapes import configurations

    for n in range(0, 6):
        for tau in configurations(n):
            lhs = genfun_shape(lambda_of_tau(tau)).subs_ab_one()
            assert lhs == genfun_wexc_class(tau)

import itertools

import pytest

from jetfibers.an import (
    Ladder,
    an_table,
    component_dimension,
    component_ideal,
    containment,
    decompose_intersection,
    intersection_dimension,
    ladder,
    maximal_pairs,
    pair_ideal,
    table_csv,
    table_header,
    table_text,
    verify_containment_criterion,
    verify_decomposition,
)
from jetfibers import groebner as gb
from jetfibers.poly import parse_polynomial


def P(text):
    return parse_polynomial(text)


# ---------------------------------------------------------------------------
# ladders


def test_ladder_zero():
    assert ladder(0, 0, 0).generators == ()


def test_ladder_unrolled():
    assert [str(g) for g in ladder(2, 2, 1).generators] == [
        "x0",
        "x1",
        "y0",
        "y1",
        "z0",
    ]


def test_ladder_generator_count():
    for p, q, r in itertools.product(range(4), repeat=3):
        assert len(Ladder(p, q, r).generators()) == p + q + r


def test_ladder_from_theorem_parameters():
    # n=3, i=1, j=3 merges to the (3,3,1) ladder
    n, i, j = 3, 1, 3
    assert Ladder(j, n + 1 - i, 1).label == "L(3,3,1)"


# ---------------------------------------------------------------------------
# component ideals


def test_component_at_base_order_is_the_ladder():
    comp = component_ideal(3, 3, 2)
    assert [str(g) for g in comp.reduced.generators] == [
        "x0",
        "x1",
        "y0",
        "y1",
        "z0",
    ]


def test_component_reduced_presentation():
    comp = component_ideal(2, 4, 1)
    got = [str(g) for g in comp.reduced.generators]
    assert got[:4] == ["x0", "y0", "y1", "z0"]
    assert got[4:] == [str(P("x1*y2 - z1^3")), str(P("x2*y2 + x1*y3 - 3*z1^2*z2"))]


def test_component_presentations_agree_small_grid():
    # the constructor itself asserts mutual membership
    for n in range(1, 5):
        for m in range(n, n + 5):
            for l in range(1, n + 1):
                component_ideal(n, m, l)


def test_component_bounds():
    with pytest.raises(ValueError):
        component_ideal(2, 4, 0)
    with pytest.raises(ValueError):
        component_ideal(2, 1, 1)


# ---------------------------------------------------------------------------
# decompositions


def test_case_a():
    dec = decompose_intersection(3, 3, 1, 3)
    assert dec.case == "a" and dec.count == 1
    assert dec.components[0].label == "L(3,3,1)"


def test_case_b():
    dec = decompose_intersection(3, 4, 1, 3)
    assert dec.case == "b" and dec.count == 1
    assert dec.components[0].label == "L(3,3,2)"


def test_case_c():
    dec = decompose_intersection(3, 5, 1, 2)
    assert dec.case == "c" and dec.count == 2
    assert [d.label for d in dec.components] == ["L(2,4,2)", "L(3,3,2)"]


def test_case_d():
    dec = decompose_intersection(3, 8, 1, 2)
    assert dec.case == "d" and dec.count == 4
    assert [d.label for d in dec.components] == [
        "L(2,6,2)+f[8..8]",
        "L(3,5,2)+f[8..8]",
        "L(4,4,2)+f[8..8]",
        "L(5,3,2)+f[8..8]",
    ]


def test_guards_partition_and_counts():
    for n in range(2, 7):
        for m in range(n, 2 * n + 5):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    dec = decompose_intersection(n, m, i, j)
                    applicable = {
                        "a": m == n,
                        "b": 1 <= m - n <= j - i,
                        "c": j - i <= m - n and m < 2 * n + 2,
                        "d": m >= 2 * n + 2,
                    }
                    assert applicable[dec.case]
                    expected_count = {
                        "a": 1,
                        "b": 1,
                        "c": m - n - (j - i) + 1,
                        "d": n - (j - i) + 2,
                    }[dec.case]
                    assert dec.count == expected_count, (n, m, i, j)


def test_component_count_monotone_in_gap():
    for n in (3, 4, 5):
        for m in range(n, 2 * n + 5):
            counts = [
                decompose_intersection(n, m, 1, 1 + gap).count
                for gap in range(1, n)
            ]
            assert counts == sorted(counts, reverse=True)


def test_invalid_parameters():
    with pytest.raises(ValueError):
        decompose_intersection(1, 1, 1, 1)
    with pytest.raises(ValueError):
        decompose_intersection(3, 2, 1, 2)
    with pytest.raises(ValueError):
        decompose_intersection(3, 5, 2, 2)


# ---------------------------------------------------------------------------
# dimensions


def test_dimension_examples():
    assert intersection_dimension(3, 3, 1, 3) == 5
    assert intersection_dimension(3, 4, 1, 3) == 7
    assert intersection_dimension(3, 6, 1, 2) == 12


def test_component_dimension():
    assert component_dimension(3, 3) == 7
    assert component_dimension(3, 7) == 15
    for n in (1, 2, 5):
        assert component_dimension(n, n) == 2 * n + 1


def test_descriptor_dimensions_match_formula():
    for n in (2, 3, 4):
        for m in range(n, 2 * n + 4):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    dec = decompose_intersection(n, m, i, j)
                    for d in dec.components:
                        assert d.dimension(m) == dec.dimension, (n, m, i, j)


def test_boundary_regimes_agree():
    # at m - n = j - i the single thickened ladder has the chain dimension
    n, i, j = 4, 1, 3
    m = n + (j - i)
    assert intersection_dimension(n, m, i, j) == 2 * m
    assert decompose_intersection(n, m, i, j).count == 1


# ---------------------------------------------------------------------------
# containment and maximal pairs


def test_containment_criterion_examples():
    assert containment(3, 4, 1, 3, 1, 2) is True
    assert containment(3, 4, 1, 2, 2, 3) is False
    assert containment(3, 4, 1, 2, 1, 2) is True


def test_maximal_pairs():
    assert maximal_pairs(3) == ((1, 2), (2, 3))
    assert maximal_pairs(1) == ()
    assert maximal_pairs(5) == ((1, 2), (2, 3), (3, 4), (4, 5))


def test_containment_cross_check_small():
    rep = verify_containment_criterion(2, 3)
    assert rep.outcome == gb.VERIFIED


# ---------------------------------------------------------------------------
# engine verification


def test_verify_case_a():
    rep = verify_decomposition(2, 2, 1, 2)
    assert rep.outcome == gb.VERIFIED


def test_verify_case_b():
    rep = verify_decomposition(3, 4, 1, 3)
    assert rep.outcome == gb.VERIFIED


def test_verify_case_c_two_components():
    rep = verify_decomposition(3, 5, 1, 2)
    assert rep.outcome == gb.VERIFIED
    cases = [s["claim"] for s in rep.certificate["subchecks"]]
    assert any("witnesses separate" in c for c in cases)


def test_verify_case_d_small():
    rep = verify_decomposition(2, 6, 1, 2)
    assert rep.outcome == gb.VERIFIED
    tails = [
        s
        for s in rep.certificate["subchecks"]
        if "reindexed jet ideal" in s["claim"]
    ]
    assert len(tails) == 3
    assert all(t["outcome"] == gb.VERIFIED for t in tails)


def test_pair_ideal_shape():
    J = pair_ideal(2, 4, 1, 2)
    assert len(J.generators) == 2 + 2 + 1 + 5
    assert J.label == "J(n2,m4;1,2)"


# ---------------------------------------------------------------------------
# the table


def test_table_row_values():
    rows = an_table(3, range(3, 8))
    assert [r.cells() for r in rows] == [
        (3, 7, 6, 5, 5, 6, 7, 1, 1),
        (4, 9, 8, 7, 6, 7, 8, 1, 1),
        (5, 11, 10, 10, 7, 8, 8, 2, 1),
        (6, 13, 12, 12, 8, 9, 9, 3, 2),
        (7, 15, 14, 14, 9, 10, 10, 4, 3),
    ]


def test_table_csv_bytes():
    csv = table_csv(3, an_table(3, [3, 4]))
    assert csv == (
        "m,dim_Z,dim_Z12,dim_Z13,codim_Z,codim_Z12,codim_Z13,N12,N13\n"
        "3,7,6,5,5,6,7,1,1\n"
        "4,9,8,7,6,7,8,1,1\n"
    )


def test_table_text_aligned():
    text = table_text(3, an_table(3, [3]))
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[0].split() == list(table_header(3))


def test_table_small_n_columns():
    assert table_header(2) == ("m", "dim_Z", "dim_Z12", "codim_Z", "codim_Z12", "N12")
    assert table_header(1) == ("m", "dim_Z", "codim_Z")
    rows = an_table(1, [1, 2])
    assert [r.cells() for r in rows] == [(1, 3, 3), (2, 5, 4)]

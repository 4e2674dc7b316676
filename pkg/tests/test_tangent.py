"""Tangent characters, chamber splits, Euler classes."""

import pytest

from bowvariety import algebra, brane, errors, tangent, tie
from bowvariety.algebra import h, t
from conftest import EXAMPLE_3BLUE, POINT_DIAGRAM, TSTAR_P1, admissible_diagrams


def w(i, j, m=0, n=3):
    """The weight t_i - t_j + m*h over n variables."""
    return (t(i, n) - t(j, n)).shift_h(m)


def weight_set(char):
    return set(char.weights())


def by_tie_sets(diagram):
    d = brane.parse(diagram)
    return {
        frozenset(map(tuple, t_.named_ties())): t_
        for t_ in tie.enumerate_tie_diagrams(d)
    }


def test_tstar_p1_tangents():
    points = by_tie_sets(TSTAR_P1)
    first = points[frozenset({("V2", "U1"), ("U1", "V1")})]
    second = points[frozenset({("V2", "U2"), ("U2", "V1")})]
    assert weight_set(tangent.tangent_character(first).char) == {
        w(1, 2, n=2),
        w(2, 1, 1, n=2),
    }
    assert weight_set(tangent.tangent_character(second).char) == {
        w(2, 1, n=2),
        w(1, 2, 1, n=2),
    }


def test_point_diagram_is_zero_dimensional():
    d = brane.parse(POINT_DIAGRAM)
    (t_,) = tie.enumerate_tie_diagrams(d)
    assert not tangent.tangent_character(t_).char
    assert tangent.dimension(d) == 0


def test_three_blue_tangent_table():
    """The five four-weight multisets of the 3-red/3-blue example."""
    expected = {
        frozenset({("V3", "U1"), ("V2", "U2"), ("U1", "V1"), ("U2", "V1")}): {
            w(3, 1, 1),
            w(3, 2, 1),
            w(1, 3),
            w(2, 3),
        },
        frozenset({("V3", "U1"), ("V2", "U3"), ("U1", "V1"), ("U3", "V1")}): {
            w(2, 1, 1),
            w(2, 3, 1),
            w(1, 2),
            w(3, 2),
        },
        frozenset(
            {
                ("V3", "U1"),
                ("U1", "V2"),
                ("V2", "U2"),
                ("V2", "U3"),
                ("U2", "V1"),
                ("U3", "V1"),
            }
        ): {w(2, 1), w(3, 1), w(1, 2, 1), w(1, 3, 1)},
        frozenset({("V3", "U2"), ("V2", "U3"), ("U2", "V1"), ("U3", "V1")}): {
            w(2, 1, -1),
            w(1, 2, 2),
            w(2, 3),
            w(3, 2, 1),
        },
        frozenset({("V3", "U3"), ("V2", "U2"), ("U2", "V1"), ("U3", "V1")}): {
            w(3, 1, -1),
            w(1, 3, 2),
            w(3, 2),
            w(2, 3, 1),
        },
    }
    points = by_tie_sets(EXAMPLE_3BLUE)
    assert set(points) == set(expected)
    for key, t_ in points.items():
        got = weight_set(tangent.tangent_character(t_).char)
        assert got == expected[key], key


def test_three_blue_dimension():
    assert tangent.dimension(brane.parse(EXAMPLE_3BLUE)) == 4
    assert tangent.dimension(brane.parse(TSTAR_P1)) == 2


def test_tangent_invariants_on_sweep():
    for d in admissible_diagrams(5, 2):
        points = tie.enumerate_tie_diagrams(d)
        if not points:
            continue
        dims = set()
        for k, t_ in enumerate(points, start=1):
            # tangent_character raises on any violated invariant
            tc = tangent.tangent_character(t_, f"D{k}")
            char = tc.char
            assert char.is_effective()
            assert char.involution_image() == char
            assert all(w.difference_indices() for w in char.terms)
            dims.add(char.total())
        assert len(dims) == 1


def test_chamber_split_partitions():
    d = brane.parse(EXAMPLE_3BLUE)
    for k, t_ in enumerate(tie.enumerate_tie_diagrams(d), start=1):
        tc = tangent.tangent_character(t_, f"D{k}")
        for pi in ((1, 2, 3), (3, 2, 1), (2, 3, 1)):
            split = tangent.chamber_split(tc, pi)
            assert split.plus + split.minus == tc.char
            # symplectic involution exchanges the two halves
            assert split.plus.total() == split.minus.total() == 2
            assert split.plus.involution_image() == split.minus


def test_chamber_split_golden():
    points = by_tie_sets(TSTAR_P1)
    t_ = points[frozenset({("V2", "U1"), ("U1", "V1")})]
    tc = tangent.tangent_character(t_)
    split = tangent.chamber_split(tc, (1, 2))
    assert weight_set(split.plus) == {w(1, 2, n=2)}
    assert weight_set(split.minus) == {w(2, 1, 1, n=2)}
    flipped = tangent.chamber_split(tc, (2, 1))
    assert weight_set(flipped.plus) == {w(2, 1, 1, n=2)}


def test_chamber_split_rejects_degenerate_weights():
    tc = tangent.TangentCharacter(
        "X", algebra.Character.from_weights(2, [h(2)])
    )
    with pytest.raises(errors.DegenerateWeight):
        tangent.chamber_split(tc, (1, 2))


def test_euler_class():
    char = algebra.Character.from_weights(
        2, [t(1, 2) - t(2, 2), t(2, 2) - t(1, 2) + h(2)]
    )
    e = tangent.euler_class(char)
    assert e.expand() == algebra.poly_parse("(t1-t2)*(t2-t1+h)", 2)


def test_tangent_to_json():
    d = brane.parse(TSTAR_P1)
    t_ = tie.enumerate_tie_diagrams(d)[0]
    blob = tangent.tangent_character(t_, "D1").to_json()
    assert blob["point"] == "D1"
    assert sorted(
        (tuple(w["a"]), w["m"], w["mult"]) for w in blob["weights"]
    ) == sorted([((1, -1), 0, 1), ((-1, 1), 1, 1)])

"""Butterfly diagrams, fixed-point matrices, and the verification checks."""

from fractions import Fraction

import pytest

from bowvariety import algebra, brane, butterfly, linalg, tie
from conftest import EXAMPLE_3BLUE, POINT_DIAGRAM, TSTAR_P1

BIG_DIAGRAM = "0/1/2/3\\3/5\\4/2\\2/0"
BIG_TIES = [
    (2, 6),
    (3, 4),
    (1, 6),
    (5, 6),
    (5, 8),
    (4, 7),
    (6, 7),
    (6, 9),
    (8, 9),
]


def big_tie_diagram():
    d = brane.parse(BIG_DIAGRAM)
    t = tie.TieDiagram(d, frozenset(BIG_TIES))
    assert tie.is_valid(t).ok
    return t


def test_cover_counts_golden():
    t = big_tie_diagram()
    assert butterfly.cover_counts(t, "U2") == (0, 1, 2, 2, 2, 3, 2, 1, 1, 0)
    assert butterfly.cover_counts(t, 2) == butterfly.cover_counts(t, "U2")


def test_column_bottoms_golden():
    t = big_tie_diagram()
    cb = butterfly.column_bottoms(t, "U2")
    assert cb[1:9] == (-1, -1, 0, 0, 0, 0, 1, 1)


def test_blue_index_errors():
    t = big_tie_diagram()
    with pytest.raises(KeyError):
        butterfly.cover_counts(t, "V1")
    with pytest.raises(KeyError):
        butterfly.cover_counts(t, 9)


def test_butterfly_columns_match_counts():
    t = big_tie_diagram()
    bf = butterfly.build_butterfly(t, "U2")
    for j in range(1, 11):
        col = bf.column(j)
        assert len(col) == bf.cover_counts[j - 1]
        assert all(v in bf.vertices for v in col)
    assert len(bf.vertices) == sum(bf.cover_counts)


def test_butterfly_column_at_own_blue_starts_at_zero():
    for t in tie.enumerate_tie_diagrams(brane.parse(EXAMPLE_3BLUE)):
        for u in range(1, 4):
            bf = butterfly.build_butterfly(t, u)
            assert bf.column_bottoms[bf.J - 1] == 0


def test_butterfly_green_arrows():
    d = brane.parse(POINT_DIAGRAM)
    (t,) = tie.enumerate_tie_diagrams(d)
    bf = butterfly.build_butterfly(t, 1)
    greens = [a for a in bf.arrows if a[0] == "green"]
    # d_{U^-} = 0 < d_{U^+} = 1: only the outgoing green arrow exists
    assert greens == [("green", (1, 1), butterfly.EXTERNAL)]


def test_butterfly_json_and_ascii_smoke():
    t = big_tie_diagram()
    bf = butterfly.build_butterfly(t, "U2")
    blob = bf.to_json()
    assert blob["blue"] == "U2"
    assert blob["coverCounts"] == [0, 1, 2, 2, 2, 3, 2, 1, 1, 0]
    art = butterfly.render_ascii(bf)
    assert "U2" in art and "o" in art


def test_assemble_tstar_p1_matrices():
    # both fixed points: every A is the 1x1 identity, every b vanishes, and
    # exactly one blue line (the one carrying the ties) has a = unit vector
    d = brane.parse(TSTAR_P1)
    for t in tie.enumerate_tie_diagrams(d):
        f = butterfly.assemble_fixed_point(t)
        assert [f.dim(j) for j in (1, 2, 3, 4, 5)] == [0, 1, 1, 1, 0]
        units = 0
        for ops in f.per_blue.values():
            assert ops["A"].data == [[Fraction(1)]]
            assert ops["b"].is_zero()
            if not ops["a"].is_zero():
                assert ops["a"].data == [[Fraction(1)]]
                units += 1
        assert units == 1


def test_fiber_character_point_diagram():
    d = brane.parse(POINT_DIAGRAM)
    (t,) = tie.enumerate_tie_diagrams(d)
    assert butterfly.fiber_character(t, 1).total() == 0
    char = butterfly.fiber_character(t, 2)
    assert char.weights() == [algebra.t(1, 1).shift_h(1)]


def test_fiber_characters_match_labels():
    # the fiber character just reads off the (u, height) labels of the basis
    for t in tie.enumerate_tie_diagrams(brane.parse(EXAMPLE_3BLUE)):
        f = butterfly.assemble_fixed_point(t)
        for j, labels in f.bases.items():
            char = butterfly.fiber_character(t, j)
            expect = algebra.Character.from_weights(
                3, [algebra.t(u, 3).shift_h(jj) for u, _i, jj in labels]
            )
            assert char == expect
            assert char.total() == t.base.label(j)


def test_verify_small_diagrams_all_pass():
    for s in (EXAMPLE_3BLUE, TSTAR_P1, POINT_DIAGRAM, "0/1/2\\1\\0"):
        d = brane.parse(s)
        for t in tie.enumerate_tie_diagrams(d):
            f = butterfly.assemble_fixed_point(t)
            report = butterfly.verify_fixed_point(f)
            assert report.ok, f"{s}: {report.render()}"


def test_verify_big_diagram():
    f = butterfly.assemble_fixed_point(big_tie_diagram())
    report = butterfly.verify_fixed_point(f, stability_cutoff=12)
    stability = report.check("stability")
    for check in report.checks:
        if check is stability and check.skipped:
            continue
        assert check.ok, report.render()


def test_verify_detects_broken_moment_map():
    d = brane.parse(TSTAR_P1)
    t = tie.enumerate_tie_diagrams(d)[0]
    f = butterfly.assemble_fixed_point(t)
    f.per_blue["U1"]["Bplus"][0, 0] = Fraction(5)
    report = butterfly.verify_fixed_point(f)
    assert not report.check("moment-map").ok


def test_verify_detects_broken_grading():
    d = brane.parse(EXAMPLE_3BLUE)
    t = tie.enumerate_tie_diagrams(d)[2]
    f = butterfly.assemble_fixed_point(t)
    # connect two basis lines with different labels through A_U2
    ops = f.per_blue["U2"]["A"]
    assert ops.rows == ops.cols == 2
    ops[0, 1] = ops[0, 1] + 7
    report = butterfly.verify_fixed_point(f)
    assert not report.check("grading").ok


def test_nilpotency_skipped_on_unseparated_diagrams():
    d = brane.parse(POINT_DIAGRAM)
    (t,) = tie.enumerate_tie_diagrams(d)
    report = butterfly.verify_fixed_point(butterfly.assemble_fixed_point(t))
    assert report.check("nilpotency").skipped


def test_fixed_point_json_entries_are_exact():
    d = brane.parse(TSTAR_P1)
    t = tie.enumerate_tie_diagrams(d)[0]
    blob = butterfly.assemble_fixed_point(t).to_json()
    assert blob["perBlue"]["U1"]["A"] == [["1"]]
    assert blob["tie"]["diagram"] == TSTAR_P1


# ---------------------------------------------------------------------------
# the exact linear algebra backing the checks


def test_mat_shapes_and_products():
    a = linalg.Mat(2, 3, [[1, 2, 0], [0, 1, 1]])
    b = linalg.Mat(3, 2, [[1, 0], [0, 1], [1, 1]])
    p = a * b
    assert (p.rows, p.cols) == (2, 2)
    assert p.data == [[Fraction(1), Fraction(2)], [Fraction(1), Fraction(2)]]
    z = linalg.Mat.zero(0, 3) * linalg.Mat.zero(3, 2)
    assert (z.rows, z.cols) == (0, 2) and z.is_zero()


def test_rank_kernel_image():
    a = linalg.Mat(2, 3, [[1, 2, 3], [2, 4, 6]])
    assert a.rank() == 1
    ker = linalg.kernel_basis(a)
    assert len(ker) == 2
    for v in ker:
        assert all(x == 0 for x in a.apply(v))
    assert len(linalg.image_basis(a)) == 1


def test_subspace_operations():
    e1, e2, e3 = [1, 0, 0], [0, 1, 0], [0, 0, 1]
    total = linalg.span_sum(3, [e1, e2], [e2, e3])
    assert linalg.span_dim(total) == 3
    meet = linalg.intersect([e1, e2], [e2, e3], 3)
    assert linalg.span_dim(meet) == 1
    assert linalg.span_equal(meet, [e2])

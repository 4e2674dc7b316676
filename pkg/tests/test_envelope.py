"""Attraction data loading, the envelope recursion, pairing checks."""

import json

import pytest

from bowvariety import algebra, envelope, errors


def load_fixture(fixtures_dir, name):
    return envelope.load_attraction_data(fixtures_dir / name)


def fixture_dict(fixtures_dir, name):
    with open(fixtures_dir / name) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# loading and schema validation


def test_load_three_blue_fixture(fixtures_dir):
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    assert data.order == ["D1", "D2", "D3", "D4", "D5"]
    assert data.dim == 4
    assert data.chamber == (3, 2, 1)
    assert data.nvars == 3
    # the loader fills in structural zeros
    assert data.restriction("D1", "D5").is_zero()


def test_load_accepts_json_text_and_dicts(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    from_dict = envelope.load_attraction_data(raw)
    from_text = envelope.load_attraction_data(json.dumps(raw))
    assert from_dict.order == from_text.order == ["P2", "P1"]


def test_schema_missing_key(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    del raw["order"]
    with pytest.raises(errors.SchemaError):
        envelope.load_attraction_data(raw)


def test_schema_bad_chamber(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    raw["chamber"] = [1, 1]
    with pytest.raises(errors.SchemaError):
        envelope.load_attraction_data(raw)


def test_schema_invalid_point(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    raw["points"][0]["ties"] = [["V2", "U1"]]
    with pytest.raises(errors.SchemaError):
        envelope.load_attraction_data(raw)


def test_schema_unknown_point_in_restrictions(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    raw["restrictions"]["P1"]["P9"] = "h"
    with pytest.raises(errors.SchemaError):
        envelope.load_attraction_data(raw)


def test_triangularity_violation(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    raw["restrictions"]["P2"]["P1"] = "t1-t2"  # P1 is above P2 in this order
    with pytest.raises(errors.TriangularityViolation):
        envelope.load_attraction_data(raw)


def test_diagonal_mismatch(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    raw["restrictions"]["P1"]["P1"] = "t1-t2"
    with pytest.raises(errors.DiagonalMismatch):
        envelope.load_attraction_data(raw)


def test_homogeneity_violation(fixtures_dir):
    raw = fixture_dict(fixtures_dir, "tstar_p1_chamber12.json")
    raw["restrictions"]["P1"]["P2"] = "t1-t2+h^2"
    with pytest.raises(errors.HomogeneityViolation):
        envelope.load_attraction_data(raw)


# ---------------------------------------------------------------------------
# the recursion


def coeff_map(stab):
    return {q: c for q, c in stab.coeffs.items() if c}


def test_three_blue_envelopes(fixtures_dir):
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    stabs = {s.point: s for s in envelope.stable_envelopes(data)}
    assert coeff_map(stabs["D1"]) == {"D1": 1}
    assert coeff_map(stabs["D2"]) == {"D2": 1, "D1": 1}
    assert coeff_map(stabs["D3"]) == {"D3": 1, "D2": 1}
    assert coeff_map(stabs["D4"]) == {"D4": 1, "D3": 1, "D2": 1, "D1": 1}
    assert coeff_map(stabs["D5"]) == {"D5": 1, "D4": 1, "D2": -1}


def test_three_blue_restriction_golden(fixtures_dir):
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    stabs = {s.point: s for s in envelope.stable_envelopes(data)}
    assert stabs["D3"].restrictions["D1"] == algebra.poly_parse(
        "h*(t3-t2+h)", 3
    )


def test_normalization_diagonal(fixtures_dir):
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    for s in envelope.stable_envelopes(data):
        assert s.restrictions[s.point] == data.minus_euler[s.point].expand()


def test_smallness_divisibility(fixtures_dir):
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    for s in envelope.stable_envelopes(data):
        for q in data.order:
            if data.rank(q) < data.rank(s.point):
                assert s.restrictions[q].mod_h().is_zero()
            if data.rank(q) > data.rank(s.point):
                assert s.restrictions[q].is_zero()


def test_order_refinement_independence(fixtures_dir):
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    base = [coeff_map(s) for s in envelope.stable_envelopes(data)]
    for i in range(len(data.order) - 1):
        p, q = data.order[i], data.order[i + 1]
        if not data.restrictions[q][p].is_zero():
            continue  # comparable, the swap would break triangularity
        swapped = list(data.order)
        swapped[i], swapped[i + 1] = q, p
        redone = [coeff_map(s) for s in envelope.stable_envelopes(data, swapped)]
        assert redone == base


def test_stable_envelopes_rejects_foreign_order(fixtures_dir):
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    with pytest.raises(ValueError):
        envelope.stable_envelopes(data, order=["D1", "D2"])


def test_stab_to_json(fixtures_dir):
    data = load_fixture(fixtures_dir, "tstar_p1_chamber12.json")
    blob = envelope.stable_envelopes(data)[1].to_json()
    assert blob["point"] == "P1"
    assert set(blob["restrictions"]) == {"P1", "P2"}


# ---------------------------------------------------------------------------
# pairing, orthogonality, duality


def paired(fixtures_dir):
    data = load_fixture(fixtures_dir, "tstar_p1_chamber12.json")
    op_data = load_fixture(fixtures_dir, "tstar_p1_chamber21.json")
    return data, op_data


def test_virtual_pairing_self(fixtures_dir):
    data, _ = paired(fixtures_dir)
    stabs = envelope.stable_envelopes(data)
    # a stab paired with itself is generally a nonzero rational function
    val = envelope.virtual_pairing(
        stabs[0].restrictions, stabs[0].restrictions, data
    )
    assert not val.is_zero()


def test_gram_matrix_is_identity(fixtures_dir):
    data, op_data = paired(fixtures_dir)
    stabs = envelope.stable_envelopes(data)
    op_stabs = envelope.stable_envelopes(op_data)
    gram = envelope.gram_matrix(stabs, op_stabs, data, op_data)
    for i, row in enumerate(gram):
        for j, entry in enumerate(row):
            assert entry == (1 if i == j else 0), (i, j, entry.render())


def test_polynomiality(fixtures_dir):
    data, op_data = paired(fixtures_dir)
    stabs = envelope.stable_envelopes(data)
    op_stabs = envelope.stable_envelopes(op_data)
    report = envelope.check_polynomiality(stabs, op_stabs, data, op_data)
    assert report.ok, report.messages


def test_opposite_order_check(fixtures_dir):
    data, op_data = paired(fixtures_dir)
    report = envelope.opposite_order_check(data, op_data)
    assert report.ok, report.messages


def test_chamber_mismatch_detected(fixtures_dir):
    data, _ = paired(fixtures_dir)
    with pytest.raises(errors.ChamberMismatch):
        envelope.gram_matrix(
            envelope.stable_envelopes(data),
            envelope.stable_envelopes(data),
            data,
            data,
        )


def test_three_blue_support_order(fixtures_dir):
    # the partial order read off the R-support refines D1 < ... < D5
    data = load_fixture(fixtures_dir, "example54_chamber321.json")
    for p in data.order:
        for q in data.order:
            if p != q and not data.restrictions[p][q].is_zero():
                assert data.rank(q) < data.rank(p)

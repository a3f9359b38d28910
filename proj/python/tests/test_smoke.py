from fractions import Fraction

import pytest

import mkdv_cells as mk


def test_generate_two_steps():
    rep = mk.generate(2, [2, 1], [0, 5])
    assert rep["status"] == "ok"
    out = rep["outputs"]
    assert out["degrees"] == [0, 3, 1]
    y = [mk.polynomial(p) for p in out["tuple"]["y"]]
    assert y == [[1], [5, 0, 0, 1], [0, 1]]
    assert [mk.fraction(e) for e in out["epsilon"]] == [-1, -3]


def test_one_step_flows():
    rep = mk.verify(2, [2], [Fraction(7)], [1, 3, 7])
    assert rep["status"] == "ok"
    gammas = {f["r"]: [mk.fraction(g) for g in f["gamma"]] for f in rep["outputs"]["flows"]}
    assert gammas == {1: [-1], 3: [0], 7: [0]}


def test_flow_beyond_four_m_vanishes():
    rep = mk.verify(2, [2, 1], [2, 3], [9])
    assert rep["status"] == "ok"
    (flow,) = rep["outputs"]["flows"]
    assert all(not f["num"] for f in flow["flow"])


def test_preconditions_raise():
    with pytest.raises(mk.PreconditionError):
        mk.generate(2, [2, 2], [0, 0])
    with pytest.raises(mk.PreconditionError):
        mk.verify(2, [2], [0], [5])
    assert not mk.admissible_flow(2, 5)
    assert mk.admissible_flow(2, 7)


def test_documents_round_trip_and_validate():
    rep = mk.generate(2, [1, 2], [Fraction(1, 2), -3])
    text = mk.export_document(rep["outputs"]["tuple"], "tuple")
    kind, data = mk.read_document(text)
    assert kind == "tuple"
    assert data == rep["outputs"]["tuple"]
    bad = dict(data, y=[["1/1"], ["1/1"], ["3/1", "2/1"]])
    with pytest.raises(mk.SchemaError):
        mk.read_document(mk.export_document(bad, "tuple"))


def test_seeded_parameters_are_deterministic():
    a = mk.sample_parameters(11, 3)
    assert a == mk.sample_parameters(11, 3)
    assert mk.verify(2, [0, 1], a[:2], [1]) == mk.verify(2, [0, 1], a[:2], [1])

import json

import pytest

from f4grad import gradings as gr
from f4grad.exactmath import ExactMatrix


def test_add_labels_and_canonical():
    assert gr.add_labels((1, 3), (1, 2), (2, 4)) == (0, 1)
    assert gr.canonical_label((5, -1), (2, 0)) == (1, -1)


def test_grading_rejects_duplicate_labels(albert):
    I = ExactMatrix.identity(27)
    with pytest.raises(ValueError):
        gr.Grading(albert, [((0,), I.submatrix(range(27), range(13))),
                            ((0,), I.submatrix(range(27), range(13, 27)))], (2,))


def test_closure_detects_bad_decomposition(albert):
    from f4grad import jordan

    I = ExactMatrix.identity(27)
    # E1 and E2 alone in the nonzero component: E1 E1 = E1 leaves it
    comps = [((0,), I.submatrix(range(27), range(2, 27))), ((1,), I.submatrix(range(27), range(2)))]
    G = gr.Grading(albert, comps, (2,))
    assert G.is_decomposition()
    assert not G.is_closed()
    del jordan


def test_coarsening_nt4_to_coar():
    nt4 = gr.computed_grading("nt4")
    coar = gr.computed_grading("coar")
    # nt4 labels live in Z24 slots; send (a, b, c, d) -> (a, b, d)
    C = gr.coarsen(nt4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]], (24, 24, 24))
    assert gr.grading_type(C) == gr.grading_type(coar) == (0, 12, 1)
    assert gr.same_decomposition(C, coar)


def test_universal_groups():
    assert gr.universal_group(gr.computed_grading("grad1")).describe() == "Z2^3"
    assert gr.universal_group(gr.computed_grading("coar")).describe() == "Z4 x Z2^2"
    assert gr.universal_group(gr.computed_grading("ztrescubo")).describe() == "Z3^3"


def test_errata_detected():
    rep = gr.validate_fixture("nt3")
    assert not rep["ok"] and rep["ok_up_to_errata"]
    assert rep["errata"]
    rep = gr.validate_fixture("ztrescubo")
    assert rep["ok_up_to_errata"]


def test_clean_fixture_matches():
    rep = gr.validate_fixture("coar")
    assert rep["ok"] and rep["matches_computed"]


def test_gr5_normal_is_isomorphic_not_equal():
    rep = gr.validate_fixture("gr5-normal")
    assert tuple(rep["printed_type"]) == (3, 0, 1)


def test_quasitorus_group():
    G = gr.computed_grading("grad1")
    assert gr.quasitorus_group(G).describe() == "Z2^3"


def test_json_report():
    G = gr.computed_grading("coar")
    data = json.loads(gr.to_json(G, toral=False))
    assert data["type"] == [0, 12, 1]
    assert sum(c["dim"] for c in data["components"]) == 27
    assert data["toral"] is False


def test_albert_torality_via_f4():
    assert not gr.is_toral(gr.computed_grading("grad1"))

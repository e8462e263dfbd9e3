import math
import pathlib
from fractions import Fraction

import pytest

import teeprobe as tp


def test_parse_render_round_trip():
    q = tp.parse("I(A:B:C)")
    assert len(q) == 7
    assert tp.parse(q.render()) == q
    assert tp.sum_coeffs(q) == Fraction(1)
    assert tp.classify(q) == "fixed_topology"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        tp.parse("S(A) + S(B")


def test_quantity_arithmetic():
    mmi = tp.named("MMI")
    assert (mmi - mmi).terms == []
    assert (-mmi) == tp.multi_information(3)
    assert mmi.coefficient(["A", "B", "C"]) == Fraction(-1)
    half = mmi * Fraction(1, 2)
    assert half.coefficient(["A"]) == Fraction(-1, 2)


def test_kp_disk_value():
    g = tp.geometry("kp_disk3")
    assert g.valid
    assert tp.eval_tqft(tp.multi_information(3), g) == (Fraction(-1), Fraction(0))
    assert tp.eval_tqft(tp.named("LW"), g) == (Fraction(2), Fraction(-1))


def test_pie_tally_and_punctures():
    g = tp.geometry("pie5")
    assert [g.punctures([x]) for x in "ABCDE"] == [3, 4, 4, 3, 5]
    assert g.punctures(["A", "C"]) == 7
    assert g.components(["A", "C"]) == [["A"], ["C"]]
    tally = tp.tally(tp.cyclic(5), g)
    assert tally["text"] == "(1/2)[3 S_7 + 2 S_6 - 3 S_6 - 3 S_5]"


def test_modes_and_strict():
    g = tp.geometry("strips3")
    q = tp.multi_information(3)
    assert tp.eval_tqft(q, g, mode="additive") == (Fraction(0), Fraction(0))
    annulus = tp.geometry(str(pathlib.Path(__file__).parent.parent / "data" / "annulus.json"))
    assert annulus.boundary_b0(["A", "B"]) == 2
    with pytest.raises(RuntimeError):
        tp.eval_tqft(q, annulus, strict=True)
    with pytest.raises(ValueError):
        tp.eval_tqft(q, g, mode="bogus")


def test_area_law():
    v = tp.eval_area_law(tp.cyclic(7), tp.geometry("pie7"))
    assert v["length_coeffs"] == {}
    assert v["c_gamma"] == Fraction(1)


def test_anyon_models():
    fib = tp.model("fibonacci")
    s = tp.derived_scalars(fib)
    assert s["log_D"] == pytest.approx(0.642965390638, abs=1e-11)
    for k in range(2, 7):
        assert tp.brute_force_entropy(fib, k) == pytest.approx(tp.closed_form_entropy(fib, k), abs=1e-9)
    assert tp.brute_force_entropy(tp.model("toric"), 4) == pytest.approx(6 * math.log(2), abs=1e-12)
    assert tp.validate_model(fib) == []
    assert tp.evaluate_numeric(1, 0, fib) == pytest.approx(s["log_D"])


def test_tripartite_expand():
    q = tp.tripartite_expand(["A", "B", "C", "D"], [(["A"], ["B"], ["C"], ["D"])])
    assert tp.sum_coeffs(q) == 0
    assert tp.eval_tqft(q, tp.geometry("pie4")) == (Fraction(0), Fraction(0))


def test_scan():
    report = tp.scan(geometries=["kp_disk3", "pie5"], modes=["paper", "area-law"], models=["toric"])
    assert report["facet_failures"] == []
    assert len(report["rows"]) == len(tp.starter_catalog()["quantities"]) * 4
    assert report == tp.scan(geometries=["kp_disk3", "pie5"], modes=["paper", "area-law"], models=["toric"])


def test_json_round_trips():
    q = tp.cyclic(7)
    assert tp.quantity_from_json(q.to_json()) == q
    g = tp.geometry("pie6")
    assert tp.arrangement_from_json(g.to_json()).to_json() == g.to_json()
    m = tp.model("ising")
    assert tp.model_from_json(m.to_json()).labels == m.labels

import pytest

import cdvdiv


def test_classify_examples():
    assert cdvdiv.classify("x^2 + y^3 + y*z^3 + t^9") == "cE7"
    assert cdvdiv.classify("x^2 + y^2*z + z^3 + t^3") == "cD(4)"


def test_analyze_example_three():
    report = cdvdiv.analyze("x^2 + y^3 + z^5 + t^15")
    assert report["type"] == "cE8"
    hits = [r for r in report["reports"] if r["rationality"]["verdict"] == "non_rational" and r["discrepancy"] == 1]
    assert len(hits) == 1
    assert hits[0]["weight"] == [8, 5, 3, 1]
    assert hits[0]["rationality"]["genus"] == 4
    assert hits[0]["rationality"]["hyperelliptic"] is False
    assert report["summary"]["violation"] is False


def test_catalog_and_lemmas():
    assert sorted(cdvdiv.candidate_weights("cE6")) == [[2, 2, 1, 1], [3, 2, 2, 1], [4, 3, 2, 1]]
    quads = cdvdiv.lemmas("cE6")["quadruples"]
    assert {tuple(q["quadruple"]) for q in quads} == {
        ("2", "2", "4", "4"),
        ("2", "3", "3", "6"),
        ("2", "8/3", "4", "8"),
        ("2", "3", "4", "12"),
    }


def test_weights_and_genus():
    assert cdvdiv.weights("x^2 + y^2*z + z^3 + t^3") == [[1, 1, 1, 1], [2, 1, 1, 1]]
    assert cdvdiv.genus("y^3 + z^5 + 1") == 4


def test_errors_surface_as_python_exceptions():
    with pytest.raises(cdvdiv.ParseError):
        cdvdiv.classify("x^2 + + y")
    with pytest.raises(ValueError):
        cdvdiv.analyze("1 + x^2")
    with pytest.raises(ValueError):
        cdvdiv.lemmas("cE9")


def test_normalize_is_stable():
    p = cdvdiv.normalize("t^3 + z^3 + y^2*z + x^2")
    assert cdvdiv.normalize(p) == p

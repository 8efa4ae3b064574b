import pytest

import syang


def test_bracket_normal_form():
    assert syang.normalize("[t[1,2,1], t[2,1,1]]", "01", cap=4) == "t[2,2,1] - t[1,1,1]"


def test_gl_and_inverse_series():
    assert syang.normalize("e[1,2]*e[1,2]", "01") == "0"
    assert syang.normalize("tp[1,2,1]", "01") == "-t[1,2,1]"


def test_gauss_coefficients():
    table = syang.gauss("01", "1,1", cap=2)
    assert table["E[1,2,1,1,1]"] == "t[1,2,1]"
    assert table["D[1,1,1,2]"] == "t[1,1,2]"
    assert len(table) == 12


def test_morphisms():
    assert syang.apply("ev", "01", "t[2,1,1]") == "-e[2,1]"
    assert syang.apply("ev", "01", "t[2,1,2]") == "0"
    assert syang.apply("delta", "01", "t[1,2,1]") == "1 (x) t[1,2,1] + t[1,2,1] (x) 1"


def test_relations_vanish():
    counts = syang.verify("010", "1,1,1", "R7", max_degree=2)
    assert set(counts) == {f"R7.{k}" for k in range(1, 17)}
    assert sum(c for c, _ in counts.values()) > 0
    assert all(f == 0 for _, f in counts.values())


def test_confluence_small():
    ok, checked, example = syang.confluence("01", samples=10, seed=3, max_len=2, max_r=2)
    assert ok and checked == 10 and example == ""


def test_errors():
    with pytest.raises(ValueError):
        syang.normalize("t[1,2", "01")
    with pytest.raises(ValueError):
        syang.normalize("e[1,2]*t[1,2,1]", "01")
    with pytest.raises(ValueError):
        syang.normalize("D[1,1,1,1]", "01")
    with pytest.raises(IndexError):
        syang.normalize("t[3,1,1]", "01")

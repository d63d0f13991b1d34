import pytest

import socle_lab as sl


def test_kummer_rank():
    r = sl.kummer_rank("F7(t)", "t, t+1", 3)
    assert r["rank"] == 2
    assert r["status"] == "certified-independent"

    dep = sl.kummer_rank("F7(t)", "t*(t+1)^3, t", 3)
    assert dep["rank"] == 1
    assert dep["status"] == "dependence-witness"
    assert any(dep["witness"])


def test_kummer_relative_rank():
    r = sl.kummer_relative_rank("F7(t,u)", "t+u, t+u+1, t+u+2", 3)
    assert r["rank"] == 3


def test_as_rank_and_wp_solve():
    r = sl.as_rank("F2(t)", "1/t^2", 2)
    assert r["rank"] == 1

    sol = sl.wp_solve("F2(t)", "t^6 + t^3 + t^2 + t", 2)  # wp(t^3+t) over F_2
    assert sol["solved"]

    obs = sl.wp_solve("F3(t)", "1/t", 3)
    assert not obs["solved"]
    assert obs["obstruction"]["reason"] == "pole-order"


def test_membership():
    r = sl.membership("F7(t)", "t^2", "t", 3)
    assert r["verdict"] == "member"
    assert r["nu"] == [2]


def test_semantic_errors():
    with pytest.raises(sl.SemanticError):
        sl.kummer_rank("F7(t)", "t", 7)
    with pytest.raises(sl.SemanticError):
        sl.as_rank("Q(t)", "t", 2)
    with pytest.raises(sl.ParseError):
        sl.kummer_rank("F7(t)", "t + w", 3)


def test_groups():
    f = sl.frattini("Q8", 2)
    assert f["phi_order"] == 2
    assert f["rank"] == 2

    s = sl.socle("F20", [], 2)
    assert s["rank"] == 1


def test_disjoint():
    d = sl.disjoint("Q(zeta8)", "zeta8 + zeta8^7", "zeta8^2")
    assert (d["dim1"], d["dim2"], d["dim_compositum"]) == (2, 2, 4)
    assert d["linearly_disjoint"]


def test_scenarios():
    assert len(sl.scenario_names()) == 8
    rep = sl.run_scenario("lemma34")
    assert rep["exit_code"] == 0
    assert all(row["verdict"] == "pass" for row in rep["rows"])

import json

import pytest

import arbordyn


def test_orbit_main_family():
    rep = arbordyn.orbit("(z^2-98)/z^2", start=0, steps=6)
    assert rep["schema"] == arbordyn.SCHEMA
    assert rep["report"]["orbit"]["points"][:4] == ["0", "inf", "1", "-97"]


def test_orbit_matches_fractions():
    from fractions import Fraction

    x = Fraction(2, 3)
    pts = [x]
    for _ in range(4):
        x = (x * x + 2) / (x * x + 2 * x + 2)
        pts.append(x)
    rep = arbordyn.orbit("(z^2+2)/(z^2+2z+2)", start="2/3", steps=4)
    assert rep["report"]["orbit"]["points"] == [str(p) for p in pts]


def test_critical_collision():
    rep = arbordyn.critical("(z^2+2)/(z^2+2z+2)")["report"]
    assert rep["critical"]["s"] == "2"
    assert rep["relation"]["kind"] == "collision"
    assert rep["relation"]["n"] == 2


def test_sequence_f_column():
    rows = arbordyn.sequence(a=-98, n=5)["report"]["rows"]
    assert [int(r["f"]) for r in rows] == [1, 1, -97, 9311, -8589174817]


def test_f_sequence_recurrence():
    a = -98
    f = arbordyn.f_sequence(a, 10)
    for n in range(3, 11):
        assert f[n] == f[n - 1] ** 2 + a * f[n - 2] ** 4


def test_theta():
    assert arbordyn.theta(-98, 3) == -97
    assert arbordyn.theta(-98, 4) == 9311


def test_certify_m2():
    rep, code = arbordyn.certify(m=2, depth=8)
    assert code == 0
    mf = rep["report"]["m_family"]
    assert mf["certificate"]["overall"] == "all_maximal"
    assert (mf["hypotheses"]["s1"]["prime"], mf["hypotheses"]["s2"]["prime"]) == ("3", "5")


def test_certify_hypotheses_unmet():
    rep, code = arbordyn.certify(a=2, depth=3)
    assert code == 4
    assert rep["report"]["certificate"]["overall"] == "hypotheses_unmet"


def test_certify_deterministic_across_threads():
    one, _ = arbordyn.certify(m=3, depth=6, threads=1)
    four, _ = arbordyn.certify(m=3, depth=6, threads=4)
    assert json.dumps(one, sort_keys=True) == json.dumps(four, sort_keys=True)


def test_rigid_check():
    ok = arbordyn.rigid_check("(z^2+1)/(z^2+3)", exclude=[2], n=8)
    assert ok["report"]["report"]["pass"] is True
    bad = arbordyn.rigid_check("(z^2+1)/(z^2+3)", n=8)
    assert bad["report"]["report"]["violating_primes"] == ["2"]


def test_config_is_embedded():
    rep = arbordyn.sequence(map="(z^2+1)/(z^2+3)", n=3, factor=True, seed=5, trial_bound=1000)
    assert rep["config"]["seed"] == 5
    assert rep["config"]["trial_bound"] == 1000
    with pytest.raises(TypeError):
        arbordyn.sequence(a=-98, n=2, bogus=1)


def test_errors_carry_kind():
    with pytest.raises(arbordyn.ArbordynError) as e:
        arbordyn.orbit("(z^2+1")
    assert e.value.kind == "parse"
    with pytest.raises(arbordyn.ArbordynError) as e:
        arbordyn.critical("(z^3+z+1)/(z^2+1)")
    assert e.value.kind == "not_bicritical"


def test_canonical_map():
    assert arbordyn.canonical_map("(2z^2+4)/(2z^2)") == "(z^2+2)/(z^2)"

import _tropica as t


D3 = "-1 0 0\n0 -1 0\n0 0 -1\n"


def test_scalar_arithmetic():
    assert t.sym_add("+2", "-3") == "-3"
    assert t.sym_add("+3", "-3") == "3*"
    assert t.sym_mul("-2", "-3") == "+5"
    assert t.ext_add("3", "3") == "3v"
    assert t.ext_add("2v", "3") == "3"
    assert t.sym_balance("+1", "1*")
    assert not t.sym_balance("+1", "-1")


def test_determinants():
    assert t.bideterminant(D3) == ("0", "-1")
    assert t.permanent(D3) == "0"
    assert t.det(D3, "smax") == "+0"
    assert t.is_trop_singular(D3)
    assert not t.is_sign_singular(D3)


def test_rank_report():
    r = t.rank_report(t.fixture("D3"))
    assert r["f"] == 3
    assert r["rk_det"] == 3
    assert r["trop"] == 2
    assert r["violations"] == []


def test_solvers():
    a = "+0 --1\n--1 +0\n"
    b = "+1\n+2\n"
    out = t.solve_sym(a, b)
    assert out["outcome"] == "unique_signed"
    assert out["x"] == ["+1", "+2"]

    res = t.solve_tropical("0 -1\n-1 0\n", "0\n2\n")
    assert res["ok"]
    assert res["x"] == ["1", "2"]


def test_witness_and_identities():
    w = t.gm_witness(t.fixture("exd1d2"), "cols")
    assert w is not None
    assert sorted(w["I"] + w["J"]) == [0, 1, 2, 3]

    chk = t.identity_check("det_mult", 2)
    assert chk["weak"]

import anabelkit as ak
import pytest


def test_field_basics():
    K = ak.Field("p=3 r=2 rad=3")
    assert (K.p, K.degree, K.e, K.f) == (3, 54, 54, 1)
    assert K.discriminant_valuation() == 165
    assert K.uniformizer().valuation() == 1
    assert K.integer(3).valuation() == 54


def test_element_arithmetic():
    K = ak.Field("p=3 r=1 rad=3", precision=30)
    z = K.element("z")
    assert (z ** 3 - K.integer(1)).is_zero()
    assert (z - K.integer(1)).valuation() == 3
    x = K.element("r + 1")
    assert ((x * x.inverse()) - K.integer(1)).is_zero()
    assert (x / x - K.integer(1)).is_zero()


def test_log_and_l_invariant():
    Q3 = ak.Field("p=3", precision=20)
    got = int(Q3.integer(12).l_invariant().lift_integer()) % 3 ** 20
    assert got == 706057446
    assert Q3.integer(27).l_invariant().is_zero()


def test_check_anab():
    r = ak.check_anab("p=3 r=2 rad=3", "p=3 r=2 rad=4")
    assert r.exit_code == 0
    assert ak.data(r)["status"] == "ANABELOMORPHIC"
    assert ak.check_anab("p=3 r=1 rad=3", "p=3 r=2 rad=3").exit_code == 1
    assert ak.check_anab("p=3 r=1 rad=z", "p=3 r=1 rad=3").exit_code == 2


def test_disc_conductor_tate():
    assert ak.disc("p=3 r=2 rad=3").render("pretty") == "[3, 165]\n"
    c = ak.data(ak.conductor("p=3 r=1 rad=3"))
    assert c["conductor_sum"] == c["disc"] == 11
    t = ak.tate("[0,3,0,0,9]", "p=3 r=2 rad=3")
    assert t.render("pretty") == "[6, 4, IV, 1]\n"


def test_table_and_search():
    r = ak.table("1", first=2)
    assert r.exit_code == 0
    assert r.render("pretty") == "[3, 165]\n[4, 121]\n"
    a = ak.search("p=3 r=1 rad=3", "p=3 r=1 rad=4", count=3, seed=5)
    b = ak.search("p=3 r=1 rad=3", "p=3 r=1 rad=4", count=3, seed=5, threads=2)
    assert a.render("csv") == b.render("csv")


def test_errors():
    with pytest.raises(ak.DomainError):
        ak.Field("p=4")
    with pytest.raises(ValueError):
        ak.tate("[0,0,0,0,0]", "p=5")
    with pytest.raises(ak.DomainError):
        ak.table("9")

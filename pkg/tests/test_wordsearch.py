import pytest

from hidsym import registry as reg
from hidsym import wordsearch as ws
from hidsym.moebius import ExtendedIsometry, compose, conjugate
from hidsym.words import parse_word

R = reg.get


def conj(name, by="m1"):
    return conjugate(R(by), R(name))


def test_ball_examples():
    delta0 = ws.preset("Delta0")
    assert len(ws.enumerate_ball(delta0, 0)) == 1
    ball = ws.enumerate_ball(delta0, 1)
    assert len(ball) == 5
    assert {str(w) for w in ball.words.values()} == {"1", "s", "s^-1", "t", "t^-1"}
    lam = ws.preset("Lambda")
    assert R("p4") not in ws.enumerate_ball(lam, 2)
    assert R("p4") in ws.enumerate_ball(lam, 3)
    with pytest.raises(ValueError):
        ws.enumerate_ball(lam, -1)


def test_ball_audit_and_shortest_words():
    G = ws.preset("HT0")
    ball = ws.enumerate_ball(G, 4)
    assert ball.audit() == []
    for key, w in ball.words.items():
        assert len(w) <= 4
    # a0^3 = 1 so a0^2 is reached as a0^-1
    assert str(ball.word_for(R("a0") ** 2)) == "a0^-1"


def test_budget():
    with pytest.raises(ws.BudgetExceeded):
        ws.enumerate_ball(ws.preset("Delta0"), 6, budget=100)


def test_express_examples():
    assert str(ws.express(R("f"), ws.preset("HT0"), 3)) == "f0^-1*a0"
    assert ws.preset("HT0").evaluate("a0*f0*a0^-1") == R("f")
    w = ws.express(R("m1"), ws.preset("PSL2Z"), 5)
    assert w and ws.preset("PSL2Z").evaluate(w) == R("m1")
    assert len(w) == 5
    target = conj("s")
    w = ws.express(target, ws.preset("Delta0"), 8)
    assert str(w) == "t*s*t*s^-1*t^-1*s^-1*t^-1"
    assert target == R("p3")


def test_express_conjugate_of_t():
    w = ws.express(conj("t"), ws.preset("Delta0"), 10)
    assert str(w) == "t*s*t^-1*s^-1*t^-1"


def test_express_not_found():
    res = ws.express(R("c"), ws.preset("Delta0"), 3)
    assert not res
    assert str(res) == "not in ball of radius 3"


def test_express_matches_ball_lookup():
    G = ws.preset("H0")
    ball = ws.enumerate_ball(G, 4)
    for key, w in list(ball.words.items())[:200]:
        found = ws.express(ball.elements[key], G, 4)
        assert len(found) == len(w)


def test_identity_set():
    checks = ws.verify_identity_set(list(ws.WORD_IDENTITIES) + [ws.G_M1_G_INV, ("s", "s")])
    assert all(c.ok for c in checks)
    bad = ws.verify_identity_set([("f", "a0*f0")])
    assert not bad[0].ok


def test_conjugacy_search():
    lam = ws.preset("Lambda")
    w = ws.conjugacy_search(conj("p1"), R("p3").inverse(), lam, 0)
    assert w is not None and len(w) == 0
    assert len(ws.conjugacy_search(R("p1"), R("p1"), lam, 0)) == 0
    assert not ws.conjugacy_search(R("p1"), R("p2"), lam, 4)


def test_resolve_families():
    assert ws.resolve("a1") == R("a1")
    assert ws.resolve("a3") == reg.a_family(3)
    assert ws.resolve("p2_1") == reg.p_family(2, 1)
    assert ws.resolve("m1_2") == reg.m1_family(2)
    assert ws.resolve("f_2") == reg.gamma_t_generators(2)["f_2"]
    assert ws.resolve("fbar") == reg.conj_gamma_t0_generator("f")
    with pytest.raises(KeyError):
        ws.resolve("zz")


def test_evaluate_expression():
    assert ws.evaluate_expression("[[1, 1], [0, 1]]") == R("f0")
    assert ws.evaluate_expression("[[2, 2], [0, 2]]") == R("f0")
    assert ws.evaluate_expression("p1*p2*p3^-1") == R("p4")


def test_presets():
    assert ws.preset("Delta1").names == ("s", "t", "f", "g", "h", "fbar", "gbar", "hbar")
    assert ws.preset("H2").names == ("f0", "b0", "a0", "a1", "a2")
    with pytest.raises(KeyError):
        ws.preset("Nope")
    with pytest.raises(ValueError):
        ws.GeneratedGroup("x", ("s", "s"), (R("s"), R("s")))


def test_m1_family_certificates():
    for n in (1, 2):
        lhs, rhs = ws.m1_family_certificate(n)
        assert ws.evaluate_expression(lhs) == ws.evaluate_expression(rhs)


def test_g_m1_conjugate_in_h0():
    x = ws.evaluate_expression("g*m1*g^-1")
    assert str(ws.express(x, ws.preset("H0"), 3)) == "a0^-1*f0*a0^-1"
    y = ws.evaluate_expression("g^-1*m1*g")
    assert not y.mat.has_gaussian_integer_entries()

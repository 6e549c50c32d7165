import pytest

import carlitz_osc


@pytest.fixture(scope="module")
def ctx():
    return carlitz_osc.Context(p=2, gamma=1, imax=6, M=6)


def test_tables(ctx):
    assert ctx.q == 2
    assert ctx.bracket(1) == "x^2+x"
    assert ctx.D(2) == "x^8+x^6+x^5+x^3"
    assert ctx.L(2) == "x^6+x^5+x^3+x^2"
    assert ctx.binom(2, 1) == "x^2+x+1"
    assert ctx.e_coeffs(1) == ["1", "1"]


def test_m_sequence_and_valuations(ctx):
    assert [ctx.m_seq(j) for j in range(4)] == ["0", "1", "x", "x+1"]
    for n in range(64):
        l, kappa = ctx.l_and_kappa(n)
        assert l == kappa


def test_ladder_operators(ctx):
    # a+ f_1 = [2] f_2
    assert ctx.a_plus(["0", "1"]) == ["0", "0", "x^4+x"]
    # a- f_2 = f_1
    assert ctx.a_minus(["0", "0", "1"]) == ["0", "1"]
    # number operator eigenvalue [1] on f_1
    assert ctx.number_op(["0", "1"]) == ["0", "x^2+x"]

    r = ctx.commutator(["x", "1", "x+1"])
    assert r["equal"] and r["k_form_equal"]


def test_evaluation_and_norms(ctx):
    assert ctx.eval(["0", "1"], "x") == "1"  # f_1(x) = 1
    assert ctx.norm(["x", "1"]) == "q^(0)"
    assert ctx.sampled_norm(["x", "1"], 4) == "q^(0)"


def test_exponential(ctx):
    v = ctx.exp("x^2", prec=16)
    assert v["value"].startswith("x^2*(")
    assert v["prec"] == 16
    assert v["json"]["val"] == 2

    r = ctx.verify_inverse("x^2", prec=24)
    assert r["equal"] and r["prec"] >= 24

    with pytest.raises(ValueError):
        ctx.exp("x", prec=8)  # boundary argument for q=2


def test_coherent(ctx):
    r = ctx.coherent_state("1", "x", 5)
    assert r["coeffs"] == ["x", "x^2", "x^4", "x^8", "x^16"]
    assert r["residual_zero"]


def test_wz(ctx):
    b = ctx.wz_coeffs("x^2", 3, prec=40)
    assert b[0].startswith("x^2*(")


def test_verify_suite(ctx):
    rep = ctx.verify("basis")
    assert rep["passed"] == rep["cases"]
    assert not rep["aborted"]
    assert rep["counterexample"] is None
    assert set(carlitz_osc.suites()) >= {"basis", "oscillator", "coherent"}


def test_q3():
    c3 = carlitz_osc.Context(p=3, imax=4, M=4)
    assert c3.bracket(1) == "x^3+2*x"
    v = c3.exp("x", prec=12)
    assert v["prec"] == 12

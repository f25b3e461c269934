from fractions import Fraction

import pytest

import pdef


def test_p_deficiency_of_s3():
    for p in (3, 5, 7):
        g = pdef.s_n_p(3, p)
        assert g.p_deficiency(p) == 2 - Fraction(3, p)


def test_parse_and_analyze():
    g = pdef.Presentation("< x, y | x^2 >")
    assert g.generators == ["x", "y"]
    assert g.relators == ["x^2"]
    a = pdef.analyze(g, 2)
    assert a["def_p"] == Fraction(3, 2)
    assert a["is_puchta"]
    assert a["d_p"] == 2
    assert pdef.Presentation(str(g)) == g


def test_rewrite_multiplicativity():
    g = pdef.Presentation("< x, t | x^4 >")
    h = pdef.puchta_rewrite(g, 2, [0, 1])
    assert h.p_deficiency(2) - 1 == 2 * (g.p_deficiency(2) - 1)
    k = pdef.reidemeister_schreier(g, 2, [0, 1])
    assert k.deficiency() - 1 == 2 * (g.deficiency() - 1)


def test_gs_verdicts():
    assert pdef.gs_verdict(pdef.s_n_p(3, 7), 7)["verdict"] == "witness"
    assert pdef.gs_verdict(pdef.s_n_p(3, 5), 5)["verdict"] == "nonnegative"


def test_exceptional_blocks():
    blocks = {b["prime"]: b for b in pdef.exceptional(7)}
    assert blocks[3]["oracle"] == [(2, 2), (3, 4), (3, 5)]
    assert blocks[5]["oracle"] == [(2, 3), (2, 4)]
    assert blocks[7]["oracle"] == []
    assert blocks[2]["warning"]


def test_descent():
    assert pdef.descent_explicit(pdef.Presentation("< x, t | x^4 >"), 2, 2) == [
        Fraction(7, 4), Fraction(5, 2), Fraction(4)]
    rows = pdef.descent_symbolic("5/4", 2, 3)
    assert [r["ratio"] for r in rows if r["phase"] == "rapid"] == [1, 1, 1]


def test_degrees_and_nu_p():
    assert pdef.nu_p("(x y)^4", ["x", "y"], 2) == 2
    assert pdef.zassenhaus_degree("[x,y]", ["x", "y"], 3) == (2, True)
    assert pdef.gs_subgroup_index(2, Fraction(1, 2)) == 2


def test_errors():
    with pytest.raises(pdef.PdefError, match="DuplicateGenerator"):
        pdef.Presentation("< x, x | >")
    with pytest.raises(pdef.PdefError, match="NotPuchta"):
        pdef.descent_explicit(pdef.s_n_p(3, 3), 3, 1)

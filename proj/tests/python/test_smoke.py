"""Smoke tests for the python bindings."""

import pytest

spechtweb = pytest.importorskip("spechtweb")


def test_dimensions():
    assert spechtweb.syt_count(2) == 5
    assert spechtweb.syt_count(3) == 42
    assert len(spechtweb.enumerate_syt(2)) == 5


def test_bijections_and_words():
    t = spechtweb.Tableau(2, [[1, 2], [3, 5], [4, 6]])
    assert t.is_standard()
    assert spechtweb.word_of(t) == "++0-0-"
    m = spechtweb.m_diagram(t)
    assert [tuple(a) for a in m.arcs] == [(1, 5, 6), (2, 3, 4)]
    assert spechtweb.is_m_diagram(m)
    v = spechtweb.polytabloid_diagram(t)
    assert spechtweb.crossing_count(v) == 1


def test_expansion_identity():
    v2 = spechtweb.ForkDiagram([(1, 3, 4), (2, 5, 6)])
    terms = dict()
    for coeff, arcs in spechtweb.expand_in_m(v2):
        terms[tuple(map(tuple, arcs))] = coeff
    assert terms[((1, 5, 6), (2, 3, 4))] == 1  # m2
    assert terms[((1, 2, 4), (3, 5, 6))] == 1  # m1
    assert terms[((1, 2, 3), (4, 5, 6))] == -1  # m0
    assert len(terms) == 3


def test_action_matches_expansion():
    m1 = spechtweb.ForkDiagram([(1, 2, 4), (3, 5, 6)])
    acted = sorted(spechtweb.act_module(m1, 2))
    expected = sorted(spechtweb.expand_in_m(spechtweb.ForkDiagram([(1, 3, 4), (2, 5, 6)])))
    assert acted == expected


def test_transition_matrix():
    m = spechtweb.transition_matrix("P", "M", 2)
    assert m["unitriangular"]
    assert len(m["entries"]) == 5
    assert all(m["entries"][i][i] == 1 for i in range(5))


def test_representation():
    ok, dim, violation = spechtweb.check_representation(2)
    assert ok and dim == 5 and violation == ""


def test_webs_and_render():
    m0 = spechtweb.ForkDiagram([(1, 2, 3), (4, 5, 6)])
    terms = spechtweb.expand_via_webs(m0)
    assert len(terms) == 1 and terms[0][0] == 1
    svg = spechtweb.render_svg(m0)
    assert svg.startswith("<svg")

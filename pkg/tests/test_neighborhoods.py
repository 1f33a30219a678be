"""Catalog data: cases, parameters, mu, source germs, section graphs."""
from __future__ import annotations

import pytest

from flipcheck.dualgraph import config_graph_sum, sum_dominated_by
from flipcheck.invariants import xi
from flipcheck.neighborhoods import (
    ALL_CASES,
    Case,
    GORENSTEIN_ONLY,
    ISOLATED_CASES,
    Kind,
    UNCONSTRAINED,
    check_comp_d,
    check_exclude,
    graph_ex,
    graph_ey,
    iter_param_dicts,
    make_neighborhood,
    mu,
    param_ranges,
    parse_case_label,
    source_config,
    source_index_lcm,
)
from flipcheck.transitions import Bounds


def test_catalog_shape():
    assert len(ALL_CASES) == 13
    assert {c.value for c in ISOLATED_CASES} == {
        "2.2.1.1", "2.2.1.2", "2.2.1.3", "2.2.2", "2.2.3", "2.2.4",
    }
    labels = [c.value for c in ALL_CASES]
    assert labels == [
        "2.2.1.1", "2.2.1.2", "2.2.1.3",
        "2.2.1'.1", "2.2.1'.2", "2.2.1'.3", "2.2.1'.4",
        "2.2.2", "2.2.2'", "2.2.3", "2.2.3'", "2.2.4", "2.2.5",
    ]


def test_parse_case_label():
    assert parse_case_label("2.2.1'.2") is Case.C221P2
    assert parse_case_label("2.2.1p.2") is Case.C221P2
    assert parse_case_label("2.2.2p") is Case.C222P
    assert parse_case_label(" 2.2.4 ") is Case.C224
    for c in ALL_CASES:
        assert parse_case_label(c.value) is c
    with pytest.raises(ValueError):
        parse_case_label("2.2.9")
    with pytest.raises(ValueError):
        parse_case_label("nope")


def test_parameter_validation():
    iso, div = Kind.ISOLATED, Kind.DIVISORIAL
    with pytest.raises(ValueError):
        make_neighborhood(Case.C2211, iso, m=1, k=1)
    with pytest.raises(ValueError):
        make_neighborhood(Case.C222, div, m=4)  # even
    with pytest.raises(ValueError):
        make_neighborhood(Case.C222, div, m=3)  # too small
    with pytest.raises(ValueError):
        make_neighborhood(Case.C223, iso, m=2, k=1)
    with pytest.raises(ValueError):
        make_neighborhood(Case.C223P, div, m=9, k=1)  # stray parameter
    with pytest.raises(ValueError):
        make_neighborhood(Case.C224, iso, r1=1, k1=1, r2=2, k2=1)
    with pytest.raises(ValueError):
        make_neighborhood(Case.C2213, iso)  # missing k
    with pytest.raises(ValueError):
        make_neighborhood(Case.C2212, iso, m=3)
    with pytest.raises(ValueError):
        make_neighborhood(Case.C221P1, iso)  # divisorial-only case
    with pytest.raises(ValueError):
        make_neighborhood(Case.C225, iso)
    # valid forms construct
    make_neighborhood(Case.C223, div, m=3, k=1)
    make_neighborhood(Case.C224, iso, r1=2, k1=1, r2=2, k2=1)
    make_neighborhood(Case.C225, div)


MU_ROWS = [
    (Case.C2211, dict(m=7, k=2), 7),
    (Case.C2212, {}, 3),
    (Case.C2213, dict(k=9), 4),
    (Case.C221P1, {}, 2),
    (Case.C221P2, dict(k=4), 2),
    (Case.C221P3, {}, 2),
    (Case.C221P4, dict(k=1), 4),
    (Case.C222, dict(m=7), 7),
    (Case.C222P, {}, 4),
    (Case.C223, dict(m=9, k=2), 9),
    (Case.C223P, dict(m=3), 3),
    (Case.C224, dict(r1=3, k1=1, r2=5, k2=2), 5),
    (Case.C225, {}, 1),
]


@pytest.mark.parametrize("case,params,want", MU_ROWS)
def test_mu(case, params, want):
    assert mu(make_neighborhood(case, Kind.DIVISORIAL, **params)) == want


GRAPH_ROWS = [
    (Case.C2211, dict(m=3, k=2), "A5", "A5"),
    (Case.C2212, {}, "E6", "E6"),
    (Case.C2213, dict(k=1), "A3", "A3"),
    (Case.C2213, dict(k=2), "D5", "D5"),
    (Case.C221P1, {}, "D4", "D4"),
    (Case.C221P2, dict(k=1), "A1+A1", "A1+A1"),
    (Case.C221P2, dict(k=3), "D6", "D6"),
    (Case.C221P3, {}, "E7", "E7"),
    (Case.C221P4, dict(k=2), "D5", "D5"),
    (Case.C222, dict(m=5), "A4", "D5"),
    (Case.C222P, {}, "D5", "E6"),
    (Case.C223, dict(m=3, k=1), "A1+A1+A2", "D5"),
    (Case.C223, dict(m=5, k=2), "A4+D4", "D9"),
    (Case.C223P, dict(m=3), "A1+A2", "D5"),
    (Case.C223P, dict(m=7), "A1+A6", "D9"),
    (Case.C224, dict(r1=2, k1=1, r2=4, k2=1), "A1+A3", "A5"),
    (Case.C225, {}, "smooth", "smooth"),
]


@pytest.mark.parametrize("case,params,ex,ey", GRAPH_ROWS)
def test_section_graphs(case, params, ex, ey):
    n = make_neighborhood(case, Kind.DIVISORIAL, **params)
    assert graph_ex(n).label == ex
    assert graph_ey(n).label == ey


def _sample_neighborhoods():
    for case in ALL_CASES:
        for pd in iter_param_dicts(case, Bounds(7, 5)):
            yield make_neighborhood(case, Kind.DIVISORIAL, **pd)


def test_source_consistency():
    # graph_ex is tabulated independently of the source germs; they must
    # agree, and mu must be the top source index
    for n in _sample_neighborhoods():
        src = source_config(n)
        assert graph_ex(n) == config_graph_sum(src)
        top = max((p.r for p in src), default=1)
        assert mu(n) == top
        # section rank vs Xi: cA and cAx4 sections drop one rank, cE2
        # gains one, the others break even
        corr = {"cA": -1, "cAx4": -1, "cE2": 1}
        want_rank = xi(src) + sum(corr.get(p.type.value, 0) for p in src)
        assert graph_ex(n).rank == want_rank
        # every section component fits under the transition-side graph
        ey = graph_ey(n)
        if len(ey) == 1:
            assert sum_dominated_by(graph_ex(n), ey.components[0], 0)


SOURCE_ROWS = [
    (Case.C2211, dict(m=4, k=3), "cA(4,3)"),
    (Case.C2212, {}, "cD3"),
    (Case.C2213, dict(k=5), "cAx4(5)"),
    (Case.C221P1, {}, "cAx2"),
    (Case.C221P2, dict(k=2), "cD2(2)"),
    (Case.C221P3, {}, "cE2"),
    (Case.C221P4, dict(k=3), "cAx4(3)"),
    (Case.C222, dict(m=9), "cA(9,1)"),
    (Case.C222P, {}, "cAx4(2)"),
    (Case.C223, dict(m=5, k=2), "cA(5,1)+cD2(2)"),
    (Case.C223P, dict(m=5), "cA(2,1)+cA(5,1)"),
    (Case.C224, dict(r1=3, k1=2, r2=2, k2=1), "cA(2,1)+cA(3,2)"),
    (Case.C225, {}, "(none)"),
]


@pytest.mark.parametrize("case,params,label", SOURCE_ROWS)
def test_source_config(case, params, label):
    n = make_neighborhood(case, Kind.DIVISORIAL, **params)
    assert str(source_config(n)) == label


def test_source_index_lcm():
    assert source_index_lcm(make_neighborhood(Case.C223, Kind.DIVISORIAL, m=5, k=1)) == 10
    assert source_index_lcm(make_neighborhood(Case.C224, Kind.DIVISORIAL, r1=4, k1=1, r2=6, k2=1)) == 12
    assert source_index_lcm(make_neighborhood(Case.C225, Kind.DIVISORIAL)) == 1
    assert source_index_lcm(make_neighborhood(Case.C2213, Kind.DIVISORIAL, k=3)) == 4


def test_check_comp_d():
    n = make_neighborhood(Case.C2213, Kind.DIVISORIAL, k=1)
    assert check_comp_d(1, n)
    assert check_comp_d(2, n)
    assert not check_comp_d(3, n)  # 3 does not divide 4
    assert not check_comp_d(4, n)  # 2*4 > mu = 4
    with pytest.raises(ValueError):
        check_comp_d(2, make_neighborhood(Case.C2213, Kind.ISOLATED, k=1))
    n = make_neighborhood(Case.C221P2, Kind.DIVISORIAL, k=3)
    assert not check_comp_d(2, n)  # 2*2 > mu = 2
    n = make_neighborhood(Case.C222, Kind.DIVISORIAL, m=9)
    assert check_comp_d(3, n)
    assert not check_comp_d(9, n)


def test_check_exclude():
    div, iso = Kind.DIVISORIAL, Kind.ISOLATED
    assert check_exclude(make_neighborhood(Case.C2212, div)) == GORENSTEIN_ONLY
    assert check_exclude(make_neighborhood(Case.C2212, iso)) == UNCONSTRAINED
    assert check_exclude(make_neighborhood(Case.C2213, iso, k=1)) == UNCONSTRAINED
    assert check_exclude(make_neighborhood(Case.C2211, iso, m=2, k=5)) == GORENSTEIN_ONLY
    assert check_exclude(make_neighborhood(Case.C2211, div, m=3, k=1)) == GORENSTEIN_ONLY
    assert check_exclude(make_neighborhood(Case.C2211, div, m=4, k=1)) == UNCONSTRAINED
    assert check_exclude(make_neighborhood(Case.C225, div)) == GORENSTEIN_ONLY
    assert check_exclude(make_neighborhood(Case.C221P3, div)) == GORENSTEIN_ONLY


def test_iter_param_dicts():
    assert list(iter_param_dicts(Case.C2212, Bounds(12, 12))) == [{}]
    ms = [d["m"] for d in iter_param_dicts(Case.C222, Bounds(9, 3))]
    assert ms == [5, 7, 9]
    dicts = list(iter_param_dicts(Case.C224, Bounds(3, 2)))
    assert len(dicts) == 10  # unordered pairs over 4 slot values
    for d in dicts:
        assert (d["r1"], d["k1"]) <= (d["r2"], d["k2"])
    assert len(set(tuple(sorted(d.items())) for d in dicts)) == 10
    c = list(iter_param_dicts(Case.C2211, Bounds(3, 2)))
    assert c == [
        {"m": 2, "k": 1}, {"m": 2, "k": 2},
        {"m": 3, "k": 1}, {"m": 3, "k": 2},
    ]


def test_param_ranges():
    b = Bounds(12, 12)
    assert param_ranges(Case.C2211, b) == {"m": (2, 12), "k": (1, 12)}
    assert param_ranges(Case.C223, b) == {"m": (3, 12), "k": (1, 12)}
    assert param_ranges(Case.C224, b) == {
        "r1": (2, 12), "k1": (1, 12), "r2": (2, 12), "k2": (1, 12),
    }
    assert param_ranges(Case.C2212, b) == {}

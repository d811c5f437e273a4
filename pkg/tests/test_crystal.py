import json
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringtoric import crystal
from stringtoric.crystal import (
    CrystalElement,
    build_crystal,
    certify_cone,
    conic_hull,
    crystal_lattice_check,
    crystal_strings,
    crystal_weight_mult,
    empirical_string_cone,
    semistandard_tableaux,
    string_coords,
    weight_to_partition,
)
from stringtoric.errors import CertificationFailed, NotReduced, ShapeTooTall
from stringtoric.exactgeom import ConeH, cone_from_rays, same_set
from stringtoric.rootdata import build_root_system
from stringtoric.stringdata import StringCone, builtin_cone, pi_lambda

from helpers import words_of

weights2 = st.tuples(st.integers(0, 2), st.integers(0, 2))
weights3 = st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(0, 2))


def test_tableau_counts_match_hook_content_examples():
    # shape (2,1) in 3 letters: 8; shape (1) in 4 letters: 4; shape (2,2) in 3 letters: 6
    assert len(list(semistandard_tableaux((2, 1), 3))) == 8
    assert len(list(semistandard_tableaux((1,), 4))) == 4
    assert len(list(semistandard_tableaux((2, 2), 3))) == 6


def test_partition_round_trip():
    assert weight_to_partition((1, 0, 2)) == (3, 2, 2, 0)
    assert crystal.partition_to_weight((3, 2, 2, 0)) == (1, 0, 2)


@settings(max_examples=20, deadline=None)
@given(st.one_of(weights2.map(lambda w: ("A2", w)), weights3.map(lambda w: ("A3", w))))
def test_crystal_size_is_weyl_dim(case):
    name, lam = case
    rs = build_root_system(name)
    g = build_crystal(weight_to_partition(lam), rs.rank)
    assert len(g) == rs.weyl_dim(lam)


@settings(max_examples=15, deadline=None)
@given(weights3)
def test_operator_axioms(lam):
    rank = 3
    g = build_crystal(weight_to_partition(lam), rank)
    cart = build_root_system("A3").cartan
    for b in g.elements:
        wt = b.weight(rank)
        for i in range(1, rank + 1):
            assert b.phi(i) - b.epsilon(i) == wt[i - 1]
            c = b.f(i)
            if c is not None:
                assert c.e(i) == b
                assert c.weight(rank) == tuple(w - cart[j][i - 1] for j, w in enumerate(wt))
            d = b.e(i)
            if d is not None:
                assert d.f(i) == b


def test_highest_element_and_edges():
    g = build_crystal((2, 1, 0), 2)
    assert g.highest.tableau == ((1, 1), (2,))
    assert g.elements[g.edges[(0, 1)]].tableau == ((1, 2), (2,))
    assert (0, 2) not in g.edges or g.elements[g.edges[(0, 2)]].tableau == ((1, 1), (3,))


def test_shape_too_tall():
    with pytest.raises(ShapeTooTall):
        build_crystal((1, 1, 1, 1), 2)


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("A2", (2, 1)), ("A3", (1, 1, 1)), ("A3", (0, 2, 1))])
def test_string_weight_relation(name, lam):
    rs = build_root_system(name)
    for word in words_of(name):
        for t in semistandard_tableaux(weight_to_partition(lam), rs.rank + 1):
            b = CrystalElement(t)
            s = string_coords(b, word)
            assert pi_lambda(rs, word, lam, s) == tuple(-x for x in b.weight(rs.rank))


@pytest.mark.parametrize("name,lam", [("A2", (2, 1)), ("A3", (1, 0, 1)), ("A3", (2, 0, 0))])
def test_weight_multiplicities_against_freudenthal(name, lam):
    rs = build_root_system(name)
    part = weight_to_partition(lam)
    for mu, m in rs.weight_multiplicities(lam).items():
        assert crystal_weight_mult(part, mu, rs.rank) == m
    assert crystal_weight_mult(part, (7,) * rs.rank, rs.rank) == 0


def test_strings_are_injective_for_every_a3_word():
    rs = build_root_system("A3")
    part = weight_to_partition((1, 1, 1))
    for word in words_of("A3"):
        s = crystal_strings(part, rs.rank, word)
        assert len(set(s)) == len(s) == rs.weyl_dim((1, 1, 1))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=10))
def test_conic_hull_matches_cone_from_rays(pts):
    if not any(any(p) for p in pts):
        return
    c = conic_hull(3, pts)
    assert same_set(c, cone_from_rays(3, [p for p in pts if any(p)]))
    assert all(c.contains(p) for p in pts)


def test_empirical_cone_of_standard_word_is_the_gt_cone():
    rs = build_root_system("A3")
    emp = empirical_string_cone(rs, rs.standard_word)
    assert same_set(emp.cone, builtin_cone(rs, rs.standard_word).cone)
    assert emp.certification["passed"] and emp.certification["stable"]


def test_certification_rejects_an_oversized_cone():
    rs = build_root_system("A2")
    orthant = ConeH.from_normals(3, [tuple(-1 if k == i else 0 for k in range(3)) for i in range(3)])
    sc = StringCone(rs, (1, 2, 1), orthant, "external-file")
    # too coarse at degree 1, caught at degree 2
    assert certify_cone(sc, 1)["passed"]
    report = certify_cone(sc, 2)
    assert not report["passed"]
    assert report["failures"][0] == {"lambda": [2, 0], "lattice_points": 7, "weyl_dim": 6}


def test_empirical_rejects_other_types_and_bad_words():
    with pytest.raises(CertificationFailed):
        empirical_string_cone(build_root_system("C2"), (1, 2, 1, 2))
    with pytest.raises(NotReduced):
        empirical_string_cone(build_root_system("A2"), (1, 1, 2))


def test_lattice_check_reports_equality():
    rs = build_root_system("A2")
    res = crystal_lattice_check(rs, (1, 1), (1, 2, 1), builtin_cone(rs, (1, 2, 1)))
    assert res["equal"] and res["crystal_size"] == res["lattice_points"] == 8


def test_crystal_dump_is_json():
    data = json.loads(crystal.crystal_dump((1, 0, 0), 2, [(1, 2, 1), (2, 1, 2)]))
    assert len(data) == 3
    assert set(data[0]["strings"]) == {"1,2,1", "2,1,2"}
    assert [d["tableau"] for d in data] == [[[1]], [[2]], [[3]]]


def test_every_string_lies_in_the_box():
    # entries of strings of B(rho) are bounded by the rho pairings of the betas
    rs = build_root_system("A2")
    for word in words_of("A2"):
        for s in crystal_strings((2, 1, 0), 2, word):
            assert all(0 <= x <= 2 for x in s)

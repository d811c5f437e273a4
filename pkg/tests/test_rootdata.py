from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringtoric.errors import BudgetExceeded, NotARoot, NotDominant, NotReduced, UnknownType
from stringtoric.rootdata import build_root_system, parse_type, parse_weight, parse_word

# |positive roots| and |W| from the classification tables
ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "D5": 20,
               "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
WEYL_ORDERS = {"A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "C3": 48, "D4": 192, "G2": 12, "F4": 1152}
# reduced words of w0, known counts
WORD_COUNTS = {"A1": 1, "A2": 2, "A3": 16, "A4": 768, "B2": 2, "C2": 2, "G2": 2, "B3": 42}


@pytest.mark.parametrize("name,count", sorted(ROOT_COUNTS.items()))
def test_number_of_positive_roots(name, count):
    assert build_root_system(name).num_positive_roots == count


@pytest.mark.parametrize("name,order", sorted(WEYL_ORDERS.items()))
def test_weyl_order(name, order):
    assert build_root_system(name).weyl_order == order


@pytest.mark.parametrize("name,count", sorted(WORD_COUNTS.items()))
def test_reduced_word_counts(name, count):
    assert sum(1 for _ in build_root_system(name).all_reduced_words()) == count


def test_word_budget(monkeypatch):
    monkeypatch.setenv("SPW_BUDGET", "words=10")
    with pytest.raises(BudgetExceeded):
        list(build_root_system("A3").all_reduced_words())


def test_cartan_matrices():
    assert build_root_system("A2").cartan == ((2, -1), (-1, 2))
    # alpha_2 long in C2: <alpha_2, alpha_1^vee> = -2
    assert build_root_system("C2").cartan == ((2, -2), (-1, 2))
    assert build_root_system("G2").cartan == ((2, -3), (-1, 2))


def test_e6_labeling_is_chain_5_4_3_2_6_with_1_on_3():
    c = build_root_system("E6").cartan
    edges = {(i + 1, j + 1) for i in range(6) for j in range(i + 1, 6) if c[i][j]}
    assert edges == {(4, 5), (3, 4), (2, 3), (2, 6), (1, 3)}


@pytest.mark.parametrize("name,weight,dim", [
    ("A2", (1, 1), 8),
    ("A3", (1, 1, 1), 64),
    ("B2", (1, 1), 16),
    ("G2", (1, 0), 7),
    ("G2", (0, 1), 14),
    ("F4", (0, 0, 0, 1), 26),
    ("F4", (1, 0, 0, 0), 52),
    ("E6", (0, 0, 0, 0, 1, 0), 27),
    ("E6", (0, 0, 0, 0, 0, 1), 27),
    ("E6", (1, 0, 0, 0, 0, 0), 78),
    ("E6", (0, 0, 1, 0, 0, 0), 2925),
    ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
    ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
])
def test_weyl_dimension(name, weight, dim):
    assert build_root_system(name).weyl_dim(weight) == dim


def test_weyl_dim_needs_dominant():
    with pytest.raises(NotDominant):
        build_root_system("A2").weyl_dim((1, -1))


small = st.sampled_from(["A1", "A2", "A3", "B2", "C2", "G2", "B3"])


@settings(max_examples=30, deadline=None)
@given(small, st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_freudenthal_sums_to_weyl_dim(name, coords):
    rs = build_root_system(name)
    lam = tuple(coords[: rs.rank])
    assert sum(rs.weight_multiplicities(lam).values()) == rs.weyl_dim(lam)


@settings(max_examples=30, deadline=None)
@given(small, st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_orbit_stabilizer(name, coords):
    rs = build_root_system(name)
    lam = tuple(coords[: rs.rank])
    # the stabilizer of a dominant weight is generated by the s_i with lam_i = 0
    gens = [i + 1 for i, x in enumerate(lam) if x == 0]
    # act on rho to count stabilizer elements faithfully
    seen = {rs.rho}
    frontier = [rs.rho]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in gens:
                nu = rs.simple_reflection(i, mu)
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    assert len(rs.weyl_orbit(lam)) * len(seen) == rs.weyl_order


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_minuscule_weights_have_only_extremal_weights(name):
    rs = build_root_system(name)
    found = set()
    for i in range(1, rs.rank + 1):
        w = rs.fundamental_weight(i)
        if set(rs.weight_multiplicities(w)) == rs.weyl_orbit(w):
            found.add(w)
    assert found == rs.minuscule_weights()


def test_e6_minuscule_labels():
    rs = build_root_system("E6")
    assert rs.minuscule_weights() == {rs.fundamental_weight(5), rs.fundamental_weight(6)}


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "G2", "A4"]), st.integers(0, 40))
def test_beta_sequence_is_a_bijection_onto_positive_roots(name, k):
    rs = build_root_system(name)
    word = next(islice(rs.all_reduced_words(), k % 40, None), rs.w0_word)
    betas = rs.beta_sequence(word)
    assert sorted(betas) == sorted(rs.positive_roots)


def test_beta_sequence_of_non_reduced_word():
    rs = build_root_system("A2")
    with pytest.raises(NotReduced):
        rs.beta_sequence((1, 1, 2))
    assert not rs.is_reduced((1, 2))


@pytest.mark.parametrize("name", ["A3", "D4", "E6"])
def test_rho_pairing_is_height_when_simply_laced(name):
    rs = build_root_system(name)
    assert all(rs.pairing(rs.rho, b) == sum(b) for b in rs.positive_roots)


def test_pairing_coroot_in_nonsimply_laced_case():
    rs = build_root_system("C2")
    # long root alpha_2, short alpha_1; alpha_1 + alpha_2 is short, 2 alpha_1 + alpha_2 long
    assert rs.pairing((0, 1), (1, 1)) == 2
    assert rs.pairing((1, 0), (2, 1)) == 1
    with pytest.raises(NotARoot):
        rs.pairing((1, 1), (1, 2))


def test_dual_weight():
    assert build_root_system("A3").dual_weight((1, 2, 3)) == (3, 2, 1)
    assert build_root_system("D4").dual_weight((1, 2, 3, 4)) == (1, 2, 3, 4)
    assert build_root_system("D5").dual_weight((0, 0, 0, 1, 2)) == (0, 0, 0, 2, 1)
    e6 = build_root_system("E6")
    assert e6.dual_weight(e6.fundamental_weight(5)) == e6.fundamental_weight(6)


def test_standard_word():
    assert build_root_system("A3").standard_word == (1, 2, 1, 3, 2, 1)


def test_dominant_conjugate_and_order():
    rs = build_root_system("A2")
    assert rs.dominant_conjugate((-1, 2)) == (1, 1)
    assert rs.is_below((0, 0), (1, 1))
    assert not rs.is_below((1, 0), (1, 1))


def test_parsers():
    assert parse_type("a3") == ("A", 3)
    with pytest.raises(UnknownType):
        parse_type("Q3")
    with pytest.raises(UnknownType):
        build_root_system("E9")
    assert parse_weight("1, 1/2", 2) == (1, Fraction(1, 2))
    assert parse_word("1,2,1") == (1, 2, 1)

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratliff_rush import oracle
from ratliff_rush.errors import BoundExceeded, EmptyGenerators, GcdNotOne, NotClosed, NotMember
from ratliff_rush.semigroup import NATURALS, NumericalSemigroup, format_cofinite, semigroup


def test_construction_6_9_11(S6911):
    assert S6911.min_gens == (6, 9, 11)
    # conductor 26 from the brute-force closure
    assert oracle.o_conductor([6, 9, 11]) == 26
    assert S6911.conductor == 26
    assert S6911.small_elements[:8] == (0, 6, 9, 11, 12, 15, 17, 18)


def test_construction_4_5_11(S4511):
    assert S4511.small_elements == (0, 4, 5)
    assert S4511.conductor == 8
    assert S4511.describe() == "{0,4,5,8,→}"


def test_naturals():
    assert NATURALS.conductor == 0
    assert NATURALS.frobenius == -1
    assert NATURALS.small_elements == ()
    assert 0 in NATURALS and 7 in NATURALS


def test_redundant_generators_dropped():
    assert semigroup(2, 3) == semigroup(2, 3, 4)
    assert semigroup(2, 3, 4).min_gens == (2, 3)
    assert semigroup(6, 9, 11, 12, 15).min_gens == (6, 9, 11)


@pytest.mark.parametrize("gens, exc", [([], EmptyGenerators), ([4, 6], GcdNotOne), ([6, 9, 12], GcdNotOne)])
def test_construction_errors(gens, exc):
    with pytest.raises(exc):
        NumericalSemigroup.from_generators(gens)


def test_bound_guard(monkeypatch):
    monkeypatch.setenv("RATLIFF_RUSH_NMAX", "100")
    with pytest.raises(BoundExceeded):
        NumericalSemigroup.from_generators([11, 13])


def test_membership(S457, S6911):
    assert 6 not in S457
    assert 25 not in S6911
    assert 0 in S6911 and 0 in S457
    assert -3 not in S6911
    assert S6911.contains(26)


def test_apery(S6911):
    table = S6911.apery()
    # residue-indexed; the same six numbers as the brute-force scan
    expected = oracle.o_apery(oracle.o_semigroup([6, 9, 11], 80), 6)
    assert list(table) == expected == [0, 31, 20, 9, 22, 11]
    assert table.as_set() == {0, 9, 20, 11, 22, 31}
    assert list(NATURALS.apery(5)) == [0, 1, 2, 3, 4]


def test_apery_of_blowup_of_pullback_semigroup():
    T = semigroup(9, 11, 15, 17, 21, 23)
    B = T.blowup()
    assert B == semigroup(2, 9)
    assert B.describe() == "{0,2,4,6,8,→}"
    assert list(B.apery(9)) == [0, 10, 2, 12, 4, 14, 6, 16, 8]


def test_blowup_examples(S6911):
    assert S6911.blowup() == semigroup(3, 5)
    assert NATURALS.blowup() == NATURALS
    # n = 4 member of the S_n family: T_4 = ⟨a, b, c_3, c_4, a+d, b+d⟩
    a, b, c3, c4 = 8, 15, 50, 57
    T4 = semigroup(8, 15, 36, 43, 50, 57)
    assert T4.blowup() == semigroup(a, b - a, c3 - a, c4 - a)


def test_from_elements():
    E = [9, 11, 15, 17, 18, 20, 21, 22, 23, 24]
    assert NumericalSemigroup.from_elements([0, *E], 26) == semigroup(9, 11, 15, 17, 21, 23)
    assert NumericalSemigroup.from_elements([0], 1) == NATURALS
    with pytest.raises(NotClosed):
        NumericalSemigroup.from_elements([0, 3, 4], 8)
    with pytest.raises(NotClosed):
        NumericalSemigroup.from_elements([3], 5)


def test_order(S6911, S4511):
    assert oracle.o_order([6, 9, 11], 18) == 3
    assert S6911.order(18) == 3
    assert S6911.order(0) == 0
    assert S4511.order(11) == 1
    with pytest.raises(NotMember):
        S6911.order(25)


def test_text_and_json(S6911):
    assert NumericalSemigroup.parse("6,9,11") == S6911
    assert NumericalSemigroup.parse("⟨6, 9, 11⟩") == S6911
    assert S6911.to_text() == "6,9,11"
    assert S6911.to_json() == {"gens": [6, 9, 11], "conductor": 26, "multiplicity": 6}
    assert NumericalSemigroup.from_json(S6911.to_json()) == S6911
    assert format_cofinite([9, 11], 13, ascii=True) == "{9,11,13,->}"


semigroups = st.lists(st.integers(2, 25), min_size=1, max_size=4).map(
    lambda xs: sorted(set(xs) | {max(xs) + 1})  # consecutive pair forces gcd 1
).map(NumericalSemigroup.from_generators)


@settings(max_examples=80, deadline=None)
@given(semigroups)
def test_membership_matches_closure_oracle(S):
    end = 3 * S.conductor + S.multiplicity * S.min_gens[-1] + 1
    brute = oracle.o_semigroup(S.min_gens, end)
    assert all((z in S) == (z in brute) for z in range(end))


@settings(max_examples=80, deadline=None)
@given(semigroups)
def test_frobenius_from_apery(S):
    assert S.frobenius == max(S.apery()) - S.multiplicity


@settings(max_examples=60, deadline=None)
@given(semigroups)
def test_blowup_matches_stabilised_differences(S):
    brute = oracle.o_blowup(S.min_gens, S.min_gens)
    B = S.blowup()
    end = max(brute.end, 3 * S.conductor + 1)
    assert all((z in B) == (z in brute) for z in range(-S.multiplicity, end))


@settings(max_examples=60, deadline=None)
@given(semigroups)
def test_from_elements_round_trip(S):
    assert NumericalSemigroup.from_elements(S.small_elements, S.conductor) == S


@settings(max_examples=40, deadline=None)
@given(semigroups)
def test_order_superadditive_and_matches_enumeration(S):
    upto = max(S.conductor, 1)
    table = S.order_table(2 * upto)
    members = [s for s in range(upto + 1) if s in S]
    for s1 in members:
        for s2 in members:
            assert table[s1 + s2] >= table[s1] + table[s2]
    for s in members[:15]:
        assert table[s] == oracle.o_order(S.min_gens, s)


@settings(max_examples=60, deadline=None)
@given(semigroups)
def test_minimal_generators_are_minimal(S):
    assert math.gcd(*S.min_gens) == 1
    for g in S.min_gens:
        assert not any(0 < t < g and t in S and (g - t) in S for t in range(1, g))
    # small elements closed under addition within [0, c)
    small = set(S.small_elements)
    for x in small:
        for y in small:
            if x + y < S.conductor:
                assert x + y in small

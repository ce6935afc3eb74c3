import json
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from lucasmagic.construct import canonical_parameters, lucas
from lucasmagic.enumeration import (
    CensusRow,
    census,
    double_factorial_odd,
    duplicate_element_check,
    enumerate_fundamental,
    fnc_integer_solutions,
    frierson_fundamental_formula,
    frierson_total,
    lucas_fundamental_formula,
    lucas_total,
    natural_parameter_assignments,
    sv_class_count,
)
from lucasmagic.verify import check_natural, fnc_parameter_equation


def test_counting_formulas():
    assert [lucas_total(l) for l in (1, 2, 3)] == [8, 384, 46080]
    assert [frierson_total(l) for l in (1, 2, 3)] == [2, 24, 720]
    assert [lucas_fundamental_formula(l) for l in (1, 2, 3)] == [1, 48, 5760]
    assert [frierson_fundamental_formula(l) for l in (1, 2, 3)] == [1, 12, 360]
    for l in (1, 2, 3, 4):
        assert lucas_total(l) == 2 ** (2 * l) * factorial(2 * l)
        assert frierson_total(l) == factorial(2 * l)
        assert lucas_fundamental_formula(l) == lucas_total(l) // 8
        assert frierson_fundamental_formula(l) == frierson_total(l) // 2


def test_double_factorial():
    assert [double_factorial_odd(l) for l in (1, 2, 3, 4)] == [1, 3, 15, 105]


def test_paired_convention_count():
    # the alternative dedup (independent within-pair swaps): (2l)!/2^l
    from lucasmagic.enumeration import frierson_paired_convention_count

    assert [frierson_paired_convention_count(l) for l in (1, 2, 3)] == [1, 6, 90]
    for l in (1, 2, 3, 4):
        assert frierson_paired_convention_count(l) == factorial(2 * l) // 2 ** l


def test_assignments_level1():
    got = list(natural_parameter_assignments(1))
    assert len(got) == 8
    assert set(got) == {
        ((4, v, y),)
        for v, y in [(1, 3), (3, 1), (-1, 3), (1, -3), (-1, -3), (-3, 1), (3, -1), (-3, -1)]
    }
    for triples in got:
        assert check_natural(lucas(triples))


def test_assignments_carry_the_gauge():
    for triples in natural_parameter_assignments(2):
        for c, v, y in triples:
            assert c == abs(v) + abs(y)
        flat = [abs(x) for t in triples for x in t[1:]]
        assert sorted(flat) == [1, 3, 9, 27]


def test_frierson_assignments_are_unsigned():
    got = list(natural_parameter_assignments(1, "frierson"))
    assert set(got) == {((4, 1, 3),), ((4, 3, 1),)}
    with pytest.raises(ValueError):
        next(natural_parameter_assignments(1, "sudoku"))


def test_enumerate_level1():
    res = enumerate_fundamental(1)
    assert res.total_assignments == 8
    assert res.fundamental_count == 1
    assert res.representatives == (((4, -3, -1),),)
    assert res.sv_class_count == 1


def test_enumerate_level2_both_families():
    lu = enumerate_fundamental(2)
    assert lu.fundamental_count == 48
    assert len(lu.representatives) == 48
    fr = enumerate_fundamental(2, "frierson")
    assert fr.fundamental_count == 12
    assert len(fr.representatives) == 12
    # frierson orbits are a subset of the lucas ones
    fr_canon = {canonical_parameters(t) for t in fr.representatives}
    lu_canon = set(lu.representatives)
    assert fr_canon <= lu_canon
    for rep in lu.representatives:
        assert rep == canonical_parameters(rep)
        assert check_natural(lucas(rep))


def test_enumerate_beyond_the_ceiling_uses_formulas():
    res = enumerate_fundamental(4)
    assert res.representatives is None
    assert res.fundamental_count == 2 ** 8 * factorial(8) // 8
    with pytest.raises(ValueError):
        enumerate_fundamental(4, emit_matrices=True)


def test_enumeration_result_json():
    obj = enumerate_fundamental(1).to_json()
    assert obj["fundamental_count"] == 1
    assert obj["representatives"] == [[[4, -3, -1]]]
    json.dumps(obj)


def test_fnc_solutions():
    assert fnc_integer_solutions(1) == [(1, 3)]
    assert fnc_integer_solutions(2) == [(1, 3, 9, 27)]


def test_fnc_solutions_satisfy_both_moment_equations():
    for level in (1, 2):
        for sol in fnc_integer_solutions(level, require_distinct=False):
            assert sum(x * x for x in sol) == fnc_parameter_equation(level)
            assert sum(sol) == (9 ** level - 1) // 2
            assert all(x > 0 for x in sol)
            assert list(sol) == sorted(sol)


def test_fnc_moments_stop_pinning_at_level3():
    sols = fnc_integer_solutions(3)
    assert (1, 3, 9, 27, 81, 243) in sols
    assert len(sols) > 1
    # every impostor dies on the duplicate-element check
    for sol in sols:
        triples = tuple(
            (v + y, v, y) for v, y in zip(sol[0::2], sol[1::2])
        )
        assert duplicate_element_check(triples) == (sol == (1, 3, 9, 27, 81, 243))


def test_duplicate_element_check():
    assert duplicate_element_check(((4, 3, 1),))
    assert not duplicate_element_check(((2, 1, 1),))
    assert duplicate_element_check(((4, 1, 3), (36, 9, 27)))


def test_sv_class_count():
    assert [sv_class_count(l) for l in (1, 2, 3)] == [1, 3, 15]
    assert sv_class_count(5, materialize=False) == 945
    assert sv_class_count(2, materialize=True) == 3


CENSUS = {
    1: (3, 12, 1, 1, 3, 1),
    2: (9, 360, 48, 12, 5, 3),
    3: (27, 9828, 5760, 360, 7, 15),
    4: (81, 265680, 1290240, 20160, 9, 105),
    5: (243, 7174332, 464486400, 1814400, 11, 945),
    6: (729, 193709880, 245248819200, 239500800, 13, 10395),
}


@pytest.mark.parametrize("level,row", sorted(CENSUS.items()))
def test_census_rows(level, row):
    got = census(level)
    assert (
        got.order,
        got.mu,
        got.lucas_fundamental,
        got.frierson_fundamental,
        got.rank,
        got.sv_classes,
    ) == row
    assert got.level == level


def test_census_row_json():
    obj = census(2).to_json()
    assert obj == {
        "level": 2,
        "order": 9,
        "mu": 360,
        "lucas_fundamental": 48,
        "frierson_fundamental": 12,
        "rank": 5,
        "sv_classes": 3,
    }


@given(st.integers(min_value=1, max_value=6))
def test_census_is_consistent_with_the_formulas(level):
    row = census(level)
    assert row.order == 3 ** level
    assert row.rank == 2 * level + 1
    assert row.lucas_fundamental == lucas_fundamental_formula(level)
    assert row.frierson_fundamental == frierson_fundamental_formula(level)
    assert row.sv_classes == double_factorial_odd(level)
    # mu of the natural square of that order
    n = row.order
    assert row.mu == n * (n * n - 1) // 2


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(natural_parameter_assignments(2))))
def test_natural_assignments_build_natural_squares(triples):
    assert duplicate_element_check(triples)
    assert check_natural(lucas(triples))

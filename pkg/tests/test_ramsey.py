import json

import pytest

from gaplab.ramsey import (
    MAYBE,
    NO,
    YES,
    PartialValue,
    alpha_of,
    default_table,
    epsilon_of,
    exact_horizon,
    find_twins,
    is_ramsey_number,
    is_ramsey_perfect,
    load_table,
    perfect_numbers,
    table_from_json,
    validate_table,
)


@pytest.fixture(scope="module")
def table():
    return default_table()


def test_default_values(table):
    assert [table.r(l).value for l in range(1, 10)] == [1, 3, 6, 9, 14, 18, 23, 28, 36]
    assert table.r(10) == PartialValue(40, 43)
    assert table.r(16).hi is None
    assert table.r44.value == 18
    assert table.r(99).is_unknown


def test_default_table_is_consistent(table):
    assert validate_table(table) == []


def test_validation_flags_bad_entries(table):
    rules = {v.rule for v in validate_table(table.with_entry(5, PartialValue.exact(20)))}
    assert {"increasing", "consecutive-upper"} <= rules
    bad = validate_table(table.with_entry(7, PartialValue.exact(21)))
    assert [v.rule for v in bad] == ["span-4"]


def test_alpha_and_epsilon(table):
    assert alpha_of(13, table).value == 4
    assert alpha_of(10, table).value == 4
    assert alpha_of(40, table) == PartialValue(9, 10)
    assert alpha_of(0, table).value == 0
    assert epsilon_of(18, table) == YES
    assert epsilon_of(10, table) == YES
    assert epsilon_of(13, table) == NO
    assert exact_horizon(table) == 39


def test_alpha_against_definition(table):
    # alpha(n) = #{l : R(3,l) <= n} wherever the table is exact
    for n in range(1, 40):
        assert alpha_of(n, table).value == sum(1 for l in range(1, 10) if table.r(l).value <= n)


def test_ramsey_number_membership(table):
    assert is_ramsey_number(14, table) == YES
    assert is_ramsey_number(15, table) == NO
    assert is_ramsey_number(41, table) == MAYBE


def test_ramsey_perfect(table):
    verdict, cert = is_ramsey_perfect(10, table)
    assert verdict == YES
    assert (cert.n1, cert.n2, cert.alpha1, cert.alpha2) == (5, 5, 2, 2)
    assert is_ramsey_perfect(16, table) == (NO, None)
    assert is_ramsey_perfect(40, table)[0] == MAYBE
    assert perfect_numbers(table, 39) == [10]


def test_twins(table):
    assert find_twins(table) == [(3, 6), (6, 9)]
    assert find_twins(table.with_entry(5, PartialValue.exact(12))) == [(3, 6), (6, 9), (9, 12)]


def test_subadditivity_of_alpha(table):
    for n in range(1, 40):
        for m in range(1, 40 - n):
            assert alpha_of(n + m, table).value <= alpha_of(n, table).value + alpha_of(m, table).value


def test_partial_value_arithmetic():
    a, b = PartialValue(1, 3), PartialValue(2, None)
    assert a + b == PartialValue(3, None)
    assert a - 1 == PartialValue(0, 2)
    assert 5 - a == PartialValue(2, 4)
    assert a.hull(PartialValue.exact(7)) == PartialValue(1, 7)
    assert a.meet(b) == PartialValue(2, 3)
    assert str(PartialValue(None, 4)) == "[-inf, 4]"
    assert YES.verdict() == "yes" and MAYBE.verdict() == "unknown"
    with pytest.raises(ValueError):
        PartialValue(3, 1)


def test_table_json_round_trip(table, tmp_path):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(table.to_json()))
    assert load_table(str(p)) == table


@pytest.mark.parametrize("doc", [
    {"r3": []},
    {"r3": [{"l": 1, "lo": 1}, {"l": 3, "lo": 6}]},
    {"r3": [{"l": 1, "lo": 2, "hi": 1}]},
])
def test_table_load_errors(doc):
    with pytest.raises(ValueError):
        table_from_json(doc)

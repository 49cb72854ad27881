import pytest

from gaplab.enumeration import census
from gaplab.formulas import (
    KNOWN_S,
    PUBLISHED_S2,
    alpha_increment_bound,
    biro_beta,
    check_alpha_increment,
    gap2_value,
    gap_bounds,
    s2_discrepancy_notices,
    s2_sequence,
    s_bounds,
)
from gaplab.ramsey import PartialValue, default_table, is_ramsey_number


@pytest.fixture(scope="module")
def table():
    return default_table()


def _v(fv):
    return fv.value


def test_gap2_values(table):
    assert _v(gap2_value(10, table)).value == 2
    assert _v(gap2_value(17, table)).value == 4
    assert _v(gap2_value(40, table)).value == 11
    assert _v(gap2_value(41, table)) == PartialValue(11, 12)
    assert _v(gap2_value(0, table)).value == 0


def test_gap2_matches_triangle_free_census(table):
    for n in range(1, 11):
        assert _v(gap2_value(n, table)).value == census(n, triangle_free=True).max_gap


def test_gap2_is_monotone_with_unit_steps(table):
    vals = [_v(gap2_value(n, table)).value for n in range(0, 40)]
    assert all(0 <= b - a <= 1 for a, b in zip(vals, vals[1:]))


def test_s2_sequence(table):
    seq = [fv.value.value for fv in s2_sequence(11, table)]
    assert seq == [5, 10, 13, 17, 21, 25, 27, 31, 33, 35, 39]
    for i, s in enumerate(seq, 1):
        # s2(t) is the first order where gap2 reaches t
        assert _v(gap2_value(s, table)).value == i
        assert _v(gap2_value(s - 1, table)).value == i - 1
    notes = s2_discrepancy_notices(s2_sequence(11, table))
    assert len(notes) == 1 and "s2(7)" in notes[0]
    assert PUBLISHED_S2[6] == 29


def test_s2_sequence_goes_partial_beyond_the_exact_table(table):
    seq = s2_sequence(14, table)
    assert not seq[11].value.is_exact and seq[11].value.contains(42)
    with pytest.raises(ValueError):
        s2_sequence(0, table)


def test_gap_bounds(table):
    assert _v(gap_bounds(12, table)).value == 2
    assert _v(gap_bounds(35, table)).value == 10
    assert _v(gap_bounds(100, table)) == PartialValue(32, 38)


def test_gap_bounds_contain_census_values(table):
    for n in range(1, 11):
        assert _v(gap_bounds(n, table)).contains(census(n).max_gap)


def test_gap_bounds_are_monotone_and_dominate_gap2(table):
    prev = None
    for n in range(0, 80):
        g = _v(gap_bounds(n, table))
        g2 = _v(gap2_value(n, table))
        assert g.hi >= g2.lo
        if prev is not None:
            assert g.lo >= prev.lo and g.hi >= prev.hi
        prev = g


def test_s_bounds(table):
    assert _v(s_bounds(5, table)) == PartialValue(20, 21)
    assert _v(s_bounds(9, table)) == PartialValue(32, 33)
    assert _v(s_bounds(10, table)).value == 35
    for k, v in KNOWN_S.items():
        assert _v(s_bounds(k, table)).value == v
    with pytest.raises(ValueError):
        s_bounds(-1, table)


def test_s_bounds_consistent_with_gap_bounds(table):
    for k in range(1, 12):
        s = _v(s_bounds(k, table))
        # gap(n) < k below s(k) and gap(s(k)) >= k
        assert _v(gap_bounds(s.hi, table)).hi >= k
        assert _v(gap_bounds(s.lo - 1, table)).lo < k


def test_beta_intervals(table):
    assert _v(biro_beta(10, 6, table)) == PartialValue(4, 5)
    assert _v(biro_beta(13, 7, table)) == PartialValue(3, 4)
    for n in range(1, 12):
        assert _v(biro_beta(n, n, table)).contains(n)
    with pytest.raises(ValueError):
        biro_beta(10, 5, table)


def test_beta_against_census(table):
    for n in range(1, 10):
        row = census(n)
        for theta in range((n + 2) // 2, n + 1):
            least = row.min_alpha(theta)
            if least is not None:
                assert _v(biro_beta(n, theta, table)).contains(least), (n, theta, least)


def test_ramsey_numbers_are_not_in_the_image_of_gap2_inverse(table):
    seq = [fv.value.value for fv in s2_sequence(11, table)]
    for s in seq:
        assert is_ramsey_number(s, table).verdict() == "no"


def test_alpha_increment(table):
    assert [alpha_increment_bound(x) for x in (0, 12, 86)] == [0, 4, 14]
    with pytest.raises(ValueError):
        alpha_increment_bound(87)
    assert check_alpha_increment(table) == []


def test_provenance_is_recorded(table):
    fv = gap2_value(17, table)
    assert any("alpha(17)" in p for p in fv.provenance)
    assert fv.to_json()["value"] == {"lo": 4, "hi": 4}

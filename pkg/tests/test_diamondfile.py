import pytest
from hypothesis import given
from hypothesis import strategies as st

from og10hodge import (
    DuplicateEntry,
    ParseError,
    VirtualDiamond,
    goettsche,
    k3,
    parse_diamond,
    write_diamond,
)


def test_parse_minimal_unit_file():
    assert parse_diamond("hodge-diamond v1\n0 0 1") == VirtualDiamond.unit()


def test_write_k3_is_sorted_and_deterministic():
    expected = (
        "hodge-diamond v1\n"
        "0 0 1\n"
        "0 2 1\n"
        "1 1 20\n"
        "2 0 1\n"
        "2 2 1\n"
    )
    assert write_diamond(k3()) == expected


def test_comments_and_blank_lines_are_ignored():
    text = (
        "# leading comment\n"
        "\n"
        "hodge-diamond v1\n"
        "0 0 1  # the point class\n"
        "\n"
        "# trailing comment\n"
    )
    assert parse_diamond(text) == VirtualDiamond.unit()


def test_negative_multiplicities_round_trip():
    virtual = VirtualDiamond({(0, 0): 2, (1, 1): -3})
    assert parse_diamond(write_diamond(virtual)) == virtual


def test_zero_multiplicity_lines_are_pruned():
    assert parse_diamond("hodge-diamond v1\n1 1 0").is_zero()


def test_round_trip_of_a_large_diamond():
    d = goettsche(k3(), 5)
    assert parse_diamond(write_diamond(d)) == d


def test_missing_header_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_diamond("0 0 1\n")
    with pytest.raises(ParseError):
        parse_diamond("")


def test_malformed_entry_lines_carry_the_line_number():
    with pytest.raises(ParseError) as err:
        parse_diamond("hodge-diamond v1\n0 0\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_diamond("hodge-diamond v1\n0 0 1 7\n")
    with pytest.raises(ParseError):
        parse_diamond("hodge-diamond v1\na b c\n")
    with pytest.raises(ParseError):
        parse_diamond("hodge-diamond v1\n1.5 0 2\n")


def test_negative_bidegrees_are_rejected():
    with pytest.raises(ParseError):
        parse_diamond("hodge-diamond v1\n-1 0 1\n")


def test_duplicate_bidegrees_are_rejected():
    with pytest.raises(DuplicateEntry):
        parse_diamond("hodge-diamond v1\n0 0 1\n0 0 2\n")


@given(
    st.dictionaries(
        st.tuples(st.integers(0, 6), st.integers(0, 6)),
        st.integers(-50, 50),
        max_size=8,
    ).map(VirtualDiamond)
)
def test_round_trip_identity(d):
    assert parse_diamond(write_diamond(d)) == d

"""Tests for the value scales and the arithmetic between them."""

import pytest

from trustnet.scales import (
    Banding,
    DEFAULT_BANDING,
    OrdinalDegree,
    TrustTenths,
    degree_distance,
    degree_shift,
    tenths_to_degree,
    validate_shift,
)

VB, B, G, VG = (
    OrdinalDegree.VERY_BAD,
    OrdinalDegree.BAD,
    OrdinalDegree.GOOD,
    OrdinalDegree.VERY_GOOD,
)


# ── TrustTenths ──────────────────────────────────────────────────────


def test_tenths_valid_range():
    for i in range(11):
        assert TrustTenths(i).tenths == i


def test_tenths_rejects_out_of_range():
    with pytest.raises(ValueError):
        TrustTenths(-1)
    with pytest.raises(ValueError):
        TrustTenths(11)
    with pytest.raises(ValueError):
        TrustTenths(1.0)


def test_tenths_from_float_grid():
    assert TrustTenths.from_float(0.7).tenths == 7
    assert TrustTenths.from_float(0.0).tenths == 0
    assert TrustTenths.from_float(1.0).tenths == 10
    # literals carry binary representation error; still on-grid
    assert TrustTenths.from_float(0.3).tenths == 3


def test_tenths_from_float_rejects_off_grid():
    for bad in (0.75, -0.1, 1.1, 0.33):
        with pytest.raises(ValueError):
            TrustTenths.from_float(bad)


def test_tenths_parse_and_str():
    assert str(TrustTenths.parse("0.7")) == "0.7"
    assert str(TrustTenths.parse("1.0")) == "1.0"
    assert str(TrustTenths.parse(" 0.0 ")) == "0.0"
    with pytest.raises(ValueError):
        TrustTenths.parse("0.75")
    with pytest.raises(ValueError):
        TrustTenths.parse("high")


def test_tenths_ordering_and_value():
    assert TrustTenths(3) < TrustTenths(7)
    assert TrustTenths(7).value == pytest.approx(0.7)


# ── OrdinalDegree ────────────────────────────────────────────────────


def test_degree_tokens_round_trip():
    for degree in OrdinalDegree:
        assert OrdinalDegree.from_token(degree.token) is degree
    assert [d.token for d in OrdinalDegree] == ["vb", "b", "g", "vg"]
    with pytest.raises(ValueError):
        OrdinalDegree.from_token("meh")


def test_degree_total_order():
    assert VB < B < G < VG
    assert VG.rank == 3


# ── shifts ───────────────────────────────────────────────────────────


def test_degree_shift_examples():
    assert degree_shift(G, 1) is VG
    assert degree_shift(B, 0) is B
    assert degree_shift(VG, 2) is VG  # clamped at the top


def test_degree_shift_stays_on_scale():
    for degree in OrdinalDegree:
        for shift in range(-3, 4):
            assert 0 <= degree_shift(degree, shift).rank <= 3


def test_degree_distance_examples():
    assert degree_distance(G, B) == 1  # own trustworthy, reported untrustworthy
    assert degree_distance(VB, VG) == -3
    assert degree_distance(G, G) == 0


def test_shift_distance_round_trip():
    for own in OrdinalDegree:
        for recommended in OrdinalDegree:
            shift = degree_distance(own, recommended)
            assert degree_shift(recommended, shift) is own


def test_validate_shift_bounds():
    assert validate_shift(3) == 3
    assert validate_shift(-3) == -3
    for bad in (4, -4, True):
        with pytest.raises(ValueError):
            validate_shift(bad)


# ── banding ──────────────────────────────────────────────────────────


def test_default_banding_examples():
    assert tenths_to_degree(TrustTenths(7)) is G
    assert tenths_to_degree(TrustTenths(0)) is VB
    assert tenths_to_degree(TrustTenths(9)) is VG


def test_default_banding_full_map():
    expected = [VB, VB, VB, B, B, B, G, G, G, VG, VG]
    assert [tenths_to_degree(TrustTenths(i)) for i in range(11)] == expected


def test_banding_monotone():
    for banding in (DEFAULT_BANDING, Banding((1, 2, 3)), Banding((2, 5, 10))):
        degrees = [banding.degree_for(TrustTenths(i)).rank for i in range(11)]
        assert degrees == sorted(degrees)


def test_custom_banding():
    harsh = Banding((5, 8, 10))
    assert harsh.degree_for(TrustTenths(4)) is VB
    assert harsh.degree_for(TrustTenths(9)) is G
    assert harsh.degree_for(TrustTenths(10)) is VG


def test_banding_rejects_bad_cuts():
    for cuts in ((3, 3, 9), (6, 3, 9), (0, 5, 9), (3, 6, 11)):
        with pytest.raises(ValueError):
            Banding(cuts)

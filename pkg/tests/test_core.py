import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from juristat.core import (
    SplitSpec,
    TimeSeries,
    mse,
    parse_series_csv,
    serialize_series_csv,
    split,
)
from juristat.errors import (
    EmptySeries,
    InvalidValue,
    LengthMismatch,
    MalformedRow,
    NonContiguous,
    TooShort,
    UnsupportedFrequency,
)


def test_parse_first_rows():
    ts = parse_series_csv("yearMonth,count\n2000-01-01,12\n2000-02-01,222")
    assert ts.values == (12.0, 222.0)
    assert ts.start == (2000, 1)
    assert ts.frequency == 12


def test_parse_crlf_and_year_rollover():
    ts = parse_series_csv("yearMonth,count\r\n1999-11-01,1\r\n1999-12-01,2\r\n2000-01-01,3\r\n")
    assert ts.values == (1.0, 2.0, 3.0)
    assert ts.start == (1999, 11)
    assert ts.epoch_at(2) == (2000, 1)


def test_parse_yearly_detected():
    ts = parse_series_csv("yearMonth,count\n2000-01-01,5\n2001-01-01,6\n")
    assert ts.frequency == 1 and ts.start == (2000, 1)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("yearMonth,count\n", EmptySeries),
        ("", EmptySeries),
        ("yearMonth,count\n2000-01-01,1\n2000-03-01,2\n", NonContiguous),
        ("yearMonth,count\n2000-01-01,1\n2000-01-01,2\n", NonContiguous),
        ("yearMonth,count\n2000-02-01,1\n2000-01-01,2\n", NonContiguous),
        ("yearMonth,count\n2000-13-01,1\n", MalformedRow),
        ("yearMonth,count\n2000-01-01,abc\n", MalformedRow),
        ("yearMonth,count\n2000-01-01,-4\n", MalformedRow),
        ("yearMonth,count\n2000-01-01,1.5\n", MalformedRow),
        ("yearMonth,count\n2000-01-01\n", MalformedRow),
        ("date,value\n2000-01-01,1\n", MalformedRow),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_series_csv(text)


def test_serialize_single_row():
    assert serialize_series_csv(TimeSeries([12], 2000, 1, 12)) == "yearMonth,count\n2000-01-01,12\n"


def test_serialize_rejects_other_frequencies():
    with pytest.raises(UnsupportedFrequency):
        serialize_series_csv(TimeSeries([1, 2, 3], 2000, 1, 7))


def test_timeseries_invariants():
    with pytest.raises(EmptySeries):
        TimeSeries([], 2000, 1, 12)
    with pytest.raises(InvalidValue):
        TimeSeries([1.0, math.nan], 2000, 1, 12)
    with pytest.raises(InvalidValue):
        TimeSeries([1.0], 2000, 13, 12)
    with pytest.raises(InvalidValue):
        TimeSeries([1.0], 2000, 1, 0)


@pytest.mark.parametrize(
    "n, freq, frac, n_train, n_test",
    [
        (216, 12, 0.8, 172, 44),  # floor(172.8)
        (10, 1, 0.5, 5, 5),
        (100, 1, 0.29, 29, 71),
    ],
)
def test_split_lengths(n, freq, frac, n_train, n_test):
    train, test = split(TimeSeries(range(n), 2000, 1, freq), SplitSpec(frac))
    assert (len(train), len(test)) == (n_train, n_test)


def test_split_test_epoch():
    train, test = split(TimeSeries(range(216), 2000, 1, 12))
    assert test.start == (2014, 5)  # point 172 = 14 years + 4 months after Jan 2000


def test_split_too_short():
    with pytest.raises(TooShort):
        split(TimeSeries(range(24), 2000, 1, 12), SplitSpec(0.8))


@pytest.mark.parametrize("frac", [0.0, 1.0, -0.1, 1.5])
def test_splitspec_bounds(frac):
    with pytest.raises(InvalidValue):
        SplitSpec(frac)


def test_mse_examples():
    assert mse([1, 2, 3], [1, 2, 3]) == 0
    assert mse([1, 2, 3], [2, 3, 4]) == 1
    assert mse([1, 2, 3], [0, 0, 0]) == pytest.approx(14 / 3, abs=1e-15)


def test_mse_length_errors():
    with pytest.raises(LengthMismatch):
        mse([1, 2], [1])
    with pytest.raises(LengthMismatch):
        mse([], [])


finite = st.floats(-1e6, 1e6, allow_nan=False)


@given(st.lists(st.tuples(finite, finite), min_size=1, max_size=50), st.floats(-100, 100))
def test_mse_properties(pairs, c):
    a = [x for x, _ in pairs]
    b = [y for _, y in pairs]
    assert mse(a, b) >= 0
    assert mse(a, b) == mse(b, a)
    assert mse(a, a) == 0
    assert mse([c * x for x in a], [c * y for y in b]) == pytest.approx(
        c * c * mse(a, b), rel=1e-9, abs=1e-6
    )


@settings(max_examples=200)
@given(
    st.integers(1, 12).flatmap(
        lambda f: st.tuples(
            st.just(f),
            st.integers(1, f),
            st.lists(st.integers(0, 10**6), min_size=2 * f + 2, max_size=150),
            st.floats(0.05, 0.95),
        )
    )
)
def test_split_concatenation_is_identity(args):
    freq, period, values, frac = args
    series = TimeSeries(values, 2001, period, freq)
    try:
        train, test = split(series, SplitSpec(frac))
    except TooShort:
        return
    assert train.values + test.values == series.values
    assert train.start == series.start
    assert test.start == series.epoch_at(len(train))


@given(
    st.sampled_from([1, 12]).flatmap(
        lambda f: st.tuples(st.just(f), st.integers(1, f), st.lists(st.integers(0, 10**7), min_size=1, max_size=60))
    ),
    st.integers(1900, 2100),
)
def test_csv_round_trip(args, year):
    freq, period, values = args
    series = TimeSeries(values, year, period, freq)
    text = serialize_series_csv(series)
    back = parse_series_csv(text, frequency=freq)
    assert back == series
    assert serialize_series_csv(back) == text

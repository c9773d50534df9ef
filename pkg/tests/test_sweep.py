from fractions import Fraction

import pytest

from affinecounter.oracles import PromiseLabel
from affinecounter.sweep import HEADER, SweepError, judge, sweep
from affinecounter.zoo import build_end, build_manytwins, build_pal_npal

YES, NO, UNPROMISED = PromiseLabel.YES, PromiseLabel.NO, PromiseLabel.UNPROMISED


def test_end_sweep_small():
    report = sweep(build_end(), "end", 4)
    assert report.failures == 0
    assert len(report.rows) == 121
    assert report.max_error == 0
    tsv = report.to_tsv().splitlines()
    assert tsv[0].split("\t") == list(HEADER)
    assert tsv[1] == "ε\tNO\t0/1\t1/1\t0/1\tpass"
    assert tsv[-1] == "# max_error\t0/1"


def test_pal_npal_sweep():
    report = sweep(build_pal_npal(1), "pal-npal", 6, k=1)
    assert report.failures == 0
    # a non-palindrome has |e(x) - e(x reversed)| >= 2, so the error is at most 1/(4k+1)
    assert report.max_error == Fraction(1, 5)
    assert report.unpromised > 0


def test_manytwins_sweep_twin_t_restriction():
    report = sweep(build_manytwins(2), "twin-t:1", 4, k=2)
    # "030" is a twin word with two blocks, so the machine rightly accepts it
    assert [r.word for r in report.rows if r.verdict == "fail"] == ["030"]
    assert [r.word for r in report.rows if r.label is YES] == ["3", "131", "232"]


def test_rows_are_length_major_and_lexicographic():
    words = [r.word for r in sweep(build_end(), "end", 2).rows]
    assert words == ["", "0", "1", "2", "00", "01", "02", "10", "11", "12", "20", "21", "22"]


def test_restricted_alphabet():
    rows = sweep(build_end(), "end", 3, alphabet=["1", "2"]).rows
    assert len(rows) == 15


def test_judge_rules():
    assert judge("exact", YES, (1, 0, 0), None) == ("pass", 0)
    assert judge("exact", NO, (Fraction(1, 2), Fraction(1, 2), 0), None)[0] == "fail"
    assert judge("lasvegas", YES, (Fraction(4, 5), 0, Fraction(1, 5)), 2)[0] == "pass"
    assert judge("lasvegas", YES, (Fraction(3, 4), 0, Fraction(1, 4)), 2)[0] == "fail"
    assert judge("lasvegas", NO, (0, Fraction(4, 5), Fraction(1, 5)), 3) == ("fail", Fraction(1, 5))
    assert judge("onesided", NO, (Fraction(1, 3), Fraction(2, 3), 0), 1) == ("pass", Fraction(1, 3))
    assert judge("onesided", NO, (Fraction(1, 3), Fraction(2, 3), 0), 2)[0] == "fail"
    assert judge("onesided", UNPROMISED, (1, 0, 0), 2) == ("info", None)


def test_overclaimed_bound_fails():
    report = sweep(build_manytwins(1), "manytwins", 3, k=2)
    failed = [r.word for r in report.rows if r.verdict == "fail"]
    assert "132" in failed
    assert report.max_error == Fraction(1, 3)


def test_alphabet_mismatch():
    with pytest.raises(SweepError):
        sweep(build_end(), "pal", 2, k=1)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(oracle_name="nope", max_len=2),
        dict(oracle_name="twin-t:x", max_len=2),
        dict(oracle_name="twin-t:0", max_len=2),
        dict(oracle_name="manytwins", max_len=-1, k=1),
        dict(oracle_name="manytwins", max_len=2),
        dict(oracle_name="manytwins", max_len=2, alphabet=["0", "4"], k=1),
        dict(oracle_name="manytwins", max_len=11, k=1),
    ],
)
def test_sweep_errors(kwargs):
    with pytest.raises(SweepError):
        sweep(build_manytwins(1), **kwargs)


def test_reports_are_deterministic():
    a = sweep(build_manytwins(1), "manytwins", 4, k=1).to_tsv()
    b = sweep(build_manytwins(1), "manytwins", 4, k=1).to_tsv()
    assert a == b


def test_reports_never_contain_decimals():
    tsv = sweep(build_pal_npal(2), "pal-npal", 5, k=2).to_tsv()
    assert "0." not in tsv
    for line in tsv.splitlines()[1:]:
        if not line.startswith("#"):
            for field in line.split("\t")[2:5]:
                assert Fraction(field) >= 0 and "/" in field

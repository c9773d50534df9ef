import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affinecounter.oracles import (
    PromiseLabel,
    classify_pal_npal,
    enumerate_words,
    in_end,
    in_manytwins,
    in_pal,
    in_twin_t,
    word_count,
)

YES, NO, UNPROMISED = PromiseLabel.YES, PromiseLabel.NO, PromiseLabel.UNPROMISED


@pytest.mark.parametrize(
    "w, member",
    [("21", True), ("12", False), ("", False), ("11", False), ("2", False), ("1202", False), ("0212", True)],
)
def test_in_end(w, member):
    assert in_end(w) is member


def test_in_end_bad_symbol():
    with pytest.raises(ValueError):
        in_end("13")


def test_in_pal():
    assert in_pal("") and in_pal("1") and in_pal("121")
    assert not in_pal("12")


@pytest.mark.parametrize(
    "w, label",
    [
        ("1012", YES),
        ("1201", NO),
        ("101", UNPROMISED),
        ("12012", UNPROMISED),
        ("0", UNPROMISED),
        ("10012", UNPROMISED),
        ("12", UNPROMISED),
    ],
)
def test_classify_pal_npal(w, label):
    assert classify_pal_npal(w) is label


@pytest.mark.parametrize(
    "w, t, member",
    [("131", 1, True), ("3", 1, True), ("1023201", 2, True), ("1023102", 2, False), ("131", 2, False), ("33", 1, False)],
)
def test_in_twin_t(w, t, member):
    assert in_twin_t(w, t) is member


def test_in_twin_t_needs_positive_t():
    with pytest.raises(ValueError):
        in_twin_t("3", 0)


def test_in_manytwins_examples():
    assert in_manytwins("131") and in_manytwins("3") and in_manytwins("030")
    assert not in_manytwins("132")
    assert not in_manytwins("0131")
    assert not in_manytwins("313")
    assert not in_manytwins("0303")


def _blocks(max_len):
    return list(enumerate_words("12", max_len))


def test_manytwins_constructive_agreement():
    """Members built from their definition are exactly the accepted words."""
    built = set()
    for t in range(1, 5):
        for blocks in itertools.product(_blocks(3), repeat=t):
            w = "0".join(blocks) + "3" + "0".join(reversed(blocks))
            if len(w) <= 7:
                built.add(w)
    decided = {w for w in enumerate_words("0123", 7) if in_manytwins(w)}
    assert built == decided


def test_enumeration_order_and_count():
    words = list(enumerate_words("ba", 2))
    assert words == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert len(list(enumerate_words("012", 8))) == word_count(3, 8) == 9841
    assert word_count(4, 7) == 21845


@given(st.text(alphabet="012", max_size=12))
def test_end_definition_via_reversal(w):
    kappa = w.count("2")
    expected = kappa > 0 and w[len(w) - kappa] == "1"
    assert in_end(w) == expected


@given(st.text(alphabet="12", max_size=6), st.text(alphabet="12", max_size=6))
def test_pal_npal_label_symmetry(x, y):
    a, b = classify_pal_npal(x + "0" + y), classify_pal_npal(y + "0" + x)
    swap = {YES: NO, NO: YES, UNPROMISED: UNPROMISED}
    assert b is swap[a]

"""Naive reference deciders for the languages and the promise problem.

These transcribe the definitions directly and share no code with the
simulators, so agreement between the two is evidence rather than tautology.
Positions are 1-based where the definitions are.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator


class PromiseLabel(enum.Enum):
    YES = "YES"
    NO = "NO"
    UNPROMISED = "UNPROMISED"


def _require(w: str, alphabet: str) -> None:
    for symbol in w:
        if symbol not in alphabet:
            raise ValueError(f"symbol {symbol!r} is not in {{{', '.join(alphabet)}}}")


def in_end(w: str) -> bool:
    """At least one 2, and the (number of 2s)-th symbol of the reversal is 1."""
    _require(w, "012")
    twos = w.count("2")
    if twos == 0:
        return False
    reversed_w = w[::-1]
    return reversed_w[twos - 1] == "1"


def in_pal(w: str) -> bool:
    _require(w, "12")
    return w == w[::-1]


def _is_block(u: str) -> bool:
    return all(c in "12" for c in u)


def classify_pal_npal(w: str) -> PromiseLabel:
    if w.count("0") != 1:
        return PromiseLabel.UNPROMISED
    x, y = w.split("0")
    if not (_is_block(x) and _is_block(y)):
        return PromiseLabel.UNPROMISED
    x_pal, y_pal = x == x[::-1], y == y[::-1]
    if x_pal and not y_pal:
        return PromiseLabel.YES
    if y_pal and not x_pal:
        return PromiseLabel.NO
    return PromiseLabel.UNPROMISED


def in_twin_t(w: str, t: int) -> bool:
    """w = w_1 0 ... 0 w_t 3 w_t 0 ... 0 w_1 with every w_i over {1, 2}."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if w.count("3") != 1:
        return False
    left, right = w.split("3")
    before = left.split("0")
    after = right.split("0")
    if len(before) != t or len(after) != t:
        return False
    if not all(_is_block(b) for b in before + after):
        return False
    return after == before[::-1]


def in_manytwins(w: str) -> bool:
    if w.count("3") != 1:
        return False
    # the number of blocks before the 3 is the only candidate for t
    t = w.split("3")[0].count("0") + 1
    return in_twin_t(w, t)


def enumerate_words(alphabet: Iterable[str], max_len: int) -> Iterator[str]:
    """All words of length <= max_len, shortest first, then lexicographic."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    symbols = sorted(set(alphabet))
    for n in range(max_len + 1):
        for letters in itertools.product(symbols, repeat=n):
            yield "".join(letters)


def word_count(alphabet_size: int, max_len: int) -> int:
    return sum(alphabet_size**i for i in range(max_len + 1))

"""Exhaustive oracle-comparison sweeps over all words up to a length.

Each word is run through the machine, labelled by a reference oracle, and
judged by the claim that goes with that oracle:

* ``end``: exact recognition, accept probability 1 on members and 0 otherwise;
* ``pal-npal``: Las Vegas with parameter k; yes-instances are never rejected
  and are accepted with probability >= 2k/(2k+1), no-instances symmetrically;
  unpromised words are reported but never judged;
* ``manytwins``, ``pal``, ``twin-t:<t>``: one-sided bounded error; members are
  accepted with probability 1, nonmembers with probability <= 1/(2k+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Iterator

from . import afa, afca, oracles
from .afca import AfcaSpec
from .core import apply, format_rational, weigh
from .oracles import PromiseLabel

MAX_WORDS = 10**6
EMPTY_WORD = "ε"
HEADER = ("word", "oracle", "p_accept", "p_reject", "p_neutral", "verdict")


class SweepError(ValueError):
    """The sweep request itself is unusable (bad oracle, alphabet, size)."""


@dataclass(frozen=True)
class Oracle:
    name: str
    alphabet: frozenset[str]
    label: Callable[[str], PromiseLabel]
    claim: str  # "exact" | "lasvegas" | "onesided"


def _membership(decide, w: str) -> PromiseLabel:
    return PromiseLabel.YES if decide(w) else PromiseLabel.NO


def get_oracle(name: str) -> Oracle:
    if name == "end":
        return Oracle(name, frozenset("012"), partial(_membership, oracles.in_end), "exact")
    if name == "pal":
        return Oracle(name, frozenset("12"), partial(_membership, oracles.in_pal), "onesided")
    if name == "pal-npal":
        return Oracle(name, frozenset("012"), oracles.classify_pal_npal, "lasvegas")
    if name == "manytwins":
        return Oracle(name, frozenset("0123"), partial(_membership, oracles.in_manytwins), "onesided")
    if name.startswith("twin-t:"):
        try:
            t = int(name.split(":", 1)[1])
        except ValueError:
            raise SweepError(f"bad oracle {name!r}; expected twin-t:<t>") from None
        if t < 1:
            raise SweepError("twin-t needs t >= 1")
        decide = partial(oracles.in_twin_t, t=t)
        return Oracle(name, frozenset("0123"), partial(_membership, decide), "onesided")
    raise SweepError(f"unknown oracle {name!r}; choose end, pal, pal-npal, manytwins or twin-t:<t>")


@dataclass(frozen=True)
class Row:
    word: str
    label: PromiseLabel
    p_accept: Fraction
    p_reject: Fraction
    p_neutral: Fraction
    verdict: str  # "pass" | "fail" | "info"
    error: Fraction | None  # probability of not answering correctly; None if unpromised

    def tsv(self) -> str:
        return "\t".join(
            [
                self.word or EMPTY_WORD,
                self.label.value,
                format_rational(self.p_accept),
                format_rational(self.p_reject),
                format_rational(self.p_neutral),
                self.verdict,
            ]
        )


@dataclass
class SweepReport:
    oracle: str
    rows: list[Row] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(r.verdict == "fail" for r in self.rows)

    @property
    def passes(self) -> int:
        return sum(r.verdict == "pass" for r in self.rows)

    @property
    def unpromised(self) -> int:
        return sum(r.verdict == "info" for r in self.rows)

    @property
    def max_error(self) -> Fraction:
        return max((r.error for r in self.rows if r.error is not None), default=Fraction(0))

    def to_tsv(self) -> str:
        lines = ["\t".join(HEADER)]
        lines += [r.tsv() for r in self.rows]
        lines += [
            f"# words\t{len(self.rows)}",
            f"# pass\t{self.passes}",
            f"# fail\t{self.failures}",
            f"# unpromised\t{self.unpromised}",
            f"# max_error\t{format_rational(self.max_error)}",
        ]
        return "\n".join(lines) + "\n"


def judge(claim: str, label: PromiseLabel, outcome, k: int | None) -> tuple[str, Fraction | None]:
    p_accept, p_reject, _ = outcome
    if label is PromiseLabel.UNPROMISED:
        return "info", None
    error = 1 - p_accept if label is PromiseLabel.YES else 1 - p_reject
    if claim == "exact":
        ok = error == 0
    elif claim == "lasvegas":
        bound = Fraction(2 * k, 2 * k + 1)
        if label is PromiseLabel.YES:
            ok = p_reject == 0 and p_accept >= bound
        else:
            ok = p_accept == 0 and p_reject >= bound
    elif claim == "onesided":
        if label is PromiseLabel.YES:
            ok = p_accept == 1
        else:
            ok = p_accept <= Fraction(1, 2 * k + 1)
    else:
        raise SweepError(f"unknown claim rule {claim!r}")
    return ("pass" if ok else "fail"), error


def _outcome_afa(spec, v):
    if isinstance(spec, (afa.LasVegasAfaSpec, afa.RestartAfaSpec)):
        return afa.outcome_of(spec, v)
    p = weigh(v, spec.indices(spec.accepting))
    return afa.OutcomeTriple(p, 1 - p, Fraction(0))


def _outcome_afca(spec, v):
    p = afca.accepting_weight(spec, v)
    return afa.OutcomeTriple(p, 1 - p, Fraction(0))


def _final_states(spec, symbols: list[str], length: int):
    """Yield (word, final state) for every word of exactly ``length``.

    Walks the word tree depth first, so each prefix state is computed once
    and words come out in lexicographic order.
    """
    if isinstance(spec, AfcaSpec):
        start = afca.step(spec, afca.initial_config(spec), afa.LEFT_END)

        def advance(v, s):
            return afca.step(spec, v, s)
    else:
        start = apply(spec.matrices[afa.LEFT_END], afa.initial_vector(spec))

        def advance(v, s):
            return apply(spec.matrices[s], v)

    stack = [("", start)]
    while stack:
        word, v = stack.pop()
        if len(word) == length:
            yield word, advance(v, afa.RIGHT_END)
            continue
        for s in reversed(symbols):
            stack.append((word + s, advance(v, s)))


def iter_rows(spec, oracle: Oracle, alphabet, max_len: int, k: int | None) -> Iterator[Row]:
    symbols = sorted(set(alphabet))
    outcome = _outcome_afca if isinstance(spec, AfcaSpec) else _outcome_afa
    for n in range(max_len + 1):
        for word, v in _final_states(spec, symbols, n):
            triple = outcome(spec, v)
            label = oracle.label(word)
            verdict, error = judge(oracle.claim, label, triple, k)
            yield Row(word, label, *triple, verdict, error)


def sweep(
    spec,
    oracle_name: str,
    max_len: int,
    alphabet=None,
    k: int | None = None,
    force: bool = False,
) -> SweepReport:
    oracle = get_oracle(oracle_name)
    machine_alphabet = set(spec.alphabet)
    if machine_alphabet != oracle.alphabet:
        raise SweepError(
            f"machine alphabet {sorted(machine_alphabet)} does not match "
            f"oracle {oracle.name!r} alphabet {sorted(oracle.alphabet)}"
        )
    alphabet = machine_alphabet if alphabet is None else set(alphabet)
    if not alphabet <= machine_alphabet:
        raise SweepError(f"sweep symbols {sorted(alphabet - machine_alphabet)} are not in the machine alphabet")
    if any(len(s) != 1 for s in alphabet):
        raise SweepError("sweeps need single-character symbols")
    if max_len < 0:
        raise SweepError("max-len must be >= 0")
    if oracle.claim != "exact" and (k is None or k < 1):
        raise SweepError(f"oracle {oracle.name!r} needs the machine parameter k >= 1")
    total = oracles.word_count(len(alphabet), max_len)
    if total > MAX_WORDS and not force:
        raise SweepError(f"{total} words exceeds the limit of {MAX_WORDS}; pass force to run anyway")
    return SweepReport(oracle.name, list(iter_rows(spec, oracle, alphabet, max_len, k)))

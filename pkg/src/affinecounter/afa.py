"""Realtime affine finite automata, with Las Vegas and restart variants.

The caller passes the bare word; the runner frames it with the end-markers
``^`` (left) and ``$`` (right) and folds the per-symbol matrices over it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .core import AffineMatrix, AffineVector, ValidationReport, apply, validate_matrix, weigh
from .errors import DefinitionError, InputError, NonTerminationError

LEFT_END = "^"
RIGHT_END = "$"
END_MARKERS = (LEFT_END, RIGHT_END)


@dataclass(frozen=True, eq=True)
class AfaSpec:
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    matrices: Mapping[str, AffineMatrix]
    initial: str
    accepting: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "matrices", dict(self.matrices))
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    __hash__ = None

    def index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise DefinitionError(f"unknown state {state!r}") from None

    def indices(self, states: Iterable[str]) -> set[int]:
        return {self.index(s) for s in states}


@dataclass(frozen=True, eq=True)
class LasVegasAfaSpec(AfaSpec):
    """States split into accepting / rejecting / neutral ("don't know")."""

    rejecting: frozenset[str] = frozenset()
    neutral: frozenset[str] = frozenset()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "rejecting", frozenset(self.rejecting))
        object.__setattr__(self, "neutral", frozenset(self.neutral))

    __hash__ = None


@dataclass(frozen=True, eq=True)
class RestartAfaSpec(AfaSpec):
    """States split into accepting / rejecting / restarting."""

    rejecting: frozenset[str] = frozenset()
    restarting: frozenset[str] = frozenset()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "rejecting", frozenset(self.rejecting))
        object.__setattr__(self, "restarting", frozenset(self.restarting))

    __hash__ = None


class OutcomeTriple(NamedTuple):
    p_accept: Fraction
    p_reject: Fraction
    p_neutral: Fraction


class RestartAnalysis(NamedTuple):
    overall_accept: Fraction
    expected_rounds: Fraction
    expected_steps: Fraction


def partition(spec: AfaSpec) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    """(accepting, rejecting, neutral-or-restarting) for partitioned specs."""
    if isinstance(spec, LasVegasAfaSpec):
        return spec.accepting, spec.rejecting, spec.neutral
    if isinstance(spec, RestartAfaSpec):
        return spec.accepting, spec.rejecting, spec.restarting
    raise TypeError(f"{type(spec).__name__} has no accept/reject/neutral partition")


def validate(spec: AfaSpec) -> ValidationReport:
    report = ValidationReport()
    states = set(spec.states)
    n = len(spec.states)
    if n == 0:
        report.errors.append("no states")
    if len(states) != n:
        report.errors.append("duplicate state names")
    if spec.initial not in states:
        report.errors.append(f"initial state {spec.initial!r} is not a state")
    if not spec.accepting <= states:
        report.errors.append(f"accepting states not declared: {sorted(spec.accepting - states)}")
    for marker in END_MARKERS:
        if marker in spec.alphabet:
            report.errors.append(f"end-marker {marker!r} used as an input symbol")
    if len(set(spec.alphabet)) != len(spec.alphabet):
        report.errors.append("duplicate alphabet symbols")
    for symbol in (LEFT_END, *spec.alphabet, RIGHT_END):
        m = spec.matrices.get(symbol)
        if m is None:
            report.errors.append(f"missing matrix for symbol {symbol!r}")
            continue
        if m.dimension != n:
            report.errors.append(f"matrix {symbol!r} has dimension {m.dimension}, expected {n}")
            continue
        report.extend(validate_matrix(m), prefix=f"matrix {symbol!r}: ")
    extra = set(spec.matrices) - {LEFT_END, RIGHT_END, *spec.alphabet}
    if extra:
        report.errors.append(f"matrices for undeclared symbols: {sorted(extra)}")

    if isinstance(spec, (LasVegasAfaSpec, RestartAfaSpec)):
        acc, rej, neu = partition(spec)
        names = ("accepting", "rejecting", "neutral" if isinstance(spec, LasVegasAfaSpec) else "restarting")
        parts = dict(zip(names, (acc, rej, neu)))
        for a, b in ((0, 1), (0, 2), (1, 2)):
            common = parts[names[a]] & parts[names[b]]
            if common:
                report.errors.append(f"{names[a]} and {names[b]} overlap on {sorted(common)}")
        union = acc | rej | neu
        if union != states:
            missing, extra_states = states - union, union - states
            if missing:
                report.errors.append(f"states outside the partition: {sorted(missing)}")
            if extra_states:
                report.errors.append(f"partition names undeclared states: {sorted(extra_states)}")
    return report


def check(spec: AfaSpec) -> None:
    """Raise :class:`DefinitionError` unless ``spec`` is well formed."""
    report = validate(spec)
    if not report:
        raise DefinitionError(str(report))


def frame(spec: AfaSpec, word: Iterable[str]) -> list[str]:
    symbols = list(word)
    allowed = set(spec.alphabet)
    for pos, symbol in enumerate(symbols, 1):
        if symbol not in allowed:
            raise InputError(f"symbol {symbol!r} at position {pos} is not in the alphabet")
    return [LEFT_END, *symbols, RIGHT_END]


def initial_vector(spec: AfaSpec) -> AffineVector:
    return AffineVector.unit(len(spec.states), spec.index(spec.initial))


def trace(spec: AfaSpec, word: Iterable[str]) -> Iterator[AffineVector]:
    """Yield v_0, v_1, ..., v_f for the framed word."""
    v = initial_vector(spec)
    yield v
    for symbol in frame(spec, word):
        try:
            m = spec.matrices[symbol]
        except KeyError:
            raise DefinitionError(f"missing matrix for symbol {symbol!r}") from None
        v = apply(m, v)
        yield v


def run(spec: AfaSpec, word: Iterable[str]) -> AffineVector:
    v = None
    for v in trace(spec, word):
        pass
    return v


def accept_prob(spec: AfaSpec, word: Iterable[str]) -> Fraction:
    return weigh(run(spec, word), spec.indices(spec.accepting))


def outcome_of(spec: AfaSpec, v: AffineVector) -> OutcomeTriple:
    acc, rej, neu = partition(spec)
    return OutcomeTriple(
        weigh(v, spec.indices(acc)), weigh(v, spec.indices(rej)), weigh(v, spec.indices(neu))
    )


def lasvegas_outcome(spec: LasVegasAfaSpec | RestartAfaSpec, word: Iterable[str]) -> OutcomeTriple:
    return outcome_of(spec, run(spec, word))


def restart_from_outcome(outcome: OutcomeTriple, framed_length: int) -> RestartAnalysis:
    """Closed-form restart statistics from one round's outcome.

    Rounds are independent and identical, so the number of rounds is
    geometric with success probability ``p_accept + p_reject``.
    """
    p_accept, p_reject = Fraction(outcome[0]), Fraction(outcome[1])
    halt = p_accept + p_reject
    if halt == 0:
        raise NonTerminationError("a single round halts with probability 0; the machine never stops")
    rounds = 1 / halt
    return RestartAnalysis(p_accept / halt, rounds, rounds * framed_length)


def restart_analysis(spec: RestartAfaSpec, word: Iterable[str]) -> RestartAnalysis:
    symbols = list(word)
    return restart_from_outcome(lasvegas_outcome(spec, symbols), len(symbols) + 2)

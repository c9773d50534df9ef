"""Realtime affine k-counter automata over sparse configuration vectors.

A configuration is a pair ``(state, counters)`` with ``counters`` a tuple of
k ints.  An affine superposition of configurations is kept as a plain dict
mapping configurations to nonzero Fractions whose values sum to one.

Transitions are records ``(source, symbol, status, target, moves, value)``.
``status`` holds one flag per counter: ``"Z"`` (counter is zero), ``"N"``
(nonzero) or ``"*"`` (either).  Triples ``(state, symbol, status)`` that no
record covers are completed with a value-1 self-loop that leaves the
counters alone.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Tuple

from .afa import END_MARKERS, LEFT_END, RIGHT_END
from .core import ValidationReport, as_rational
from .errors import DefinitionError, InputError

Config = Tuple[str, Tuple[int, ...]]
ConfigVector = Dict[Config, Fraction]

ZERO, NONZERO, ANY = "Z", "N", "*"
_FLAG_ALIASES = {"Z": ZERO, "N": NONZERO, "NZ": NONZERO, "*": ANY}


class AcceptMode(enum.Enum):
    STATE_ONLY = "states"
    BLIND = "blind"


@dataclass(frozen=True)
class AfcaTransition:
    source: str
    symbol: str
    status: tuple[str, ...]
    target: str
    moves: tuple[int, ...]
    value: Fraction

    def __post_init__(self):
        status = (self.status,) if isinstance(self.status, str) and self.status in _FLAG_ALIASES else self.status
        try:
            flags = tuple(_FLAG_ALIASES[f] for f in status)
        except KeyError as exc:
            raise DefinitionError(f"bad counter status flag {exc.args[0]!r}") from None
        moves = (self.moves,) if isinstance(self.moves, int) else tuple(self.moves)
        if len(flags) != len(moves):
            raise DefinitionError(f"{len(flags)} status flags but {len(moves)} counter moves")
        for d in moves:
            if d not in (-1, 0, 1):
                raise DefinitionError(f"counter move {d!r} not in {{-1, 0, +1}}")
        object.__setattr__(self, "status", flags)
        object.__setattr__(self, "moves", tuple(int(d) for d in moves))
        object.__setattr__(self, "value", as_rational(self.value))


@dataclass(frozen=True)
class AfcaSpec:
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    counters: int
    transitions: tuple[AfcaTransition, ...]
    initial: str
    accepting: frozenset[str]
    accept_mode: AcceptMode = AcceptMode.STATE_ONLY

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "accept_mode", AcceptMode(self.accept_mode))


def status_patterns(k: int) -> list[tuple[str, ...]]:
    return list(itertools.product((ZERO, NONZERO), repeat=k))


def status_of(counters: tuple[int, ...]) -> tuple[str, ...]:
    return tuple(ZERO if c == 0 else NONZERO for c in counters)


@dataclass(frozen=True)
class _Compiled:
    table: dict
    errors: tuple[str, ...]
    completed: tuple


def _compile(spec: AfcaSpec) -> _Compiled:
    # specs are immutable, so the expanded table is cached on the instance
    cached = spec.__dict__.get("_compiled")
    if cached is None:
        cached = _build_table(spec)
        object.__setattr__(spec, "_compiled", cached)
    return cached


def _build_table(spec: AfcaSpec) -> _Compiled:
    errors: list[str] = []
    k = spec.counters
    states = set(spec.states)
    symbols = (LEFT_END, *spec.alphabet, RIGHT_END)
    if k < 1:
        errors.append(f"counter count must be >= 1, got {k}")
    if len(states) != len(spec.states):
        errors.append("duplicate state names")
    if spec.initial not in states:
        errors.append(f"initial state {spec.initial!r} is not a state")
    if not spec.accepting <= states:
        errors.append(f"accepting states not declared: {sorted(spec.accepting - states)}")
    for marker in END_MARKERS:
        if marker in spec.alphabet:
            errors.append(f"end-marker {marker!r} used as an input symbol")

    # (s, sigma, theta) -> {(s', d): value}
    rows: dict = {}
    for n, t in enumerate(spec.transitions, 1):
        where = f"transition {n} ({t.source} {t.symbol} -> {t.target})"
        bad = False
        if t.source not in states:
            errors.append(f"{where}: unknown state {t.source!r}")
            bad = True
        if t.target not in states:
            errors.append(f"{where}: unknown state {t.target!r}")
            bad = True
        if t.symbol not in symbols:
            errors.append(f"{where}: unknown symbol {t.symbol!r}")
            bad = True
        if len(t.status) != k:
            errors.append(f"{where}: expected {k} counter flags, got {len(t.status)}")
            bad = True
        if bad:
            continue
        choices = [(ZERO, NONZERO) if f == ANY else (f,) for f in t.status]
        for theta in itertools.product(*choices):
            row = rows.setdefault((t.source, t.symbol, theta), {})
            key = (t.target, t.moves)
            if key in row:
                errors.append(
                    f"{where}: duplicate transition for status {''.join(theta)} "
                    f"to {t.target} with moves {list(t.moves)}"
                )
                continue
            row[key] = t.value

    table = {}
    completed = []
    stay = (0,) * max(k, 0)
    for s in spec.states:
        for sigma in symbols:
            for theta in status_patterns(max(k, 0)):
                row = rows.get((s, sigma, theta))
                if row is None:
                    completed.append((s, sigma, theta))
                    table[(s, sigma, theta)] = ((s, stay, Fraction(1)),)
                    continue
                total = sum(row.values(), Fraction(0))
                if total != 1:
                    errors.append(
                        f"state {s} on {sigma!r} with status {''.join(theta)}: "
                        f"outgoing values sum to {total}"
                    )
                table[(s, sigma, theta)] = tuple(
                    (target, moves, value) for (target, moves), value in row.items() if value
                )
    return _Compiled(table, tuple(errors), tuple(completed))


def is_blind(spec: AfcaSpec) -> bool:
    """True when no transition depends on the counter status."""
    return not _status_dependent(spec)


def _status_dependent(spec: AfcaSpec) -> list[tuple[str, str]]:
    compiled = _compile(spec)
    found = []
    patterns = status_patterns(spec.counters)
    for s in spec.states:
        for sigma in (LEFT_END, *spec.alphabet, RIGHT_END):
            seen = {
                frozenset((t, d, v) for t, d, v in compiled.table.get((s, sigma, theta), ()))
                for theta in patterns
            }
            if len(seen) > 1:
                found.append((s, sigma))
    return found


def validate(spec: AfcaSpec) -> ValidationReport:
    report = ValidationReport(list(_compile(spec).errors))
    if spec.accept_mode is AcceptMode.BLIND and not report.errors:
        for s, sigma in _status_dependent(spec):
            report.errors.append(f"status-dependent transition from {s} on {sigma!r} in blind mode")
    return report


def check(spec: AfcaSpec) -> None:
    report = validate(spec)
    if not report:
        raise DefinitionError(str(report))


def completed_triples(spec: AfcaSpec) -> tuple:
    """The (state, symbol, status) triples filled in by self-loops."""
    return _compile(spec).completed


def initial_config(spec: AfcaSpec) -> ConfigVector:
    return {(spec.initial, (0,) * spec.counters): Fraction(1)}


def step(spec: AfcaSpec, v: ConfigVector, symbol: str) -> ConfigVector:
    compiled = _compile(spec)
    if compiled.errors:
        raise DefinitionError("malformed machine: " + "; ".join(compiled.errors))
    if symbol not in spec.alphabet and symbol not in END_MARKERS:
        raise InputError(f"symbol {symbol!r} is not in the alphabet")
    table = compiled.table
    out: dict = {}
    for (s, counters), alpha in v.items():
        for target, moves, value in table[(s, symbol, status_of(counters))]:
            key = (target, tuple(c + d for c, d in zip(counters, moves)))
            out[key] = out.get(key, 0) + alpha * value
    return {key: x for key, x in out.items() if x}


def evolve(spec: AfcaSpec, symbols: Iterable[str], v: ConfigVector | None = None) -> Iterator[ConfigVector]:
    """Yield the configuration vector after each symbol, starting from ``v``."""
    if v is None:
        v = initial_config(spec)
    for symbol in symbols:
        v = step(spec, v, symbol)
        yield v


def frame(spec: AfcaSpec, word: Iterable[str]) -> list[str]:
    symbols = list(word)
    allowed = set(spec.alphabet)
    for pos, symbol in enumerate(symbols, 1):
        if symbol not in allowed:
            raise InputError(f"symbol {symbol!r} at position {pos} is not in the alphabet")
    return [LEFT_END, *symbols, RIGHT_END]


def trace(spec: AfcaSpec, word: Iterable[str]) -> Iterator[ConfigVector]:
    """Yield v_0, v_1, ..., v_m for the framed word."""
    v = initial_config(spec)
    yield v
    yield from evolve(spec, frame(spec, word), v)


def run(spec: AfcaSpec, word: Iterable[str]) -> ConfigVector:
    v = None
    for v in trace(spec, word):
        pass
    return v


def run_prefix(spec: AfcaSpec, word: Iterable[str]) -> ConfigVector:
    """State after reading the left end-marker and ``word``, before ``$``."""
    v = initial_config(spec)
    for v in evolve(spec, frame(spec, word)[:-1], v):
        pass
    return v


def norm(v: ConfigVector) -> Fraction:
    return sum((abs(x) for x in v.values()), Fraction(0))


def accepting_weight(spec: AfcaSpec, v: ConfigVector) -> Fraction:
    blind = spec.accept_mode is AcceptMode.BLIND
    total = Fraction(0)
    for (s, counters), x in v.items():
        if s in spec.accepting and (not blind or not any(counters)):
            total += abs(x)
    return total / norm(v)


def accept_prob(spec: AfcaSpec, word: Iterable[str]) -> Fraction:
    return accepting_weight(spec, run(spec, word))


def counter_bound_check(spec: AfcaSpec, word: Iterable[str]) -> bool:
    """Every counter stays within [-m, m], m the framed length.

    Also checks the sharper bound |c| <= j after j steps.
    """
    word = list(word)
    m = len(word) + 2
    for j, v in enumerate(trace(spec, word)):
        for _, counters in v:
            if any(abs(c) > j or abs(c) > m for c in counters):
                return False
    return True

"""Random well-formed machines and deliberately broken variants of them.

Everything takes an explicit :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import replace
from fractions import Fraction

from .afa import LEFT_END, RIGHT_END, AfaSpec, LasVegasAfaSpec, RestartAfaSpec
from .afca import AcceptMode, AfcaSpec, AfcaTransition, status_patterns
from .core import AffineMatrix


def random_rational(rng: random.Random, bound: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_affine_matrix(rng: random.Random, n: int, density: float = 0.6) -> AffineMatrix:
    """Random n x n rational matrix whose columns sum to 1."""
    cols = []
    for _ in range(n):
        col = [random_rational(rng) if rng.random() < density else Fraction(0) for _ in range(n)]
        fix = rng.randrange(n)
        col[fix] = 1 - (sum(col) - col[fix])
        cols.append(col)
    return AffineMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def random_word(rng: random.Random, alphabet, length: int) -> str:
    symbols = list(alphabet)
    return "".join(rng.choice(symbols) for _ in range(length))


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"q{i}" for i in range(n))


def random_afa(rng: random.Random, n: int | None = None, alphabet=("a", "b"), kind: str = "afa") -> AfaSpec:
    n = n or rng.randint(1, 5)
    states = _names(n)
    matrices = {s: random_affine_matrix(rng, n) for s in (LEFT_END, *alphabet, RIGHT_END)}
    initial = rng.choice(states)
    if kind == "afa":
        accepting = frozenset(s for s in states if rng.random() < 0.5)
        return AfaSpec(states, tuple(alphabet), matrices, initial, accepting)
    parts = [[], [], []]
    for s in states:
        parts[rng.randrange(3)].append(s)
    acc, rej, neu = map(frozenset, parts)
    if kind == "lasvegas":
        return LasVegasAfaSpec(states, tuple(alphabet), matrices, initial, acc, rejecting=rej, neutral=neu)
    if kind == "restart":
        return RestartAfaSpec(states, tuple(alphabet), matrices, initial, acc, rejecting=rej, restarting=neu)
    raise ValueError(f"unknown kind {kind!r}")


def random_afca(
    rng: random.Random,
    n: int | None = None,
    alphabet=("a", "b"),
    counters: int | None = None,
    deterministic: bool = False,
    blind: bool = False,
    skip: float = 0.2,
) -> AfcaSpec:
    """Random well-formed affine counter automaton.

    ``deterministic`` restricts every transition value to 1 (one target per
    triple); ``blind`` emits only wildcard-status records; ``skip`` is the
    chance of leaving a triple out so that self-loop completion kicks in.
    """
    n = n or rng.randint(1, 4)
    k = counters or rng.randint(1, 2)
    states = _names(n)
    targets = list(itertools.product(states, itertools.product((-1, 0, 1), repeat=k)))
    transitions = []
    patterns = [("*",) * k] if blind else status_patterns(k)
    for s in states:
        for sigma in (LEFT_END, *alphabet, RIGHT_END):
            for theta in patterns:
                if rng.random() < skip:
                    continue
                if deterministic:
                    target, moves = rng.choice(targets)
                    transitions.append(AfcaTransition(s, sigma, theta, target, moves, 1))
                    continue
                chosen = rng.sample(targets, rng.randint(1, 3))
                values = [random_rational(rng) for _ in chosen]
                values[-1] = 1 - sum(values[:-1])
                for (target, moves), value in zip(chosen, values):
                    transitions.append(AfcaTransition(s, sigma, theta, target, moves, value))
    rng.shuffle(transitions)
    return AfcaSpec(
        states=states,
        alphabet=tuple(alphabet),
        counters=k,
        transitions=tuple(transitions),
        initial=rng.choice(states),
        accepting=frozenset(s for s in states if rng.random() < 0.5),
        accept_mode=AcceptMode.BLIND if blind and rng.random() < 0.5 else AcceptMode.STATE_ONLY,
    )


def _nonzero(rng: random.Random) -> Fraction:
    while True:
        x = random_rational(rng)
        if x:
            return x


def break_afa(rng: random.Random, spec: AfaSpec) -> AfaSpec:
    """Copy of ``spec`` with one matrix entry perturbed (a column no longer sums to 1)."""
    symbol = rng.choice(sorted(spec.matrices))
    rows = [list(r) for r in spec.matrices[symbol].rows]
    i, j = rng.randrange(len(rows)), rng.randrange(len(rows))
    rows[i][j] += _nonzero(rng)
    matrices = dict(spec.matrices)
    matrices[symbol] = AffineMatrix(rows)
    return replace(spec, matrices=matrices)


def break_afca(rng: random.Random, spec: AfcaSpec) -> AfcaSpec:
    """Copy of ``spec`` with one transition value perturbed."""
    transitions = list(spec.transitions)
    if not transitions:
        s = spec.states[0]
        bad = AfcaTransition(s, LEFT_END, ("*",) * spec.counters, s, (0,) * spec.counters, 2)
        return replace(spec, transitions=(bad,))
    i = rng.randrange(len(transitions))
    t = transitions[i]
    transitions[i] = replace(t, value=t.value + _nonzero(rng))
    return replace(spec, transitions=tuple(transitions))

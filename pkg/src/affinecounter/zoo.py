"""Concrete machines: END, PAL-NPAL (Las Vegas and restart) and MANYTWINS.

Also holds the base-3 encoder and closed-form descriptions of intermediate
states, which the tests use as oracles against the simulators.
"""

from __future__ import annotations

from fractions import Fraction

from .afa import LEFT_END, RIGHT_END, LasVegasAfaSpec, RestartAfaSpec
from .afca import AcceptMode, AfcaSpec, AfcaTransition, ConfigVector
from .core import AffineMatrix
from .errors import DefinitionError, InputError

HALF = Fraction(1, 2)


def encode_base3(w) -> int:
    """Base-3 value of a word over {1, 2}; the empty word encodes to 0."""
    value = 0
    for symbol in w:
        if symbol not in ("1", "2"):
            raise InputError(f"cannot encode symbol {symbol!r}; only 1 and 2 are allowed")
        value = 3 * value + int(symbol)
    return value


def _check_k(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DefinitionError(f"parameter k must be an integer >= 1, got {k!r}")
    return k


# ---------------------------------------------------------------------------
# END: exact one-counter machine, product of a 2-state DFA and 5 affine states

END_CLASSICAL = ("s1", "s2")
END_AFFINE = ("p0", "p1", "p2", "p3", "p4")


def end_state(classical: str, affine: str) -> str:
    return f"{classical}.{affine}"


# affine part while reading input symbols: p -> [(p', counter move, value)]
_END_RULES = {
    "0": {
        "p0": [("p0", 0, 1)],
        "p1": [("p1", 0, 1), ("p3", 1, -HALF), ("p4", 1, HALF)],
        "p2": [("p2", 0, 1)],
        "p3": [("p3", 1, 1)],
        "p4": [("p4", 1, 1)],
    },
    "1": {
        "p0": [("p0", 0, 1)],
        "p1": [("p1", 0, 1), ("p3", 1, HALF), ("p4", 1, -HALF)],
        "p2": [("p2", 0, 1)],
        "p3": [("p3", 1, 1)],
        "p4": [("p4", 1, 1)],
    },
    "2": {
        "p0": [("p0", 0, 1)],
        "p1": [("p1", -1, 1), ("p3", 0, -HALF), ("p4", 0, HALF)],
        "p2": [("p2", -1, 1)],
        "p3": [("p3", 0, 1)],
        "p4": [("p4", 0, 1)],
    },
}

# right end-marker: (p, status) -> [(p', value)]; counters never move here.
# (p0, NZ) is unreachable and left to the self-loop completion.
_END_FINAL = {
    ("p1", "*"): [("p1", 1)],
    ("p2", "*"): [("p1", 1)],
    ("p3", "N"): [("p3", 1)],
    ("p4", "N"): [("p3", 1)],
    ("p3", "Z"): [("p3", 1)],
    ("p4", "Z"): [("p4", 1)],
    ("p0", "Z"): [("p3", HALF), ("p4", HALF)],
}


def build_end() -> AfcaSpec:
    """Exact machine for END: the |w|_2-th symbol of the reversed word is 1."""
    transitions = []

    def add(c, p, symbol, status, c2, p2, d, value):
        transitions.append(
            AfcaTransition(end_state(c, p), symbol, (status,), end_state(c2, p2), (d,), value)
        )

    for c in END_CLASSICAL:
        add(c, "p0", LEFT_END, "*", c, "p0", 0, 1)
        add(c, "p0", LEFT_END, "*", c, "p1", 0, 1)
        add(c, "p0", LEFT_END, "*", c, "p2", 0, -1)
        for symbol, rules in _END_RULES.items():
            c2 = "s2" if symbol == "2" else c
            for p, outs in rules.items():
                for p2, d, value in outs:
                    add(c, p, symbol, "*", c2, p2, d, value)
        for (p, status), outs in _END_FINAL.items():
            for p2, value in outs:
                add(c, p, RIGHT_END, status, c, p2, 0, value)

    return AfcaSpec(
        states=tuple(end_state(c, p) for c in END_CLASSICAL for p in END_AFFINE),
        alphabet=("0", "1", "2"),
        counters=1,
        transitions=tuple(transitions),
        initial=end_state("s1", "p0"),
        accepting=frozenset({end_state("s2", "p3")}),
        accept_mode=AcceptMode.STATE_ONLY,
    )


def end_prestate(w: str) -> ConfigVector:
    """Closed form of the END machine's state just before the right end-marker."""
    kappa = w.count("2")
    if kappa == 0:
        raise InputError("the closed form needs at least one symbol 2")
    x = w[::-1]
    v: dict = {}

    def put(p, c, value):
        key = (end_state("s2", p), (c,))
        v[key] = v.get(key, 0) + value

    put("p0", 0, 1)
    put("p1", -kappa, 1)
    put("p2", -kappa, -1)
    for i in range(1, len(x) + 1):
        sign = (-1) ** int(x[i - 1])
        put("p3", i - kappa, -HALF * sign)
        put("p4", i - kappa, HALF * sign)
    return {key: Fraction(value) for key, value in v.items() if value}


# ---------------------------------------------------------------------------
# PAL-NPAL: 5-state Las Vegas machine

PAL_NPAL_STATES = ("s1", "s2", "s3", "s4", "s5")

_PAL_M1 = (
    (4, 1, 1, 1, 1),
    (0, 1, 1, 0, 0),
    (0, 0, 3, 0, 0),
    (0, 0, 0, 1, 0),
    (-3, -1, -4, -1, 0),
)
_PAL_M2 = (
    (5, 2, 2, 2, 2),
    (0, 1, 2, 0, 0),
    (0, 0, 3, 0, 0),
    (0, 0, 0, 1, 0),
    (-4, -2, -6, -2, -1),
)
_PAL_M0 = (
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (1, 1, 1, 1, 1),
    (1, -1, 0, 0, 0),
    (-1, 1, 0, 0, 0),
)
# the left end-marker takes s1 to (0, 0, 1, 0, 0); identity elsewhere
_PAL_LEFT = (
    (0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (1, 0, 1, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
)


def pal_npal_final_matrix(k: int) -> AffineMatrix:
    k = _check_k(k)
    return AffineMatrix(
        (
            (k, -k, 0, 0, 0),
            (-k, k, 0, 0, 0),
            (0, 0, 0, k, 0),
            (0, 0, 0, -k, 0),
            (1, 1, 1, 1, 1),
        )
    )


def _pal_npal_matrices(k: int) -> dict:
    return {
        LEFT_END: AffineMatrix(_PAL_LEFT),
        "0": AffineMatrix(_PAL_M0),
        "1": AffineMatrix(_PAL_M1),
        "2": AffineMatrix(_PAL_M2),
        RIGHT_END: pal_npal_final_matrix(k),
    }


def build_pal_npal(k: int) -> LasVegasAfaSpec:
    """Las Vegas machine for PAL-NPAL; success probability >= 2k/(2k+1)."""
    k = _check_k(k)
    return LasVegasAfaSpec(
        states=PAL_NPAL_STATES,
        alphabet=("0", "1", "2"),
        matrices=_pal_npal_matrices(k),
        initial="s1",
        accepting=frozenset({"s1", "s2"}),
        rejecting=frozenset({"s3", "s4"}),
        neutral=frozenset({"s5"}),
    )


def build_pal_npal_restart(k: int) -> RestartAfaSpec:
    """The PAL-NPAL machine with its neutral state turned into a restart."""
    k = _check_k(k)
    return RestartAfaSpec(
        states=PAL_NPAL_STATES,
        alphabet=("0", "1", "2"),
        matrices=_pal_npal_matrices(k),
        initial="s1",
        accepting=frozenset({"s1", "s2"}),
        rejecting=frozenset({"s3", "s4"}),
        restarting=frozenset({"s5"}),
    )


def pal_npal_final_vector(x: str, y: str, k: int) -> tuple[int, ...]:
    """Closed-form final vector of the PAL-NPAL machine on ``x0y``."""
    dy = encode_base3(y) - encode_base3(y[::-1])
    dx = encode_base3(x) - encode_base3(x[::-1])
    return (k * dy, -k * dy, k * dx, -k * dx, 1)


# ---------------------------------------------------------------------------
# MANYTWINS: 10-state blind one-counter machine

MANYTWINS_STATES = ("s1", "s2", "s3", "s1'", "s2'", "s3'", "se", "se'", "sa", "sr")


def build_manytwins(k: int) -> AfcaSpec:
    """One-sided bounded-error blind-counter machine for MANYTWINS.

    Each block w_i before the 3 is encoded in base 3 into s2 (s3 carries the
    balancing value), then dumped as +k e(w_i) / -k e(w_i) into se / se' at
    counter value i-1.  Blocks after the 3 are encoded into s2' and dumped
    with opposite signs while the counter walks back down, so matching
    blocks cancel pairwise.
    """
    k = _check_k(k)
    transitions = []

    def add(source, symbol, target, d, value):
        transitions.append(AfcaTransition(source, symbol, ("*",), target, (d,), value))

    add("s1", LEFT_END, "s1", 0, 1)
    for p in ("", "'"):
        one, two, three = "s1" + p, "s2" + p, "s3" + p
        for sigma in ("1", "2"):
            v = int(sigma)
            add(one, sigma, one, 0, 1)
            add(one, sigma, two, 0, v)
            add(one, sigma, three, 0, -v)
            add(two, sigma, two, 0, 3)
            add(two, sigma, three, 0, -2)
            add(three, sigma, three, 0, 1)

    # block separators before the 3: push the encoding, count up
    for symbol in ("0", "3"):
        if symbol == "0":
            add("s1", "0", "s1", 1, 1)
        else:
            add("s1", "3", "s1'", 0, 1)
        add("s2", symbol, "se", 0, k)
        add("s2", symbol, "se'", 0, -k)
        add("s2", symbol, "s3", 0, 1)
        add("s3", symbol, "s3", 0, 1)

    # after the 3: subtract the encoding, count down
    for symbol in ("0", RIGHT_END):
        if symbol == "0":
            add("s1'", "0", "s1'", -1, 1)
        else:
            add("s1'", RIGHT_END, "sa", 0, 1)
        add("s2'", symbol, "se", 0, -k)
        add("s2'", symbol, "se'", 0, k)
        add("s2'", symbol, "s3'", 0, 1)
        add("s3'", symbol, "s3'", 0, 1)

    # a second 3 sends the primed states to the rejecting sink
    for state in ("s1'", "s2'", "s3'"):
        add(state, "3", "sr", 0, 1)

    for state in ("se", "se'", "sa", "sr"):
        for symbol in (LEFT_END, "0", "1", "2", "3", RIGHT_END):
            add(state, symbol, state, 0, 1)

    return AfcaSpec(
        states=MANYTWINS_STATES,
        alphabet=("0", "1", "2", "3"),
        counters=1,
        transitions=tuple(transitions),
        initial="s1",
        accepting=frozenset({"sa"}),
        accept_mode=AcceptMode.BLIND,
    )


def manytwins_midstate(u1: str, k: int) -> ConfigVector:
    """Closed form of the MANYTWINS state right after the first 3.

    ``u1`` must look like ``w_1 0 w_2 0 ... 0 w_t 3`` with each w_i over {1, 2}.
    """
    k = _check_k(k)
    if not u1.endswith("3") or "3" in u1[:-1]:
        raise InputError(f"{u1!r} must end with its only symbol 3")
    blocks = u1[:-1].split("0")
    v: dict = {("s1'", (len(blocks) - 1,)): Fraction(1)}
    for i, block in enumerate(blocks):
        e = encode_base3(block)
        if e:
            v[("se", (i,))] = Fraction(k * e)
            v[("se'", (i,))] = Fraction(-k * e)
    return v


ZOO = {
    "end": lambda k=None: build_end(),
    "pal-npal": build_pal_npal,
    "pal-npal-restart": build_pal_npal_restart,
    "manytwins": build_manytwins,
}
PARAMETERIZED = frozenset({"pal-npal", "pal-npal-restart", "manytwins"})

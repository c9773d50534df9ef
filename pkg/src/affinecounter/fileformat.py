"""Line-oriented text format for machine definitions.

Example (a one-counter machine)::

    type afca
    counters 1
    states a b
    alphabet 0 1
    initial a
    accepting b
    accept-mode states
    # t <from> <symbol> <status flags> <to> <moves> <value>
    t a ^ * a 0 1
    t a 0 Z b +1 1/2
    t a 0 Z a 0 1/2

Affine automata give one ``matrix <symbol>`` block per symbol, followed by
one line per row.  ``^`` and ``$`` are the left and right end-markers and
``#`` starts a comment.
"""

from __future__ import annotations

from fractions import Fraction

from . import afa, afca
from .afa import LEFT_END, RIGHT_END, AfaSpec, LasVegasAfaSpec, RestartAfaSpec
from .afca import AcceptMode, AfcaSpec, AfcaTransition
from .core import AffineMatrix, ValidationReport
from .errors import DefinitionError, FormatError

TYPES = ("afa", "afca", "lasvegas", "restart")
_SET_DIRECTIVES = ("accepting", "rejecting", "neutral", "restarting")
_PARTITION = {
    "afa": (),
    "afca": (),
    "lasvegas": ("rejecting", "neutral"),
    "restart": ("rejecting", "restarting"),
}


def _rational(token: str, line: int, column: int) -> Fraction:
    try:
        if token.count("/") > 1 or "." in token or "e" in token.lower() or "_" in token:
            raise ValueError
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"expected a rational p/q or integer, got {token!r}", line, column) from None


def _move(token: str, line: int, column: int) -> int:
    if token in ("-1", "0", "+1", "1"):
        return int(token)
    raise FormatError(f"counter move must be -1, 0 or +1, got {token!r}", line, column)


def _tokens(text: str):
    """Yield (line number, [(column, token), ...]) for non-blank lines."""
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        toks = []
        col = 0
        for piece in content.split():
            col = content.index(piece, col)
            toks.append((col + 1, piece))
            col += len(piece)
        if toks:
            yield number, toks


def parse(text: str, check: bool = True):
    """Parse a machine file into a spec.

    With ``check`` (the default) the machine is also validated and any
    well-formedness problem is raised as :class:`FormatError`.
    """
    fields: dict = {}
    seen_at: dict = {}
    matrices: dict = {}
    records: list = []
    record_keys: dict = {}
    lines = list(_tokens(text))
    if not lines:
        raise FormatError("empty machine file", 1, 1)

    i = 0
    while i < len(lines):
        number, toks = lines[i]
        i += 1
        col, head = toks[0]
        args = toks[1:]
        values = [t for _, t in args]

        if head == "matrix":
            if len(args) != 1:
                raise FormatError("expected: matrix <symbol>", number, col)
            if "states" not in fields:
                raise FormatError("states must be declared before any matrix", number, col)
            symbol = values[0]
            if symbol in matrices:
                raise FormatError(f"duplicate matrix for symbol {symbol!r}", number, col)
            n = len(fields["states"])
            rows = []
            for r in range(n):
                if i >= len(lines):
                    raise FormatError(f"matrix {symbol!r} ends after {r} of {n} rows", number, col)
                rnum, rtoks = lines[i]
                i += 1
                if len(rtoks) != n:
                    raise FormatError(
                        f"matrix {symbol!r} row {r + 1} has {len(rtoks)} entries, expected {n}",
                        rnum,
                        rtoks[0][0],
                    )
                rows.append([_rational(tok, rnum, c) for c, tok in rtoks])
            matrices[symbol] = AffineMatrix(rows)
            continue

        if head == "t":
            k = fields.get("counters")
            if k is None:
                raise FormatError("counters must be declared before any transition", number, col)
            if len(args) != 4 + 2 * k:
                raise FormatError(
                    f"transition needs {4 + 2 * k} fields for {k} counter(s), got {len(args)}",
                    number,
                    col,
                )
            source, symbol = values[0], values[1]
            status = values[2 : 2 + k]
            target = values[2 + k]
            for j, flag in enumerate(status):
                if flag not in ("Z", "N", "NZ", "*"):
                    raise FormatError(f"bad counter status {flag!r}", number, args[2 + j][0])
            moves = tuple(_move(tok, number, c) for c, tok in args[3 + k : 3 + 2 * k])
            value = _rational(values[-1], number, args[-1][0])
            transition = AfcaTransition(source, symbol, tuple(status), target, moves, value)
            key = (source, symbol, transition.status, target, moves)
            if key in record_keys:
                raise FormatError(
                    f"duplicate transition (first given on line {record_keys[key]})", number, col
                )
            record_keys[key] = number
            records.append(transition)
            continue

        if head in seen_at:
            raise FormatError(f"directive {head!r} repeated (first on line {seen_at[head]})", number, col)
        seen_at[head] = number
        if head == "type":
            if len(values) != 1 or values[0] not in TYPES:
                raise FormatError(f"type must be one of {', '.join(TYPES)}", number, col)
            fields["type"] = values[0]
        elif head == "counters":
            if len(values) != 1 or not values[0].isdigit() or int(values[0]) < 1:
                raise FormatError("expected: counters <k> with k >= 1", number, col)
            fields["counters"] = int(values[0])
        elif head == "states":
            if not values:
                raise FormatError("at least one state is required", number, col)
            fields["states"] = tuple(values)
        elif head == "alphabet":
            fields["alphabet"] = tuple(values)
        elif head == "initial":
            if len(values) != 1:
                raise FormatError("expected: initial <state>", number, col)
            fields["initial"] = values[0]
        elif head in _SET_DIRECTIVES:
            fields[head] = frozenset(values)
        elif head == "accept-mode":
            if values not in (["states"], ["blind"]):
                raise FormatError("accept-mode must be 'states' or 'blind'", number, col)
            fields["accept-mode"] = AcceptMode(values[0])
        else:
            raise FormatError(f"unknown directive {head!r}", number, col)

    kind = fields.get("type")
    if kind is None:
        raise FormatError("missing 'type' directive", 1, 1)
    required = ["states", "alphabet", "initial", "accepting", *_PARTITION.get(kind, ())]
    if kind == "afca":
        required.append("counters")
    for name in required:
        if name not in fields:
            raise FormatError(f"missing {name!r} directive for type {kind}")

    allowed = {"type", "states", "alphabet", "initial", "accepting", *_PARTITION.get(kind, ())}
    if kind == "afca":
        allowed |= {"counters", "accept-mode"}
    for name, number in seen_at.items():
        if name not in allowed:
            raise FormatError(f"directive {name!r} does not apply to type {kind}", number, 1)

    if kind == "afca":
        if matrices:
            raise FormatError("matrix blocks do not apply to type afca")
        spec = AfcaSpec(
            states=fields["states"],
            alphabet=fields["alphabet"],
            counters=fields["counters"],
            transitions=tuple(records),
            initial=fields["initial"],
            accepting=fields["accepting"],
            accept_mode=fields.get("accept-mode", AcceptMode.STATE_ONLY),
        )
    else:
        if records:
            raise FormatError(f"transition records do not apply to type {kind}")
        common = dict(
            states=fields["states"],
            alphabet=fields["alphabet"],
            matrices=matrices,
            initial=fields["initial"],
            accepting=fields["accepting"],
        )
        if kind == "lasvegas":
            spec = LasVegasAfaSpec(**common, rejecting=fields["rejecting"], neutral=fields["neutral"])
        elif kind == "restart":
            spec = RestartAfaSpec(**common, rejecting=fields["rejecting"], restarting=fields["restarting"])
        else:
            spec = AfaSpec(**common)

    if check:
        report = validate(spec)
        if not report:
            raise FormatError("machine is not well formed:\n  " + "\n  ".join(report.errors))
    return spec


def validate(spec) -> ValidationReport:
    if isinstance(spec, AfcaSpec):
        return afca.validate(spec)
    return afa.validate(spec)


def load(path) -> object:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def kind_of(spec) -> str:
    if isinstance(spec, AfcaSpec):
        return "afca"
    if isinstance(spec, LasVegasAfaSpec):
        return "lasvegas"
    if isinstance(spec, RestartAfaSpec):
        return "restart"
    if isinstance(spec, AfaSpec):
        return "afa"
    raise TypeError(f"cannot serialize {type(spec).__name__}")


def _fmt(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _fmt_move(d: int) -> str:
    return "+1" if d == 1 else str(d)


def _check_token(token: str, what: str) -> str:
    if not token or any(c.isspace() for c in token) or "#" in token:
        raise DefinitionError(f"{what} {token!r} cannot be written to a machine file")
    return token


def _ordered(spec, states) -> str:
    return " ".join(s for s in spec.states if s in states)


def serialize(spec) -> str:
    kind = kind_of(spec)
    for s in spec.states:
        _check_token(s, "state name")
    for a in spec.alphabet:
        _check_token(a, "symbol")
    out = [f"type {kind}"]
    if kind == "afca":
        out.append(f"counters {spec.counters}")
    out.append("states " + " ".join(spec.states))
    out.append(("alphabet " + " ".join(spec.alphabet)).rstrip())
    out.append(f"initial {spec.initial}")
    out.append(("accepting " + _ordered(spec, spec.accepting)).rstrip())
    for name in _PARTITION[kind] if kind != "afca" else ():
        out.append((f"{name} " + _ordered(spec, getattr(spec, name))).rstrip())

    if kind == "afca":
        out.append(f"accept-mode {spec.accept_mode.value}")
        for t in spec.transitions:
            out.append(
                " ".join(
                    [
                        "t",
                        t.source,
                        t.symbol,
                        *t.status,
                        t.target,
                        *(_fmt_move(d) for d in t.moves),
                        _fmt(t.value),
                    ]
                )
            )
    else:
        symbols = [LEFT_END, *spec.alphabet, RIGHT_END]
        symbols += sorted(set(spec.matrices) - set(symbols))
        for symbol in symbols:
            m = spec.matrices.get(symbol)
            if m is None:
                continue
            out.append(f"matrix {symbol}")
            width = max(len(_fmt(x)) for row in m.rows for x in row)
            for row in m.rows:
                out.append(" ".join(_fmt(x).rjust(width) for x in row))
    return "\n".join(out) + "\n"


def dump(spec, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(spec))

"""Exact affine linear algebra over the rationals.

An affine vector is a rational vector whose entries sum to one; an affine
matrix is a square rational matrix whose columns each sum to one, so it maps
affine vectors to affine vectors.  Values are :class:`fractions.Fraction`;
the hot loops work on integer numerators over a shared denominator.  Nothing
here ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DefinitionError

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ``value`` (int, Fraction or ``"p/q"`` string) to a Fraction.

    Floats are refused: a binary float is almost never the rational the
    caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass an int, Fraction or 'p/q' string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DefinitionError(f"not a rational: {value!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as ``p/q`` always, including integers (``1/1``, ``0/1``)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass
class ValidationReport:
    """Outcome of a well-formedness check; falsy when anything failed."""

    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok

    def extend(self, other: ValidationReport, prefix: str = "") -> None:
        self.errors.extend(prefix + e for e in other.errors)

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(self.errors)


@dataclass(frozen=True)
class AffineVector:
    """A rational vector whose entries sum to exactly one."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        values = tuple(as_rational(x) for x in entries)
        if not values:
            raise DefinitionError("an affine vector needs at least one entry")
        total = sum(values, Fraction(0))
        if total != 1:
            raise DefinitionError(f"entries sum to {total}, not 1")
        object.__setattr__(self, "entries", values)

    @classmethod
    def _trusted(cls, values: tuple[Fraction, ...]) -> AffineVector:
        # caller guarantees Fraction entries summing to one
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", values)
        return obj

    @classmethod
    def unit(cls, dimension: int, index: int) -> AffineVector:
        if not 0 <= index < dimension:
            raise DefinitionError(f"index {index} outside dimension {dimension}")
        return cls(1 if i == index else 0 for i in range(dimension))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self) -> str:
        return "AffineVector(" + ", ".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class AffineMatrix:
    """A square rational matrix, stored row-major.

    Column sums are *not* enforced on construction so that malformed
    matrices can be built and then diagnosed with :func:`validate_matrix`.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    _columns: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(grid)
        if n == 0:
            raise DefinitionError("a matrix needs at least one row")
        for i, row in enumerate(grid):
            if len(row) != n:
                raise DefinitionError(f"row {i + 1} has {len(row)} entries, expected {n}")
        object.__setattr__(self, "rows", grid)
        # integer form: scale * m, stored as sparse columns of (i, entry) pairs
        scale = math.lcm(*(x.denominator for row in grid for x in row))
        cols = tuple(
            tuple((i, grid[i][j].numerator * (scale // grid[i][j].denominator)) for i in range(n) if grid[i][j])
            for j in range(n)
        )
        object.__setattr__(self, "_columns", (scale, cols))

    @classmethod
    def identity(cls, dimension: int) -> AffineMatrix:
        return cls([[1 if i == j else 0 for j in range(dimension)] for i in range(dimension)])

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def __matmul__(self, other: AffineMatrix) -> AffineMatrix:
        return compose(self, other)


def apply(m: AffineMatrix, v: AffineVector) -> AffineVector:
    """Return the exact product ``m v``."""
    n = m.dimension
    if v.dimension != n:
        raise DefinitionError(f"matrix of dimension {n} applied to vector of dimension {v.dimension}")
    nums, den = _common(v.entries)
    scale, cols = m._columns
    out = [0] * n
    for j, vj in enumerate(nums):
        if vj:
            for i, mij in cols[j]:
                out[i] += mij * vj
    den *= scale
    if sum(out) != den:
        raise DefinitionError("matrix does not preserve the entry sum; some column does not sum to 1")
    return AffineVector._trusted(tuple(Fraction(x, den) for x in out))


def _common(values) -> tuple[list[int], int]:
    """Integer numerators over a shared denominator."""
    den = math.lcm(*(x.denominator for x in values))
    return [x.numerator * (den // x.denominator) for x in values], den


def compose(second: AffineMatrix, first: AffineMatrix) -> AffineMatrix:
    """Matrix product ``second @ first`` (apply ``first``, then ``second``)."""
    n = first.dimension
    if second.dimension != n:
        raise DefinitionError("cannot compose matrices of different dimensions")
    a, b = second.rows, first.rows
    return AffineMatrix(
        [[sum((a[i][l] * b[l][j] for l in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
    )


def l1_norm(v: AffineVector) -> Fraction:
    return sum((abs(x) for x in v.entries), Fraction(0))


def weigh(v: AffineVector, indices: Iterable[int]) -> Fraction:
    """Weight of the given (0-based) entries: sum of |v[i]| over the l1 norm.

    The norm of an affine vector is at least |sum of entries| = 1, so the
    division is always defined.
    """
    chosen = set(indices)
    for i in chosen:
        if not 0 <= i < v.dimension:
            raise IndexError(f"state index {i} outside dimension {v.dimension}")
    nums, _ = _common(v.entries)
    return Fraction(sum(abs(nums[i]) for i in chosen), sum(abs(x) for x in nums))


def column_sums(m: AffineMatrix) -> list[Fraction]:
    n = m.dimension
    return [sum((m.rows[i][j] for i in range(n)), Fraction(0)) for j in range(n)]


def validate_matrix(m: AffineMatrix | Sequence[Sequence]) -> ValidationReport:
    """Check that every column sums to one; report offenders (1-based)."""
    if not isinstance(m, AffineMatrix):
        try:
            m = AffineMatrix(m)
        except DefinitionError as exc:
            return ValidationReport([str(exc)])
    report = ValidationReport()
    for j, total in enumerate(column_sums(m)):
        if total != 1:
            report.errors.append(f"column {j + 1} sums to {total}")
    return report

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affinecounter.core import (
    AffineMatrix,
    AffineVector,
    apply,
    compose,
    format_rational,
    l1_norm,
    validate_matrix,
    weigh,
)
from affinecounter.errors import DefinitionError
from affinecounter.generate import random_affine_matrix
from affinecounter.zoo import _PAL_M0, _PAL_M1, _PAL_M2

from reference import dense_apply

E3 = AffineVector((0, 0, 1, 0, 0))


def test_identity_apply():
    v = AffineVector((Fraction(1, 3), Fraction(-2, 3), Fraction(4, 3)))
    assert apply(AffineMatrix.identity(3), v) == v


def test_matrix_one_on_third_basis_vector():
    assert apply(AffineMatrix(_PAL_M1), E3).entries == (1, 1, 3, 0, -4)


def test_matrix_two_on_third_basis_vector():
    assert apply(AffineMatrix(_PAL_M2), E3).entries == (2, 2, 3, 0, -6)


def test_apply_dimension_mismatch():
    with pytest.raises(DefinitionError):
        apply(AffineMatrix.identity(2), E3)


def test_apply_result_entries_are_reduced_fractions():
    m = AffineMatrix([[Fraction(1, 2), Fraction(3, 4)], [Fraction(1, 2), Fraction(1, 4)]])
    out = apply(m, AffineVector((Fraction(2, 3), Fraction(1, 3))))
    assert out.entries == (Fraction(7, 12), Fraction(5, 12))
    assert all(isinstance(x, Fraction) for x in out.entries)


@pytest.mark.parametrize(
    "v, indices, expected",
    [
        ((1, 0, 0), {0}, 1),
        ((-2, 2, 0, 0, 1), {0, 1}, Fraction(4, 5)),
        ((Fraction(1, 2), Fraction(1, 2), 0), {2}, 0),
    ],
)
def test_weigh(v, indices, expected):
    assert weigh(AffineVector(v), indices) == expected


def test_weigh_rejects_out_of_range_index():
    with pytest.raises(IndexError):
        weigh(AffineVector((1, 0)), {2})


def test_l1_norm():
    assert l1_norm(AffineVector((1, 0, 0))) == 1
    assert l1_norm(AffineVector((-2, 2, 0, 0, 1))) == 5
    assert l1_norm(AffineVector((4, 1, 1, 1, -6))) == 13


def test_vector_must_sum_to_one():
    with pytest.raises(DefinitionError):
        AffineVector((1, 1))
    with pytest.raises(DefinitionError):
        AffineVector(())


def test_floats_refused():
    with pytest.raises(TypeError):
        AffineVector((0.5, 0.5))


def test_validate_matrix():
    assert validate_matrix(AffineMatrix(_PAL_M0)).ok
    assert validate_matrix(AffineMatrix.identity(7)).ok
    report = validate_matrix([[1, 0], [1, 1]])
    assert not report
    assert report.errors == ["column 1 sums to 2"]


def test_validate_matrix_non_square():
    assert not validate_matrix([[1, 0]])


def test_format_rational_never_decimal():
    assert format_rational(Fraction(1)) == "1/1"
    assert format_rational(0) == "0/1"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


def _random_vector(rng, n):
    xs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n - 1)]
    return AffineVector(xs + [1 - sum(xs)])


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6))
def test_affine_properties(seed, n):
    rng = random.Random(seed)
    m1, m2 = random_affine_matrix(rng, n), random_affine_matrix(rng, n)
    v = _random_vector(rng, n)
    out = apply(m1, v)
    assert sum(out.entries) == 1
    assert out.entries == dense_apply(m1.rows, v.entries)
    assert l1_norm(out) >= 1
    assert weigh(out, range(n)) == 1
    assert apply(m2, apply(m1, v)) == apply(compose(m2, m1), v)
    assert apply(m2, apply(m1, v)) == apply(m2 @ m1, v)

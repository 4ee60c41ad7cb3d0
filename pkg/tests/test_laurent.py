import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotforge.laurent import (
    LaurentPolynomial as LP,
    cofactor_determinant,
    determinant,
    equal_up_to_units,
)

t = LP.t()

laurent = st.dictionaries(st.integers(-3, 3), st.integers(-4, 4), max_size=3).map(LP)


def square_matrices(max_size=5):
    return st.integers(1, max_size).flatmap(
        lambda n: st.lists(st.lists(laurent, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_arithmetic():
    p = 1 - t + t * t
    assert p.coefficients() == [1, -1, 1]
    assert (t - 1) * (t + 1) == t * t - 1
    assert LP({-1: 1}) * t == 1
    assert str(t * t - 3 * t + 1) == "t^2 - 3*t + 1"
    assert p(1) == 1 and p(-1) == 3


def test_canonical():
    p = LP({-3: -1, -2: 3, -1: -1})
    assert p.canonical() == 1 - 3 * t + t * t


def test_units():
    assert equal_up_to_units(LP({1: 1, 0: -1, -1: 1}), t * t - t + 1)
    assert not equal_up_to_units(t * t - t + 1, t * t - 3 * t + 1)


@given(laurent)
def test_reflect_invariance(p):
    assert equal_up_to_units(p, p.reflect())
    assert equal_up_to_units(p, -p.shift(5))


def test_json():
    p = t * t - 3 * t + 1
    assert LP.from_json(p.to_json()) == p


def test_known_determinant():
    m = [[1 - t, t], [-1, 1 - t]]
    assert determinant(m) == (1 - t) * (1 - t) + t


def test_zero_row():
    assert determinant([[LP(), LP()], [1, t]]).is_zero()


@settings(max_examples=50, deadline=None)
@given(square_matrices())
def test_bareiss_matches_cofactor(m):
    assert determinant(m) == cofactor_determinant(m)


def test_empty_matrix():
    assert determinant([]) == 1


def test_non_square():
    with pytest.raises(ValueError):
        determinant([[1, 2]])

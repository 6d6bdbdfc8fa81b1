from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zeonsl2.ratmat import RationalMatrix, check_dense_n, exp_nilpotent

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def square(size):
    return st.lists(st.lists(fracs, min_size=size, max_size=size), min_size=size, max_size=size)


@given(square(3), square(3), square(3))
def test_ring_axioms_against_fraction_oracle(a, b, c):
    A, B, C = (RationalMatrix.from_rows(x) for x in (a, b, c))
    assert (A @ B) @ C == A @ (B @ C)
    assert A @ (B + C) == A @ B + A @ C
    want = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert (A @ B).to_fractions() == want


def test_lowest_terms_and_equality():
    m = RationalMatrix.from_rows([[Fraction(2, 4), 1], [0, Fraction(3, 6)]])
    assert m.den == 2
    assert m == RationalMatrix([[1, 2], [0, 1]], 2)
    assert m.scale(2) == RationalMatrix.from_rows([[1, 2], [0, 1]])


def test_large_entries_promote_without_overflow():
    big = RationalMatrix.from_rows([[2 ** 40, 1], [0, 2 ** 40]])
    p = big @ big @ big
    assert p[0, 0] == 2 ** 120
    assert p[0, 1] == 3 * 2 ** 80


def test_csv_and_json():
    assert RationalMatrix.identity(2).to_csv() == "1,0\n0,1\n"
    m = RationalMatrix.from_rows([[Fraction(1, 2), -1]])
    assert m.to_csv() == "1/2,-1\n"
    assert '"rows": [["1/2", "-1"]]' in m.to_json()


def test_kron_and_transpose():
    h = RationalMatrix.from_rows([[1, 1], [1, -1]])
    hh = h.kron(h)
    assert hh.shape == (4, 4)
    assert hh == hh.T
    assert hh @ hh == RationalMatrix.identity(4).scale(4)


def test_exp_nilpotent():
    r = RationalMatrix.from_rows([[0, 0], [1, 0]])
    assert exp_nilpotent(r) == RationalMatrix.from_rows([[1, 0], [1, 1]])
    assert exp_nilpotent(r.scale(-1)) @ exp_nilpotent(r) == RationalMatrix.identity(2)


def test_permuted_and_float():
    m = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert m.permuted([1, 0]) == RationalMatrix.from_rows([[4, 3], [2, 1]])
    assert np.allclose(m.scale(Fraction(1, 2)).to_float(), [[0.5, 1], [1.5, 2]])


def test_dense_cap():
    check_dense_n(12)
    with pytest.raises(ValueError, match="capped"):
        check_dense_n(13)

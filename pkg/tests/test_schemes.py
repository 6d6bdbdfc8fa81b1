from fractions import Fraction
from math import comb

import pytest

from zeonsl2.boolean import Order, ordered_masks, popcount
from zeonsl2.operators import GroupParams, group_compose, group_element, op_matrix, T, Tstar
from zeonsl2.ratmat import RationalMatrix
from zeonsl2.schemes import (
    binary_permutation,
    chain_krawtchouk_check,
    hadamard_via_group,
    hamming_generating_check,
    hamming_matrix,
    johnson_from_binary_expansion,
    johnson_matrix,
    johnson_spectrum,
    johnson_via_inversion,
    krawtchouk_matrix,
    krawtchouk_poly,
    layer_block,
    moebius,
    poset_incidence,
    spectrum_check,
    spectrum_table,
    sylvester_hadamard,
    tj_decomposition,
    x_matrix,
)


def eye(n):
    return RationalMatrix.identity(1 << n)


def test_hamming_examples():
    assert hamming_matrix(3, 0).matrix == eye(3)
    h = hamming_matrix(2, 2).matrix  # order: ∅,{1},{2},{1,2}
    assert h == RationalMatrix.from_rows([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
    total = sum((hamming_matrix(5, j).matrix for j in range(6)), RationalMatrix.zeros(32))
    assert total == RationalMatrix.from_rows([[1] * 32] * 32)


def test_johnson_examples():
    j1 = johnson_matrix(4, 2, 1).matrix
    assert j1.shape == (6, 6)
    assert all(sum(j1[r, c] for c in range(6)) == 4 for r in range(6))
    with pytest.raises(ValueError):
        johnson_matrix(4, 2, 3)


def test_krawtchouk_low_degrees():
    n = 6
    assert krawtchouk_poly(0, n).coeffs == (1,)
    assert krawtchouk_matrix(0, n) == eye(n)
    assert krawtchouk_matrix(1, n) == x_matrix(n) == hamming_matrix(n, 1).matrix
    for n in range(2, 9):
        x = x_matrix(n)
        assert (x @ x - eye(n).scale(n)).scale(Fraction(1, 2)) == hamming_matrix(n, 2).matrix


def test_krawtchouk_values():
    # K_j(x, n) counts by coefficient of v^j in (1+v)^((n+x)/2) (1-v)^((n-x)/2)
    p = krawtchouk_poly(2, 4)
    assert [p(x) * 2 for x in (4, 2, 0, -2, -4)] == [12, 0, -4, 0, 12]


def test_chain_krawtchouk():
    for n in range(1, 7):
        assert chain_krawtchouk_check(n).ok
    assert hamming_generating_check(5).ok


def test_binary_extraction():
    g = group_element(GroupParams(1, 1, 1), 4)
    assert layer_block(g, 2) == RationalMatrix.from_rows(
        [[4, 2, 2, 2, 2, 1], [2, 4, 2, 2, 1, 2], [2, 2, 4, 1, 2, 2],
         [2, 2, 1, 4, 2, 2], [2, 1, 2, 2, 4, 2], [1, 2, 2, 2, 2, 4]])
    parts = johnson_from_binary_expansion(4, 2)
    assert [s.params for s in parts] == [johnson_matrix(4, 2, k).params for k in (2, 1, 0)]
    assert [s.matrix for s in parts] == [johnson_matrix(4, 2, k).matrix for k in (2, 1, 0)]
    assert [s.matrix for s in johnson_from_binary_expansion(3, 0)] == [RationalMatrix.identity(1)]


def test_tj_decomposition():
    assert tj_decomposition(5, 3, 0) == [1, 0, 0]
    assert tj_decomposition(5, 3, 1) == [3, 1, 0]
    for k in range(4):
        assert johnson_via_inversion(6, 3, k).matrix == johnson_matrix(6, 3, k).matrix


def test_spectrum():
    assert all(johnson_spectrum(6, 3, 0, a) == 1 for a in range(4))
    assert [johnson_spectrum(4, 2, 1, a) for a in range(3)] == [4, 0, -2]
    assert spectrum_table(4, 2, 1) == [(0, 4, 1), (1, 0, 3), (2, -2, 2)]
    for n in range(1, 7):
        assert spectrum_check(n).ok


def test_poset():
    assert poset_incidence(1) == RationalMatrix.from_rows([[1, 1], [0, 1]])
    assert moebius(1) == RationalMatrix.from_rows([[1, -1], [0, 1]])
    assert moebius(2)[0, 3] == 1
    for n in range(1, 7):
        for t in (1, Fraction(1, 2)):
            assert poset_incidence(n, t) @ moebius(n, t) == eye(n)


def test_hadamard():
    h1 = RationalMatrix.from_rows([[1, 1], [1, -1]])
    assert sylvester_hadamard(1) == h1 == hadamard_via_group(1)
    assert sylvester_hadamard(2) == RationalMatrix.from_rows(
        [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]])
    for n in range(1, 7):
        assert sylvester_hadamard(n).permuted(binary_permutation(n)) == hadamard_via_group(n)
        assert hadamard_via_group(n, Order.BINARY) == sylvester_hadamard(n)
        assert group_compose(GroupParams(1, -2, 1), GroupParams(1, -2, 1), n)[0] == 2 ** n


def test_layer_block_requires_graded_lex():
    with pytest.raises(ValueError):
        layer_block(op_matrix(T, 3, Order.BINARY), 1)

"""Acceptance criteria 1-11, each checked exactly and reported as one PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest, where
the lines also appear in the terminal summary.
"""

from __future__ import annotations

import io
import math
import random
import sys
from fractions import Fraction
from math import comb
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))
from _acceptance_log import record  # noqa: E402

from zeonsl2 import cli  # noqa: E402
from zeonsl2.boolean import Order, ordered_masks, popcount  # noqa: E402
from zeonsl2.operators import (  # noqa: E402
    GroupParams,
    SingularCompositionError,
    exp_X_float,
    exp_X_scaled,
    group_compose,
    group_element,
    leibniz_entries,
    leibniz_factored,
    leibniz_product,
    tj_layer_block,
)
from zeonsl2.ratmat import RationalMatrix  # noqa: E402
from zeonsl2.schemes import (  # noqa: E402
    hamming_matrix,
    johnson_from_binary_expansion,
    johnson_matrix,
    johnson_spectrum,
    johnson_via_inversion,
    krawtchouk_matrix,
    layer_block,
    spectrum_multiplicity,
)
from zeonsl2.verify import (  # noqa: E402
    check_casimir,
    check_complement_signs,
    check_decomposition,
    check_global_triple,
    check_kronecker,
    check_local_relations,
    check_orthogonality,
    check_poset,
    check_spectrum,
)
from zeonsl2.zbasis import state_matrices, zbasis  # noqa: E402

GOLDEN_16 = """\
1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
1 2 1 1 1 2 2 2 1 1 1 2 2 2 1 2
1 1 2 1 1 2 1 1 2 2 1 2 2 1 2 2
1 1 1 2 1 1 2 1 2 1 2 2 1 2 2 2
1 1 1 1 2 1 1 2 1 2 2 1 2 2 2 2
1 2 2 1 1 4 2 2 2 2 1 4 4 2 2 4
1 2 1 2 1 2 4 2 2 1 2 4 2 4 2 4
1 2 1 1 2 2 2 4 1 2 2 2 4 4 2 4
1 1 2 2 1 2 2 1 4 2 2 4 2 2 4 4
1 1 2 1 2 2 1 2 2 4 2 2 4 2 4 4
1 1 1 2 2 1 2 2 2 2 4 2 2 4 4 4
1 2 2 2 1 4 4 2 4 2 2 8 4 4 4 8
1 2 2 1 2 4 2 4 2 4 2 4 8 4 4 8
1 2 1 2 2 2 4 4 2 2 4 4 4 8 4 8
1 1 2 2 2 2 2 2 4 4 4 4 4 4 8 8
1 2 2 2 2 4 4 4 4 4 4 8 8 8 8 16"""

GOLDEN_BLOCK = [
    [4, 2, 2, 2, 2, 1],
    [2, 4, 2, 2, 1, 2],
    [2, 2, 4, 1, 2, 2],
    [2, 2, 1, 4, 2, 2],
    [2, 1, 2, 2, 4, 2],
    [1, 2, 2, 2, 2, 4],
]


def _grid(text: str) -> list[list[int]]:
    return [[int(x) for x in line.split()] for line in text.splitlines()]


def _cli(*argv: str) -> tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue()


def _hamming_oracle(n: int, j: int) -> RationalMatrix:
    masks = ordered_masks(n)
    return RationalMatrix.from_rows([[int(popcount(a ^ b) == j) for b in masks] for a in masks])


def _johnson_oracle(n: int, ell: int, k: int) -> RationalMatrix:
    masks = [m for m in ordered_masks(n) if popcount(m) == ell]
    return RationalMatrix.from_rows([[int(popcount(a ^ b) == 2 * k) for b in masks] for a in masks])


# 1 -------------------------------------------------------------------------------------------


def test_01_golden_group_matrix():
    code, text = _cli("group", "--n", "4", "--s", "1", "--u", "1", "--t", "1", "--format", "csv")
    expected = "".join(",".join(row.split()) + "\n" for row in GOLDEN_16.splitlines())
    g = group_element(GroupParams(1, 1, 1), 4)
    block = layer_block(g, 2)
    _, block_text = _cli("group", "--n", "4", "--s", "1", "--u", "1", "--t", "1", "--ell", "2")
    ok = (code == 0 and text == expected and g == RationalMatrix.from_rows(_grid(GOLDEN_16))
          and block == RationalMatrix.from_rows(GOLDEN_BLOCK)
          and block_text == "".join(",".join(map(str, r)) + "\n" for r in GOLDEN_BLOCK))
    record(1, "golden 16x16 g(1,1,1) for n=4 and its layer-2 block", ok)
    assert ok


# 2 -------------------------------------------------------------------------------------------


def test_02_golden_states():
    w, d = state_matrices(3, 2)
    ok = (w == RationalMatrix.from_rows([[1, 1, 1], [0, 1, -1], [2, -1, -1]])
          and d == RationalMatrix.diag([3, 2, 6]) and w @ w.T == d)
    code, text = _cli("states", "--n", "3", "--ell", "2")
    ok &= code == 0 and text == ("# n=3 ell=2 W\n1,1,1\n0,1,-1\n2,-1,-1\n"
                                 "# n=3 ell=2 D\n3,0,0\n0,2,0\n0,0,6\n")
    record(2, "state matrix W and norms D for n=3, layer 2; W W^T = D", ok)
    assert ok


# 3 -------------------------------------------------------------------------------------------


def test_03_krawtchouk_hamming():
    bad = [(n, j) for n in range(1, 9) for j in range(n + 1)
           if krawtchouk_matrix(j, n) != _hamming_oracle(n, j)]
    record(3, "K_j(X,n)/j! = H_j for 0<=j<=n, n<=8", not bad, f"{45 - len(bad)}/45 cases")
    assert not bad


# 4 -------------------------------------------------------------------------------------------


def test_04_johnson_extraction():
    bad, total = [], 0
    for n in range(1, 9):
        for ell in range(n + 1):
            total += 1
            kmax = min(ell, n - ell)
            got = [s.matrix for s in johnson_from_binary_expansion(n, ell)]
            want = [_johnson_oracle(n, ell, k) for k in range(kmax, -1, -1)]
            if got != want:
                bad.append((n, ell))
    record(4, "binary-expansion extraction of Johnson matrices, all layers, n<=8", not bad,
           f"{total - len(bad)}/{total} layers")
    assert not bad


# 5 -------------------------------------------------------------------------------------------


def test_05_inversion_pair():
    bad, total = [], 0
    for n in range(1, 9):
        for ell in range(n + 1):
            kmax = min(ell, n - ell)
            js = [johnson_matrix(n, ell, k).matrix for k in range(kmax + 1)]
            size = comb(n, ell)
            for j in range(ell + 1):
                total += 1
                acc = RationalMatrix.zeros(size)
                for k in range(min(j, kmax) + 1):
                    acc = acc + js[k].scale(comb(ell - k, j - k))
                if tj_layer_block(n, ell, j) != acc:
                    bad.append(("T_j", n, ell, j))
            for k in range(kmax + 1):
                total += 1
                if johnson_via_inversion(n, ell, k).matrix != js[k]:
                    bad.append(("J_k", n, ell, k))
    record(5, "T_j = sum C(l-k,j-k) J_k and its binomial inverse, n<=8", not bad,
           f"{total - len(bad)}/{total} identities")
    assert not bad


# 6 -------------------------------------------------------------------------------------------


def test_06_spectrum():
    rep = check_spectrum(8)
    mult_ok = True
    for n in range(1, 9):
        for ell in range(n + 1):
            counts: dict[int, int] = {}
            for z in zbasis(n):
                if z.layer_label.ell == ell:
                    a = (n - z.label.N) // 2
                    counts[a] = counts.get(a, 0) + 1
            for a, c in counts.items():
                mult_ok &= c == spectrum_multiplicity(n, a) == comb(n, a) - (comb(n, a - 1) if a else 0)
    ok = rep.ok and mult_ok and [johnson_spectrum(4, 2, 1, a) for a in range(3)] == [4, 0, -2]
    record(6, "J_k phi = Lambda_k(alpha) phi on every Z-basis state, multiplicities, n<=8", ok,
           f"{rep.passed}/{rep.checked} eigen-equations")
    assert ok, rep.failures[:5]


# 7 -------------------------------------------------------------------------------------------


def _rand(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-6, 6), rng.randint(1, 5))


def test_07_group_law():
    rng = random.Random(7)
    bad, done = [], 0
    while done < 50:
        n = rng.randint(1, 6)
        p1 = GroupParams(_rand(rng), _rand(rng), _rand(rng))
        p2 = GroupParams(_rand(rng), _rand(rng), _rand(rng))
        try:
            scalar, p = group_compose(p1, p2, n)
        except SingularCompositionError:
            continue
        done += 1
        if group_element(p1, n) @ group_element(p2, n) != group_element(p, n).scale(scalar):
            bad.append((n, p1, p2))
    had = GroupParams(1, -2, 1)
    for n in range(1, 9):
        h = group_element(had, n)
        scalar, p = group_compose(had, had, n)
        if h @ h != RationalMatrix.identity(1 << n).scale(1 << n) or (scalar, tuple(p)) != (2 ** n, (0, 1, 0)):
            bad.append(("hadamard", n))
    record(7, "group law on 50 random pairs (n<=6) and g(1,-2,1)^2 = 2^n I (n<=8)", not bad)
    assert not bad


# 8 -------------------------------------------------------------------------------------------


def test_08_leibniz():
    rng = random.Random(8)
    bad, done = [], 0
    while done < 20:
        a, t = _rand(rng), _rand(rng)
        if 1 + a * t == 0:
            continue
        n = 1 + done % 6
        done += 1
        e = leibniz_entries(t, a, n)
        if not (e == leibniz_product(t, a, n) == leibniz_factored(t, a, n)):
            bad.append((n, a, t))
    ok = not bad and leibniz_entries(1, 1, 1) == RationalMatrix.from_rows([[2, 1], [1, 1]])
    record(8, "Leibniz rule: entry, product and factored forms agree (20 random, n<=6)", ok)
    assert ok


# 9 -------------------------------------------------------------------------------------------


def test_09_exponentiation():
    bad = []
    for v in (Fraction(1, 2), Fraction(-1, 3), Fraction(2)):
        for n in range(1, 7):
            masks = ordered_masks(n)
            want = RationalMatrix.from_rows([[v ** popcount(a ^ b) for b in masks] for a in masks])
            if exp_X_scaled(v, n) != want:
                bad.append((v, n))
    t, masks = 0.3, ordered_masks(3)
    want = np.array([[math.cosh(t) ** 3 * math.tanh(t) ** popcount(a ^ b) for b in masks] for a in masks])
    err = float(np.max(np.abs(exp_X_float(t, 3) - want)))
    ok = not bad and err <= 1e-9
    record(9, "g(v,1-v^2,v) = v^|I^J| exactly; exp(0.3X) float form at n=3", ok, f"max float error {err:.1e}")
    assert ok


# 10 ------------------------------------------------------------------------------------------


def test_10_decomposition():
    reps = [check_decomposition(8), check_orthogonality(8), check_complement_signs(8)]
    ok = all(r.ok for r in reps)
    record(10, "vacuum counts, chain lengths, orthogonality, norms, complement sign, n<=8", ok,
           ", ".join(f"{r.passed}/{r.checked}" for r in reps))
    assert ok, [r.failures[:3] for r in reps]


# 11 ------------------------------------------------------------------------------------------


def test_11_algebraic_relations():
    reps = [check_local_relations(8), check_global_triple(8), check_casimir(6),
            check_kronecker(6), check_poset(8)]
    ok = all(r.ok for r in reps)
    record(11, "anticommutators, triples, sl(2) triple, Casimir, Kronecker, Moebius", ok,
           ", ".join(f"{r.passed}/{r.checked}" for r in reps))
    assert ok, [r.failures[:3] for r in reps]


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

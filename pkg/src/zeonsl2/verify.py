"""Exhaustive and randomized identity suites, grouped by module.

Each check takes the largest lattice size to try and returns a
:class:`CheckReport`.  Sizes are clipped to the cap each identity is meant to
run at, so ``run_suite("all", 6)`` and ``run_suite("all", 8)`` differ only in
how far they reach.  Random cases come from a seeded generator; reports are
deterministic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import boolean as bc
from .boolean import Order, SubsetIndex, ZeonVector
from .operators import (
    Casimir,
    Delta_hat,
    DividedPowerT,
    DividedPowerTstar,
    E_hat,
    GroupParams,
    LayerOp,
    T,
    Tj,
    Tstar,
    U,
    apply,
    casimir_matrix,
    exp_op,
    exp_X_float,
    exp_X_scaled,
    group_compose,
    group_element,
    group_element_product,
    kronecker_realization,
    layer_power,
    leibniz_entries,
    leibniz_factored,
    leibniz_product,
    op_matrix,
    tj_layer_block,
)
from .ratmat import RationalMatrix
from .report import CheckReport
from .schemes import (
    binary_permutation,
    chain_krawtchouk_check,
    hadamard_via_group,
    hamming_generating_check,
    hamming_matrix,
    johnson_from_binary_expansion,
    johnson_matrix,
    johnson_via_inversion,
    krawtchouk_matrix,
    layer_block,
    moebius,
    poset_incidence,
    spectrum_check,
    sylvester_hadamard,
    tj_decomposition,
)
from .zbasis import (
    ChainLabel,
    LayerLabel,
    chains,
    complement_sign_check,
    gram_matrix,
    label_convert,
    state_matrices,
    vacua_per_layer,
    zbasis,
)

SEED = 20240611


def rand_frac(rng: random.Random, lo: int = -9, hi: int = 9, den: int = 7) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_vector(rng: random.Random, n: int, terms: int = 5) -> ZeonVector:
    return ZeonVector(n, {rng.randrange(1 << n): rand_frac(rng) for _ in range(terms)})


def _sizes(limit: int, cap: int) -> range:
    return range(1, min(limit, cap) + 1)


# -- boolean core -------------------------------------------------------------------


def check_rank_roundtrip(limit: int) -> CheckReport:
    rep = CheckReport("rank/unrank round trip")
    for n in _sizes(limit, 12):
        ok = all(bc.subset_rank(bc.subset_unrank(r, n)) == r for r in range(1 << n))
        masks = bc.ordered_masks(n)
        layered = [bc.popcount(m) for m in masks] == sorted(bc.popcount(m) for m in masks)
        rep.record(ok and layered and masks[0] == 0 and masks[-1] == (1 << n) - 1, f"n={n}")
    return rep


def check_zeon_algebra(limit: int, trials: int = 40) -> CheckReport:
    rep = CheckReport("zeon product commutative and associative")
    rng = random.Random(SEED)
    for n in _sizes(limit, 6):
        for t in range(trials):
            a, b, c = (rand_vector(rng, n) for _ in range(3))
            rep.record(a * b == b * a and (a * b) * c == a * (b * c), f"n={n} trial {t}")
        for i in range(1, n + 1):
            e = ZeonVector.gen(n, i)
            rep.record(not (e * e), f"e_{i}^2 = 0, n={n}")
    return rep


def check_metrics(limit: int) -> CheckReport:
    rep = CheckReport("Hamming/Johnson metrics and complement isometry")
    for n in _sizes(limit, 8):
        for ell in range(n + 1):
            layer = [SubsetIndex(n, m) for m in bc.layer_masks(n, ell)]
            for I in layer:
                for J in layer:
                    dj = bc.distance("johnson", I, J)
                    rep.record(bc.distance("hamming", I, J) == 2 * dj, f"n={n} {I} {J}")
                    rep.record(bc.distance("johnson", bc.complement(I), bc.complement(J)) == dj,
                               f"isometry n={n} {I} {J}")
    return rep


def check_complement_reverses_order(limit: int) -> CheckReport:
    rep = CheckReport("complementation reverses dictionary order")
    for n in _sizes(limit, 8):
        for ell in range(n + 1):
            layer = bc.layer_masks(n, ell)
            full = (1 << n) - 1
            images = [bc.mask_elements(m ^ full) for m in layer]
            rep.record(images == sorted(images, reverse=True), f"n={n} ell={ell}")
    return rep


def check_complement_intertwines(limit: int, trials: int = 100) -> CheckReport:
    rep = CheckReport("T(phi') = (T* phi)' and T*(phi') = (T phi)'")
    rng = random.Random(SEED + 1)
    for t in range(trials):
        n = rng.randint(1, min(limit, 6))
        phi = rand_vector(rng, n)
        prime = bc.complement_involution
        rep.record(apply(T, prime(phi)) == prime(apply(Tstar, phi))
                   and apply(Tstar, prime(phi)) == prime(apply(T, phi))
                   and prime(prime(phi)) == phi, f"trial {t} n={n}")
    return rep


# -- operators ---------------------------------------------------------------------------


def _eye(n: int) -> RationalMatrix:
    return RationalMatrix.identity(1 << n, n=n, order=Order.GRADED_LEX)


def check_local_relations(limit: int) -> CheckReport:
    rep = CheckReport("local anticommutator, triples and sl(2) relations")
    for n in _sizes(limit, 8):
        eye = _eye(n)
        for i in range(1, n + 1):
            e = op_matrix(E_hat(i), n)
            d = op_matrix(Delta_hat(i), n)
            h = d @ e - e @ d
            rep.record(e @ d + d @ e == eye, f"anticommutator n={n} i={i}")
            rep.record(e @ d @ e == e and d @ e @ d == d, f"triples n={n} i={i}")
            rep.record(d.commutator(e) == h and e.commutator(h) == e.scale(2)
                       and h.commutator(d) == d.scale(2), f"local triple n={n} i={i}")
            rep.record(h == eye - (e @ d).scale(2), f"h_i = I - 2 e_i d_i, n={n} i={i}")
    return rep


def check_global_triple(limit: int) -> CheckReport:
    rep = CheckReport("standard triple {T, T*, U}")
    for n in _sizes(limit, 8):
        t, ts, u = op_matrix(T, n), op_matrix(Tstar, n), op_matrix(U, n)
        lay = op_matrix(LayerOp, n)
        rep.record(ts == t.T, f"T* = transpose(T), n={n}")
        rep.record(ts.commutator(t) == u, f"[T*,T] = U, n={n}")
        rep.record(t.commutator(u) == t.scale(2) and u.commutator(ts) == ts.scale(2), f"[T,U], [U,T*] n={n}")
        rep.record(u == _eye(n).scale(n) - lay.scale(2), f"U = nI - 2L, n={n}")
        local = RationalMatrix.zeros(1 << n, n=n, order=Order.GRADED_LEX)
        for i in range(1, n + 1):
            local = local + op_matrix(E_hat(i), n) @ op_matrix(Delta_hat(i), n)
        rep.record(local == lay, f"L = sum e_i d_i, n={n}")
        rep.record(t + ts == hamming_matrix(n, 1).matrix, f"T + T* = H_1, n={n}")
    return rep


def check_divided_powers(limit: int) -> CheckReport:
    rep = CheckReport("T^k/k! is the k-step inclusion incidence")
    for n in _sizes(limit, 8):
        t = op_matrix(T, n)
        masks = bc.ordered_masks(n)
        power = _eye(n)
        for k in range(n + 1):
            incidence = np.array([[1 if (a & b) == b and bc.popcount(a ^ b) == k else 0 for b in masks]
                                  for a in masks], dtype=np.int64)
            dp = op_matrix(DividedPowerT(k), n)
            rep.record(dp == RationalMatrix(incidence, n=n, order=Order.GRADED_LEX), f"n={n} k={k}")
            rep.record(power.scale(Fraction(1, math.factorial(k))) == dp, f"T^{k}/{k}! n={n}")
            rep.record(op_matrix(DividedPowerTstar(k), n) == dp.T, f"T*^{k}/{k}! n={n}")
            power = power @ t
    return rep


def check_scaling(limit: int, trials: int = 10) -> CheckReport:
    rep = CheckReport("a^L f(T) = f(aT) a^L and f(T*) a^L = a^L f(aT*)")
    rng = random.Random(SEED + 2)
    for n in _sizes(limit, 6):
        for _ in range(trials):
            a = rand_frac(rng)
            if not a:
                continue
            al = layer_power(a, n)
            rep.record(al @ exp_op(T, 1, n) == exp_op(T, a, n) @ al
                       and exp_op(Tstar, 1, n) @ al == al @ exp_op(Tstar, a, n), f"n={n} a={a}")
    return rep


def check_group_elements(limit: int, trials: int = 50) -> CheckReport:
    rep = CheckReport("group element closed form = exp(sT) u^L exp(tT*)")
    rng = random.Random(SEED + 3)
    for t in range(trials):
        n = 1 + t % min(limit, 6)
        p = GroupParams(rand_frac(rng), rand_frac(rng), rand_frac(rng))
        rep.record(group_element(p, n) == group_element_product(p, n), f"n={n} {tuple(p)}")
    for n in _sizes(limit, 6):
        rep.record(group_element(GroupParams(0, 1, 0), n) == _eye(n), f"g(0,1,0) = I, n={n}")
    return rep


def check_js_blocks(limit: int) -> CheckReport:
    rep = CheckReport("TT* = ell I + J_1 and T*T = (n-ell) I + J_1 on V_ell")
    for n in _sizes(limit, 8):
        t = op_matrix(T, n)
        ts = op_matrix(Tstar, n)
        tts, tst = t @ ts, ts @ t
        for ell in range(n + 1):
            j1 = johnson_matrix(n, ell, 1).matrix if min(ell, n - ell) >= 1 else \
                RationalMatrix.zeros(comb(n, ell), n=n, order=Order.GRADED_LEX, layer=ell)
            eye = RationalMatrix.identity(comb(n, ell), n=n, order=Order.GRADED_LEX, layer=ell)
            rep.record(layer_block(tts, ell) == eye.scale(ell) + j1, f"TT* n={n} ell={ell}")
            rep.record(layer_block(tst, ell) == eye.scale(n - ell) + j1, f"T*T n={n} ell={ell}")
    return rep


def check_single_pair_exponential(limit: int) -> CheckReport:
    rep = CheckReport("(e_1 + d_1)^2 = I and its exponential")
    for n in _sizes(limit, 4):
        x = op_matrix(E_hat(1), n) + op_matrix(Delta_hat(1), n)
        rep.record(x @ x == _eye(n), f"square n={n}")
        t = 0.7
        xf = x.to_float()
        series = np.eye(1 << n)
        term = np.eye(1 << n)
        for k in range(1, 40):
            term = term @ (t * xf) / k
            series = series + term
        closed = np.eye(1 << n) * math.cosh(t) + xf * math.sinh(t)
        rep.record(bool(np.max(np.abs(series - closed)) < 1e-9), f"cosh/sinh n={n}")
    return rep


def check_group_law(limit: int, trials: int = 50) -> CheckReport:
    rep = CheckReport("group law g(p1) g(p2) = (1+sb)^n g(p)")
    rng = random.Random(SEED + 4)
    done = 0
    while done < trials:
        n = 1 + done % min(limit, 6)
        p1 = GroupParams(rand_frac(rng), rand_frac(rng), rand_frac(rng))
        p2 = GroupParams(rand_frac(rng), rand_frac(rng), rand_frac(rng))
        if 1 + p2.s * p1.t == 0:
            continue
        scalar, p = group_compose(p1, p2, n)
        rep.record(group_element(p1, n) @ group_element(p2, n) == group_element(p, n).scale(scalar),
                   f"n={n} {tuple(p1)} {tuple(p2)}")
        done += 1
    for n in _sizes(limit, 8):
        h = GroupParams(1, -2, 1)
        scalar, p = group_compose(h, h, n)
        rep.record(scalar == 2 ** n and tuple(p) == (0, 1, 0), f"g(1,-2,1)^2 parameters n={n}")
        g = group_element(h, n)
        rep.record(g @ g == _eye(n).scale(2 ** n), f"g(1,-2,1)^2 = 2^n I, n={n}")
        rep.record(group_compose(h, GroupParams(0, 1, 0), n) == (1, h), f"identity element n={n}")
    return rep


def check_leibniz(limit: int, trials: int = 20) -> CheckReport:
    rep = CheckReport("Leibniz rule: entries = product = factored")
    rng = random.Random(SEED + 5)
    done = 0
    while done < trials:
        n = 1 + done % min(limit, 6)
        t, a = rand_frac(rng), rand_frac(rng)
        if 1 + a * t == 0:
            continue
        ent = leibniz_entries(t, a, n)
        rep.record(ent == leibniz_product(t, a, n) == leibniz_factored(t, a, n), f"n={n} t={t} a={a}")
        done += 1
    return rep


def check_exponentiation(limit: int) -> CheckReport:
    rep = CheckReport("exp(t(T+T*)) in the v = tanh t form")
    for n in _sizes(limit, 6):
        masks = bc.ordered_masks(n)
        for v in (Fraction(1, 2), Fraction(-1, 3), Fraction(2)):
            expect = RationalMatrix.from_rows([[v ** bc.popcount(a ^ b) for b in masks] for a in masks])
            got = exp_X_scaled(v, n)
            rep.record(got.num.shape == expect.num.shape and got.den == expect.den
                       and np.array_equal(got.num, expect.num), f"n={n} v={v}")
        rep.record(exp_X_scaled(0, n) == _eye(n), f"v=0 n={n}")
    n, t = 3, 0.3
    masks = bc.ordered_masks(n)
    series = exp_X_float(t, n)
    closed = np.array([[math.cosh(t) ** n * math.tanh(t) ** bc.popcount(a ^ b) for b in masks] for a in masks])
    rep.record(bool(np.max(np.abs(series - closed)) < 1e-9), "float series n=3 t=0.3")
    return rep


def check_kronecker(limit: int) -> CheckReport:
    rep = CheckReport("Kronecker realization is permutation equivalent")
    rep.record(RationalMatrix([[0, 0], [1, 0]]) @ RationalMatrix([[0, 0], [1, 0]])
               == RationalMatrix.zeros(2), "R^2 = 0")
    for n in _sizes(limit, 6):
        mats, perm = kronecker_realization(n)
        rep.record(sorted(perm.tolist()) == list(range(1 << n)), f"permutation n={n}")
        for i, m in enumerate(mats, start=1):
            rep.record(m.permuted(perm) == op_matrix(E_hat(i), n), f"e_{i} n={n}")
            rep.record(m.T.permuted(perm) == op_matrix(Delta_hat(i), n), f"d_{i} n={n}")
    return rep


def check_casimir(limit: int) -> CheckReport:
    rep = CheckReport("Casimir commutes and acts as (N+1)^2")
    for n in _sizes(limit, 6):
        c = casimir_matrix(n)
        rep.record(c == op_matrix(Casimir, n), f"matrix = operator, n={n}")
        for op in (T, Tstar, U):
            rep.record(c.commutator(op_matrix(op, n)).is_zero(), f"[C,{op}] n={n}")
        for ch in chains(n):
            for phi in ch.states:
                rep.record(apply(Casimir, phi) == phi.scale((ch.N + 1) ** 2), f"n={n} path {ch.path}")
    return rep


# -- Z-basis ------------------------------------------------------------------------------


def check_decomposition(limit: int) -> CheckReport:
    rep = CheckReport("vacua, chain lengths, transversality, norms")
    for n in _sizes(limit, 12):
        counts = vacua_per_layer(n)
        for ell in range(n // 2 + 1):
            expect = comb(n, ell) - (comb(n, ell - 1) if ell else 0)
            rep.record(counts.get(ell, 0) == expect, f"vacua n={n} ell={ell}")
        if n > 8:
            continue
        for ch in chains(n):
            a, N = ch.alpha, ch.N
            rep.record(N == n - 2 * a and len(ch.states) == N + 1, f"length n={n} {ch.path}")
            rep.record([min(s.layers()) for s in ch.states] == list(range(a, n - a + 1))
                       and all(len(s.layers()) == 1 for s in ch.states), f"layers n={n} {ch.path}")
            rep.record(not apply(Tstar, ch.vacuum) and apply(U, ch.vacuum) == ch.vacuum.scale(N),
                       f"vacuum n={n} {ch.path}")
            top = ch.states[-1]
            rep.record(not apply(T, top), f"T^(N+1) vacuum = 0, n={n} {ch.path}")
            n0 = ch.norms2[0]
            rep.record(all(nn == comb(N, j) * n0 for j, nn in enumerate(ch.norms2)), f"norms n={n} {ch.path}")
    return rep


def check_new_vacuum_norm(limit: int) -> CheckReport:
    rep = CheckReport("norm of a new vacuum = N(N+1) |phi_0|^2")
    for n in _sizes(limit, 8):
        if n == 1:
            continue
        for ch in chains(n):
            lv = ch.path.levels
            if lv[-1] < lv[-2]:
                parent = next(c for c in chains(n - 1) if c.path.levels == lv[:-1])
                N = parent.N
                rep.record(ch.norms2[0] == N * (N + 1) * parent.norms2[0], f"n={n} {ch.path}")
    return rep


def check_orthogonality(limit: int) -> CheckReport:
    rep = CheckReport("Z-basis Gram matrix is diagonal")
    for n in _sizes(limit, 8):
        states = [z.vector for z in zbasis(n)]
        g = gram_matrix(states)
        rep.record(g.is_diagonal() and len(states) == 1 << n, f"n={n}")
        rep.record(g.diagonal() == [z.norm2 for z in zbasis(n)], f"norms n={n}")
        for ell in range(n + 1):
            w, d = state_matrices(n, ell)
            rep.record(w @ w.T == d and w.shape == (comb(n, ell), comb(n, ell)), f"W W^T = D n={n} ell={ell}")
    return rep


def check_diagonal_operators(limit: int) -> CheckReport:
    rep = CheckReport("TT*, T*T, U, L, T_j diagonal on the Z-basis")
    for n in _sizes(limit, 8):
        for ch in chains(n):
            N = ch.N
            for j, phi in enumerate(ch.states):
                ok = apply(T, apply(Tstar, phi)) == phi.scale(j * (N + 1 - j))
                ok &= apply(Tstar, apply(T, phi)) == phi.scale((j + 1) * (N - j))
                ok &= apply(LayerOp, phi) == phi.scale(ch.alpha + j)
                for m in range(j + 1):
                    lam = comb(j, m) * comb(N - j + m, m)
                    ok &= apply(Tj(m), phi) == phi.scale(lam)
                rep.record(ok, f"n={n} {ch.path} j={j}")
    return rep


def check_vacuum_pairing(limit: int, trials: int = 3) -> CheckReport:
    rep = CheckReport("<exp(tT) W, exp(sT) W'> = (1+st)^(n-2l) <W, W'>")
    rng = random.Random(SEED + 6)
    for n in _sizes(limit, 6):
        for _ in range(trials):
            s, t = rand_frac(rng), rand_frac(rng)
            for a in chains(n):
                for b in chains(n):
                    if a.alpha != b.alpha:
                        continue
                    lhs = bc.inner_product(_exp_t_on(a, t), _exp_t_on(b, s))
                    rhs = (1 + s * t) ** (n - 2 * a.alpha) * bc.inner_product(a.vacuum, b.vacuum)
                    rep.record(lhs == rhs, f"n={n} {a.path} {b.path} s={s} t={t}")
    return rep


def _exp_t_on(ch, t: Fraction) -> ZeonVector:
    acc = ZeonVector.zero(ch.vacuum.n)
    for j, phi in enumerate(ch.states):
        acc = acc + phi.scale(t ** j)
    return acc


def check_labels(limit: int) -> CheckReport:
    rep = CheckReport("label conversion round trip")
    for n in _sizes(limit, 8):
        for ell in range(n + 1):
            for k in range(1, comb(n, ell) + 1):
                lbl = LayerLabel(n, ell, k)
                other = label_convert(lbl)
                rep.record(isinstance(other, ChainLabel) and label_convert(other) == lbl
                           and other.N - 2 * other.j == n - 2 * ell, f"n={n} ell={ell} k={k}")
        for z in zbasis(n):
            rep.record(label_convert(z.label) == z.layer_label, f"zbasis label n={n} {z.label}")
    return rep


def check_complement_signs(limit: int) -> CheckReport:
    rep = CheckReport("complement sign (-1)^alpha")
    for n in _sizes(limit, 8):
        rep.merge(complement_sign_check(n))
    return rep


# -- schemes ------------------------------------------------------------------------------


def check_krawtchouk_hamming(limit: int) -> CheckReport:
    rep = CheckReport("K_j(T+T*, n)/j! = H_j")
    for n in _sizes(limit, 8):
        for j in range(n + 1):
            rep.record(krawtchouk_matrix(j, n) == hamming_matrix(n, j).matrix, f"n={n} j={j}")
    return rep


def check_chain_krawtchouk(limit: int) -> CheckReport:
    rep = CheckReport("K_j(T+T*, N) on each chain")
    for n in _sizes(limit, 8):
        rep.merge(chain_krawtchouk_check(n))
    return rep


def check_hamming_generating(limit: int) -> CheckReport:
    rep = CheckReport("sum_j v^j H_j = v^|I Δ J|")
    for n in _sizes(limit, 6):
        rep.merge(hamming_generating_check(n))
    return rep


def check_scheme_sums(limit: int) -> CheckReport:
    rep = CheckReport("row sums, partitions of all-ones, commuting Johnson matrices")
    for n in _sizes(limit, 8):
        total = RationalMatrix.zeros(1 << n, n=n, order=Order.GRADED_LEX)
        for j in range(n + 1):
            h = hamming_matrix(n, j).matrix
            total = total + h
            rep.record(h == h.T and all(int(s) == comb(n, j) for s in h.num.sum(axis=1)), f"H n={n} j={j}")
        rep.record(bool(np.all(total.num == 1)), f"sum H_j = ones, n={n}")
        for ell in range(n + 1):
            top = min(ell, n - ell)
            mats = [johnson_matrix(n, ell, k).matrix for k in range(top + 1)]
            acc = mats[0]
            for m in mats[1:]:
                acc = acc + m
            rep.record(bool(np.all(acc.num == 1)), f"sum J_k = ones n={n} ell={ell}")
            for k, m in enumerate(mats):
                rep.record(m == m.T and all(int(s) == comb(ell, k) * comb(n - ell, k) for s in m.num.sum(axis=1)),
                           f"J n={n} ell={ell} k={k}")
            for a, b in combinations(mats, 2):
                rep.record(a @ b == b @ a, f"commute n={n} ell={ell}")
    return rep


def check_specialization(limit: int) -> CheckReport:
    rep = CheckReport("g(t,1,t) on V_ell = t^(2j) (1+t^2)^(ell-j)")
    for n in _sizes(limit, 8):
        for t in (Fraction(1), Fraction(1, 2), Fraction(-3, 2)):
            g = group_element(GroupParams(t, 1, t), n)
            for ell in range(n + 1):
                masks = bc.layer_masks(n, ell)
                expect = RationalMatrix.from_rows(
                    [[t ** (2 * (ell - bc.popcount(a & b))) * (1 + t * t) ** bc.popcount(a & b) for b in masks]
                     for a in masks], n=n, order=Order.GRADED_LEX, layer=ell)
                rep.record(layer_block(g, ell) == expect, f"n={n} t={t} ell={ell}")
    return rep


def check_johnson_extraction(limit: int) -> CheckReport:
    rep = CheckReport("Johnson matrices from the binary expansion of e^T e^T*")
    for n in _sizes(limit, 8):
        for ell in range(n + 1):
            out = johnson_from_binary_expansion(n, ell)
            top = min(ell, n - ell)
            ks = [s.params[1] for s in out]
            rep.record(ks == list(range(top, -1, -1)), f"order n={n} ell={ell}")
            for s in out:
                rep.record(s.matrix == johnson_matrix(n, ell, s.params[1]).matrix, f"n={n} ell={ell} k={s.params[1]}")
    return rep


def check_inversion_pair(limit: int) -> CheckReport:
    rep = CheckReport("T_j|V_ell = sum_k C(ell-k, j-k) J_k and its inverse")
    for n in _sizes(limit, 8):
        for ell in range(n + 1):
            top = min(ell, n - ell)
            js = [johnson_matrix(n, ell, k).matrix for k in range(top + 1)]
            for j in range(n + 1):
                coef = tj_decomposition(n, ell, j)
                acc = RationalMatrix.zeros(comb(n, ell), n=n, order=Order.GRADED_LEX, layer=ell)
                for c, m in zip(coef, js):
                    acc = acc + m.scale(c)
                block = tj_layer_block(n, ell, j)
                rep.record(block == acc, f"T_{j} n={n} ell={ell}")
            for k in range(top + 1):
                rep.record(johnson_via_inversion(n, ell, k).matrix == js[k], f"J_{k} n={n} ell={ell}")
        if n <= 6:
            tjm = op_matrix(Tj(1), n)
            for ell in range(n + 1):
                rep.record(layer_block(tjm, ell) == tj_layer_block(n, ell, 1), f"T_1 global vs block n={n} ell={ell}")
    return rep


def check_spectrum(limit: int) -> CheckReport:
    rep = CheckReport("Johnson spectrum on the Z-basis")
    for n in _sizes(limit, 8):
        rep.merge(spectrum_check(n))
    return rep


def check_poset(limit: int) -> CheckReport:
    rep = CheckReport("Boolean poset zeta/Moebius")
    for n in _sizes(limit, 8):
        for t in (Fraction(1), Fraction(1, 2)):
            e, m = poset_incidence(n, t), moebius(n, t)
            rep.record(e @ m == _eye(n), f"E M = I n={n} t={t}")
            if n <= 6:
                rep.record(e == exp_op(Tstar, t, n) and m == exp_op(Tstar, -t, n), f"exp form n={n} t={t}")
        masks = bc.ordered_masks(n)
        e1, m1 = poset_incidence(n), moebius(n)
        zeta = [[1 if a & b == a else 0 for b in masks] for a in masks]
        mob = [[(-1) ** bc.popcount(a ^ b) if a & b == a else 0 for b in masks] for a in masks]
        rep.record(e1 == RationalMatrix.from_rows(zeta) and m1 == RationalMatrix.from_rows(mob), f"t=1 n={n}")
    return rep


def check_hadamard(limit: int) -> CheckReport:
    rep = CheckReport("Sylvester-Hadamard vs g(1,-2,1)")
    for n in _sizes(limit, 8):
        h = sylvester_hadamard(n)
        g = hadamard_via_group(n)
        rep.record(h @ h.T == RationalMatrix.identity(1 << n).scale(2 ** n), f"H H^T n={n}")
        rep.record(g @ g.T == _eye(n).scale(2 ** n), f"g g^T n={n}")
        rep.record(all(int(h.num[a, b]) == (-1) ** bc.popcount(a & b)
                       for a in range(1 << n) for b in range(1 << n)), f"(-1)^(a.b) n={n}")
        rep.record(h.permuted(binary_permutation(n)) == g, f"permutation n={n}")
        rep.record(hadamard_via_group(n, Order.BINARY) == h, f"binary order n={n}")
    return rep


SUITES = {
    "boolean": [check_rank_roundtrip, check_zeon_algebra, check_metrics,
                check_complement_reverses_order, check_complement_intertwines],
    "operators": [check_local_relations, check_global_triple, check_divided_powers, check_scaling,
                  check_group_elements, check_js_blocks, check_single_pair_exponential, check_group_law,
                  check_leibniz, check_exponentiation, check_kronecker, check_casimir],
    "zbasis": [check_decomposition, check_new_vacuum_norm, check_orthogonality, check_diagonal_operators,
               check_vacuum_pairing, check_labels, check_complement_signs],
    "schemes": [check_krawtchouk_hamming, check_chain_krawtchouk, check_hamming_generating,
                check_scheme_sums, check_specialization, check_johnson_extraction, check_inversion_pair,
                check_spectrum, check_poset, check_hadamard],
}


def run_suite(suite: str, limit: int) -> list[CheckReport]:
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return [check(limit) for name in names for check in SUITES[name]]

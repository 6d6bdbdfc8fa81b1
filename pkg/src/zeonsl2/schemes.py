"""Hamming and Johnson scheme matrices, Krawtchouk polynomials and Johnson spectra,
the Boolean poset zeta/Möbius pair, and Sylvester-Hadamard matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .boolean import Order, ZeonVector, layer_masks, layer_offset, ordered_masks, popcount, rank_table, _frac
from .operators import GroupParams, T, Tstar, X_apply, group_element, op_matrix, tj_layer_block
from .ratmat import RationalMatrix, check_dense_n
from .report import CheckReport
from .zbasis import chains, layer_coordinates


def _binom(a: int, b: int) -> int:
    # zero unless b is a nonnegative integer; a may be negative only when b == 0
    if b < 0:
        return 0
    if a < 0:
        return 0 if b else 1
    return comb(a, b)


# -- relation matrices ----------------------------------------------------------------


@dataclass(frozen=True)
class SchemeMatrix:
    kind: str  # "hamming" or "johnson"
    n: int
    params: tuple[int, ...]  # (j,) or (ell, k)
    matrix: RationalMatrix


def _pc_matrix(masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pc = np.vectorize(popcount, otypes=[np.int64])
    return pc(masks[:, None] ^ masks[None, :]), pc(masks[:, None] & masks[None, :])


def hamming_matrix(n: int, j: int, order: Order | str = Order.GRADED_LEX) -> SchemeMatrix:
    """0/1 matrix of the relation ``|I Δ J| = j`` on all of ``B(n)``."""
    check_dense_n(n)
    if not 0 <= j <= n:
        raise ValueError(f"Hamming index j={j} outside 0..{n}")
    masks = np.array(ordered_masks(n, order), dtype=np.int64)
    sym, _ = _pc_matrix(masks)
    return SchemeMatrix("hamming", n, (j,), RationalMatrix((sym == j).astype(np.int64), n=n, order=order))


def johnson_matrix(n: int, ell: int, k: int) -> SchemeMatrix:
    """0/1 matrix of ``|I ∩ J| = ell - k`` on layer ``ell`` (lexicographic order)."""
    if not 0 <= ell <= n:
        raise ValueError(f"layer {ell} outside 0..{n}")
    if not 0 <= k <= min(ell, n - ell):
        raise ValueError(f"Johnson index k={k} outside 0..{min(ell, n - ell)}")
    masks = np.array(layer_masks(n, ell), dtype=np.int64)
    _, cap = _pc_matrix(masks)
    mat = RationalMatrix((cap == ell - k).astype(np.int64), n=n, order=Order.GRADED_LEX, layer=ell)
    return SchemeMatrix("johnson", n, (ell, k), mat)


def layer_block(m: RationalMatrix, ell: int) -> RationalMatrix:
    """Diagonal ``V_ell`` block of a graded-lex matrix on ``B(n)``."""
    if m.n is None or m.order is not Order.GRADED_LEX:
        raise ValueError("layer blocks need a graded-lex matrix on the whole lattice")
    start = layer_offset(m.n, ell)
    idx = range(start, start + comb(m.n, ell))
    return m.submatrix(idx, n=m.n, order=Order.GRADED_LEX, layer=ell)


# -- Krawtchouk polynomials -----------------------------------------------------------


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, b in enumerate(q):
        out[i] += b
    return out


def _choose_poly(shift: int, sign: int, m: int) -> list[Fraction]:
    """Polynomial ``x ↦ C((shift + sign·x)/2, m)`` as ascending coefficients."""
    out = [Fraction(1)]
    for r in range(m):
        out = _poly_mul(out, [Fraction(shift, 2) - r, Fraction(sign, 2)])
    return [c / factorial(m) for c in out]


@dataclass(frozen=True)
class KrawtchoukPoly:
    """``x ↦ K_j(x, n) / j!``, the coefficient of ``v^j`` in
    ``(1+v)^((n+x)/2) (1-v)^((n-x)/2)``; ``coeffs`` ascend in powers of ``x``."""

    j: int
    n: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def unscaled(self) -> tuple[Fraction, ...]:
        """Coefficients of ``K_j`` itself."""
        return tuple(c * factorial(self.j) for c in self.coeffs)

    def at_matrix(self, x: RationalMatrix) -> RationalMatrix:
        """Horner evaluation at a square matrix, exact."""
        size = x.shape[0]
        meta = {"n": x.n, "order": x.order, "layer": x.layer}
        eye = RationalMatrix.identity(size, **meta)
        acc = RationalMatrix.zeros(size, **meta)
        for c in reversed(self.coeffs):
            acc = acc @ x + eye.scale(c)
        return acc

    def at_operator(self, v: ZeonVector, apply_x=X_apply) -> ZeonVector:
        """``p(X) v`` by Horner with sparse applications of ``X``."""
        acc = ZeonVector.zero(v.n)
        for c in reversed(self.coeffs):
            acc = apply_x(acc) + v.scale(c)
        return acc


def krawtchouk_poly(j: int, n: int) -> KrawtchoukPoly:
    if not 0 <= j <= n:
        raise ValueError(f"Krawtchouk degree j={j} outside 0..{n}")
    total = [Fraction(0)]
    for i in range(j + 1):
        term = _poly_mul(_choose_poly(n, 1, j - i), _choose_poly(n, -1, i))
        if i % 2:
            term = [-c for c in term]
        total = _poly_add(total, term)
    while len(total) > 1 and not total[-1]:
        total.pop()
    return KrawtchoukPoly(j, n, tuple(total))


def x_matrix(n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    return op_matrix(T, n, order) + op_matrix(Tstar, n, order)


def krawtchouk_matrix(j: int, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``K_j(T + T*, n) / j!`` as an exact matrix."""
    if n > 10:
        raise ValueError("Krawtchouk matrices are evaluated for n <= 10")
    return krawtchouk_poly(j, n).at_matrix(x_matrix(n, order))


def chain_krawtchouk_check(n: int) -> CheckReport:
    """``K_j(X, N) φ_0 = j! φ̃_j`` per chain, plus the three-term recurrence."""
    if not 1 <= n <= 8:
        raise ValueError("chain Krawtchouk check runs for 1 <= n <= 8")
    rep = CheckReport(f"chain Krawtchouk n={n}")
    for ch in chains(n):
        N = ch.N
        phis = [s.scale(factorial(j)) for j, s in enumerate(ch.states)]
        for j in range(N + 1):
            got = krawtchouk_poly(j, N).at_operator(ch.vacuum).scale(factorial(j))
            rep.record(got == phis[j], f"path {ch.path} K_{j}")
            nxt = phis[j + 1] if j < N else ZeonVector.zero(n)
            prev = phis[j - 1].scale(j * (N + 1 - j)) if j else ZeonVector.zero(n)
            rep.record(X_apply(phis[j]) == nxt + prev, f"path {ch.path} recurrence j={j}")
    return rep


# -- Johnson matrices from the group element ---------------------------------------------


def johnson_from_binary_expansion(n: int, ell: int) -> list[SchemeMatrix]:
    """Peel the Johnson matrices off the ``V_ell`` block of ``e^T e^{T*}``.

    The block equals ``Σ_k 2^(ell-k) J_k``; its base-2 digits, least significant
    first, are ``J_kmax, …, J_0`` with ``kmax = min(ell, n-ell)``.  When
    ``ell > n/2`` every entry carries the common factor ``2^(ell-kmax)``, which
    is divided out first.  Returned in that extraction order.
    """
    if not 0 <= ell <= n <= 10:
        raise ValueError("binary-expansion extraction needs 0 <= ell <= n <= 10")
    block = layer_block(group_element(GroupParams(1, 1, 1), n), ell)
    if not block.is_integer() or np.any(block.num < 0):
        raise ArithmeticError("layer block must be a nonnegative integer matrix")
    kmax = min(ell, n - ell)
    rest = block.num.astype(object)
    shift = 1 << (ell - kmax)
    if np.any(rest % shift):
        raise ArithmeticError("layer block lacks the expected power-of-two factor")
    rest = rest // shift
    out = []
    for k in range(kmax, -1, -1):
        digit = rest % 2
        out.append(SchemeMatrix("johnson", n, (ell, k),
                                RationalMatrix(digit, n=n, order=Order.GRADED_LEX, layer=ell)))
        rest = (rest - digit) // 2
    if np.any(rest):
        raise ArithmeticError("nonzero residue after binary expansion")
    return out


def tj_decomposition(n: int, ell: int, j: int) -> list[int]:
    """Coefficients ``c_k = C(ell-k, j-k)`` with ``T_j|V_ell = Σ_k c_k J_k``."""
    if not 0 <= ell <= n or not 0 <= j <= n:
        raise ValueError("layer or degree out of range")
    return [_binom(ell - k, j - k) for k in range(min(ell, n - ell) + 1)]


def johnson_via_inversion(n: int, ell: int, k: int) -> SchemeMatrix:
    """``J_k = Σ_j (-1)^(k-j) C(ell-j, k-j) T_j|V_ell`` from materialized ``T_j`` blocks."""
    if not 0 <= ell <= n <= 10:
        raise ValueError("inversion is evaluated for 0 <= ell <= n <= 10")
    if not 0 <= k <= min(ell, n - ell):
        raise ValueError(f"Johnson index k={k} outside 0..{min(ell, n - ell)}")
    size = comb(n, ell)
    acc = RationalMatrix.zeros(size, n=n, order=Order.GRADED_LEX, layer=ell)
    for j in range(k + 1):
        coef = (-1) ** (k - j) * _binom(ell - j, k - j)
        if coef:
            acc = acc + tj_layer_block(n, ell, j).scale(coef)
    return SchemeMatrix("johnson", n, (ell, k), acc)


# -- Johnson spectrum ----------------------------------------------------------------------


def johnson_spectrum(n: int, ell: int, k: int, alpha: int) -> int:
    """Eigenvalue of ``J_k`` on layer ``ell`` for states of ``α``-chains."""
    top = min(ell, n - ell)
    if not 0 <= ell <= n or not 0 <= k <= top or not 0 <= alpha <= top:
        raise ValueError(f"need 0 <= k, alpha <= {top} on layer {ell} of B({n})")
    return sum(
        _binom(ell - alpha, j) * _binom(n - ell - alpha + j, j) * _binom(ell - j, k - j) * (-1) ** (k - j)
        for j in range(k + 1)
    )


def spectrum_multiplicity(n: int, alpha: int) -> int:
    return comb(n, alpha) - _binom(n, alpha - 1)


def spectrum_table(n: int, ell: int, k: int) -> list[tuple[int, int, int]]:
    """Rows ``(α, Λ, multiplicity)`` for ``α = 0 … min(ell, n-ell)``."""
    if not 0 <= ell <= n or not 0 <= k <= min(ell, n - ell):
        raise ValueError(f"need 0 <= ell <= {n} and 0 <= k <= min(ell, n-ell)")
    return [(a, johnson_spectrum(n, ell, k, a), spectrum_multiplicity(n, a))
            for a in range(min(ell, n - ell) + 1)]


def spectrum_check(n: int) -> CheckReport:
    """``J_k φ = Λ_k(α) φ`` for every Z-basis state in every layer, every ``k``."""
    rep = CheckReport(f"Johnson spectrum n={n}")
    for ell in range(n + 1):
        top = min(ell, n - ell)
        members = [ch for ch in chains(n) if ch.alpha <= ell <= n - ch.alpha]
        cols = RationalMatrix.from_rows(layer_coordinates(ch.states[ell - ch.alpha], ell) for ch in members).T
        for k in range(top + 1):
            image = johnson_matrix(n, ell, k).matrix @ cols
            lams = [johnson_spectrum(n, ell, k, ch.alpha) for ch in members]
            expected = cols @ RationalMatrix.diag(lams)
            for c, ch in enumerate(members):
                rep.record(np.array_equal(image.num[:, c] * expected.den, expected.num[:, c] * image.den),
                           f"ell={ell} k={k} path {ch.path}")
        for a in range(top + 1):
            count = sum(1 for ch in members if ch.alpha == a)
            rep.record(count == spectrum_multiplicity(n, a), f"multiplicity ell={ell} alpha={a}")
    return rep


# -- Boolean poset ----------------------------------------------------------------------------


def poset_incidence(n: int, t=1, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``exp(t T*)``: entries ``t^{|J∖I|}`` when ``I ⊂ J``, else 0."""
    return group_element(GroupParams(0, 1, t), n, order)


def moebius(n: int, t=1, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``exp(-t T*)``, the inverse of :func:`poset_incidence`."""
    return group_element(GroupParams(0, 1, -_frac(t)), n, order)


# -- Sylvester-Hadamard --------------------------------------------------------------------------

H1 = RationalMatrix([[1, 1], [1, -1]])


def sylvester_hadamard(n: int) -> RationalMatrix:
    """``H_n = H_1 ⊗ H_(n-1)``; row ``b`` is labelled by the integer ``b`` (binary order)."""
    check_dense_n(n)
    h = H1
    for _ in range(n - 1):
        h = H1.kron(h)
    h.n, h.order = n, Order.BINARY
    return h


def hadamard_via_group(n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``g(1, -2, 1)``, with entries ``(-1)^{|I ∩ J|}``."""
    return group_element(GroupParams(1, -2, 1), n, order)


def binary_permutation(n: int) -> np.ndarray:
    """``perm[b]`` = graded-lex rank of the subset whose element ``i`` is bit ``i-1`` of ``b``."""
    ranks = rank_table(n)
    return np.array([ranks[b] for b in range(1 << n)], dtype=np.int64)


def hamming_generating_check(n: int) -> CheckReport:
    """Per entry, ``Σ_j v^j (H_j)_IJ`` equals ``v^{|I Δ J|}`` as polynomials in ``v``."""
    rep = CheckReport(f"Hamming generating function n={n}")
    masks = ordered_masks(n)
    mats = [hamming_matrix(n, j).matrix for j in range(n + 1)]
    for r, a in enumerate(masks):
        for c, b in enumerate(masks):
            coeffs = [int(m.num[r, c]) for m in mats]
            expect = [1 if j == popcount(a ^ b) else 0 for j in range(n + 1)]
            rep.record(coeffs == expect, f"entry ({r},{c})")
    return rep


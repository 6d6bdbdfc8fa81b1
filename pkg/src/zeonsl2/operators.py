"""sl(2) operators on the zeon algebra, their matrices, and the group elements.

The raising operator ``T = Σ ê_i`` adjoins one element, its adjoint
``T* = Σ δ̂_i`` removes one, and ``U = [T*, T] = nI - 2L`` where ``L`` counts
elements.  Group elements ``g(s, u, t) = exp(sT) u^L exp(tT*)`` are built both
from the closed-form entries and as explicit matrix products; the two routes
are kept separate so one can check the other.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, lcm

import numpy as np

from .boolean import (
    Order,
    ZeonVector,
    mask_elements,
    ordered_masks,
    layer_masks,
    popcount,
    rank_table,
    _frac,
)
from .ratmat import RationalMatrix, check_dense_n, exp_nilpotent

# -- operator kinds -----------------------------------------------------------

_INDEXED = {"E_hat", "Delta_hat", "H_hat"}
_POWERED = {"DividedPowerT", "DividedPowerTstar", "Tj"}
_PLAIN = {"T", "Tstar", "U", "LayerOp", "Casimir"}


@dataclass(frozen=True)
class Op:
    """An operator on the zeon algebra, e.g. ``Op("E_hat", 2)`` or ``Op("T")``."""

    kind: str
    param: int | None = None

    def __post_init__(self) -> None:
        if self.kind in _PLAIN:
            if self.param is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        elif self.kind in _INDEXED | _POWERED:
            if not isinstance(self.param, int):
                raise ValueError(f"{self.kind} needs an integer parameter")
            if self.param < (1 if self.kind in _INDEXED else 0):
                raise ValueError(f"{self.kind}: parameter {self.param} out of range")
        else:
            raise ValueError(f"unknown operator kind {self.kind!r}")

    def check(self, n: int) -> None:
        if self.kind in _INDEXED and not 1 <= self.param <= n:
            raise ValueError(f"{self.kind}({self.param}): index must lie in 1..{n}")
        if self.kind in _POWERED and not 0 <= self.param <= n:
            raise ValueError(f"{self.kind}({self.param}): parameter must lie in 0..{n}")

    def __str__(self) -> str:
        return self.kind if self.param is None else f"{self.kind}({self.param})"


def E_hat(i: int) -> Op:
    return Op("E_hat", i)


def Delta_hat(i: int) -> Op:
    return Op("Delta_hat", i)


def H_hat(i: int) -> Op:
    return Op("H_hat", i)


def DividedPowerT(k: int) -> Op:
    return Op("DividedPowerT", k)


def DividedPowerTstar(k: int) -> Op:
    return Op("DividedPowerTstar", k)


def Tj(j: int) -> Op:
    return Op("Tj", j)


T = Op("T")
Tstar = Op("Tstar")
U = Op("U")
LayerOp = Op("LayerOp")
Casimir = Op("Casimir")


def parse_op(text: str) -> Op:
    """Parse ``T``, ``Tstar``, ``U``, ``L``, ``C``, ``E:i``, ``D:i``, ``H:i``,
    ``T^k``, ``Tstar^k`` or ``Tj:j``."""
    text = text.strip()
    aliases = {"T": T, "Tstar": Tstar, "T*": Tstar, "U": U, "L": LayerOp,
               "LayerOp": LayerOp, "C": Casimir, "Casimir": Casimir}
    if text in aliases:
        return aliases[text]
    for sep in (":", "^"):
        if sep in text:
            head, _, arg = text.partition(sep)
            try:
                k = int(arg)
            except ValueError:
                break
            table = {(":", "E"): "E_hat", (":", "D"): "Delta_hat", (":", "H"): "H_hat",
                     (":", "Tj"): "Tj", ("^", "T"): "DividedPowerT",
                     ("^", "Tstar"): "DividedPowerTstar", ("^", "T*"): "DividedPowerTstar"}
            if (sep, head) in table:
                return Op(table[(sep, head)], k)
            break
    raise ValueError(f"unknown operator {text!r}")


# -- action on vectors ----------------------------------------------------------


def _acc(out: dict[int, Fraction], m: int, c: Fraction) -> None:
    s = out.get(m, 0) + c
    if s:
        out[m] = s
    else:
        out.pop(m, None)


def _submasks_of_size(bits: int, k: int):
    for combo in combinations(mask_elements(bits), k):
        yield sum(1 << (i - 1) for i in combo)


def apply(op: Op, v: ZeonVector) -> ZeonVector:
    """Exact action of ``op`` on ``v`` (sparse)."""
    n = v.n
    op.check(n)
    full = (1 << n) - 1
    out: dict[int, Fraction] = {}
    kind = op.kind
    if kind == "E_hat":
        b = 1 << (op.param - 1)
        for m, c in v._terms.items():
            if not m & b:
                _acc(out, m | b, c)
    elif kind == "Delta_hat":
        b = 1 << (op.param - 1)
        for m, c in v._terms.items():
            if m & b:
                _acc(out, m ^ b, c)
    elif kind == "H_hat":
        b = 1 << (op.param - 1)
        for m, c in v._terms.items():
            _acc(out, m, -c if m & b else c)
    elif kind == "T":
        for m, c in v._terms.items():
            free = full ^ m
            while free:
                low = free & -free
                _acc(out, m | low, c)
                free ^= low
    elif kind == "Tstar":
        for m, c in v._terms.items():
            rest = m
            while rest:
                low = rest & -rest
                _acc(out, m ^ low, c)
                rest ^= low
    elif kind == "U":
        for m, c in v._terms.items():
            _acc(out, m, (n - 2 * popcount(m)) * c)
    elif kind == "LayerOp":
        for m, c in v._terms.items():
            _acc(out, m, popcount(m) * c)
    elif kind == "DividedPowerT":
        for m, c in v._terms.items():
            for k in _submasks_of_size(full ^ m, op.param):
                _acc(out, m | k, c)
    elif kind == "DividedPowerTstar":
        for m, c in v._terms.items():
            for k in _submasks_of_size(m, op.param):
                _acc(out, m ^ k, c)
    elif kind == "Tj":
        return apply(DividedPowerT(op.param), apply(DividedPowerTstar(op.param), v))
    elif kind == "Casimir":
        raised = apply(T, apply(Tstar, v)).scale(4)
        w = apply(U, v) + v
        return raised + apply(U, w) + w
    return ZeonVector._raw(n, out)


def X_apply(v: ZeonVector) -> ZeonVector:
    """``(T + T*) v``."""
    return apply(T, v) + apply(Tstar, v)


# -- matrices -------------------------------------------------------------------


def op_matrix(op: Op, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """Matrix of :func:`apply` in the natural basis; column ``J`` holds ``op e_J``."""
    check_dense_n(n)
    op.check(n)
    order = Order(order)
    masks = ordered_masks(n, order)
    ranks = rank_table(n, order)
    size = 1 << n
    num = np.zeros((size, size), dtype=np.int64)
    for col, m in enumerate(masks):
        image = apply(op, ZeonVector._raw(n, {m: Fraction(1)}))
        for r, c in image.terms.items():
            num[ranks[r], col] = int(c)  # all operators here have integer entries
    return RationalMatrix(num, n=n, order=order)


def layer_step_block(n: int, ell: int, up: bool = True) -> RationalMatrix:
    """Block of ``T`` from ``V_ell`` to ``V_ell+1`` (``up``), or of ``T*`` from
    ``V_ell`` to ``V_ell-1``; rows and columns in lexicographic order."""
    target = ell + 1 if up else ell - 1
    if not 0 <= ell <= n or not 0 <= target <= n:
        raise ValueError(f"no layer step from {ell} {'up' if up else 'down'} for n={n}")
    src, dst = layer_masks(n, ell), layer_masks(n, target)
    pos = {m: i for i, m in enumerate(dst)}
    num = np.zeros((len(dst), len(src)), dtype=np.int64)
    for col, m in enumerate(src):
        bits = ((1 << n) - 1) ^ m if up else m
        while bits:
            low = bits & -bits
            num[pos[m ^ low], col] = 1
            bits ^= low
    return RationalMatrix(num, n=n, order=Order.GRADED_LEX)


def _entry_table(n: int, order: Order, fn) -> RationalMatrix:
    """Matrix whose ``(I, J)`` entry is ``fn(|I∖J|, |I∩J|, |J∖I|, |(I∪J)'|)``.

    Only ``(n+1)^3`` distinct values exist, so they are tabulated once as
    fractions and scattered by fancy indexing.
    """
    masks = np.array(ordered_masks(n, order), dtype=np.int64)
    ia = masks[:, None]
    ja = masks[None, :]
    pc = np.vectorize(popcount, otypes=[np.int64])
    a = pc(ia & ~ja)
    b = pc(ia & ja)
    c = pc(~ia & ja)
    vals = {}
    for x in range(n + 1):
        for y in range(n + 1 - x):
            for z in range(n + 1 - x - y):
                vals[(x, y, z)] = Fraction(fn(x, y, z, n - x - y - z))
    den = lcm(*(f.denominator for f in vals.values()))
    table = np.zeros((n + 1, n + 1, n + 1), dtype=object)
    for (x, y, z), f in vals.items():
        table[x, y, z] = f.numerator * (den // f.denominator)
    return RationalMatrix(table[a, b, c], int(den), n=n, order=order)


def _pow(x: Fraction, k: int) -> Fraction:
    # 0^0 = 1 (empty product)
    return Fraction(1) if k == 0 else x ** k


@dataclass(frozen=True)
class GroupParams:
    """Parameters ``(s, u, t)`` of ``g(s, u, t) = exp(sT) u^L exp(tT*)``."""

    s: Fraction
    u: Fraction
    t: Fraction

    def __init__(self, s, u, t):
        object.__setattr__(self, "s", _frac(s))
        object.__setattr__(self, "u", _frac(u))
        object.__setattr__(self, "t", _frac(t))

    def __iter__(self):
        return iter((self.s, self.u, self.t))


def group_element(p: GroupParams, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """Closed-form matrix with entries ``s^{|I∖J|} (u+st)^{|I∩J|} t^{|J∖I|}``."""
    check_dense_n(n)
    s, u, t = p
    w = u + s * t
    return _entry_table(n, Order(order), lambda a, b, c, _: _pow(s, a) * _pow(w, b) * _pow(t, c))


def layer_power(u, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """Diagonal ``u^L``; ``u = 0`` gives the projection onto ``V_0``."""
    check_dense_n(n)
    u = _frac(u)
    masks = ordered_masks(n, order)
    return RationalMatrix.diag([_pow(u, popcount(m)) for m in masks], n=n, order=order)


def u_power(x, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """Diagonal ``x^U = x^{n - 2L}``; ``x`` must be nonzero."""
    check_dense_n(n)
    x = _frac(x)
    if not x:
        raise ZeroDivisionError("x^U needs x != 0")
    masks = ordered_masks(n, order)
    return RationalMatrix.diag([x ** (n - 2 * popcount(m)) for m in masks], n=n, order=order)


def exp_op(op: Op, scale, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``exp(scale * op)`` for nilpotent ``op``, as a finite power series."""
    return exp_nilpotent(op_matrix(op, n, order).scale(_frac(scale)))


def group_element_product(p: GroupParams, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``exp(sT) · u^L · exp(tT*)`` multiplied out factor by factor."""
    s, u, t = p
    return exp_op(T, s, n, order) @ layer_power(u, n, order) @ exp_op(Tstar, t, n, order)


# -- Leibniz rule -------------------------------------------------------------------


def leibniz_entries(t, a, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """Entries ``a^{|I∖J|} (1+at)^{|(I∪J)'|} t^{|J∖I|}`` of ``exp(tT*) exp(aT)``."""
    check_dense_n(n)
    t, a = _frac(t), _frac(a)
    w = 1 + a * t
    return _entry_table(n, Order(order), lambda x, _y, z, rest: _pow(a, x) * _pow(w, rest) * _pow(t, z))


def leibniz_product(t, a, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    return exp_op(Tstar, t, n, order) @ exp_op(T, a, n, order)


def leibniz_factored(t, a, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``exp(aT/(1+at)) (1+at)^U exp(tT*/(1+at))``; undefined when ``1 + at = 0``."""
    t, a = _frac(t), _frac(a)
    w = 1 + a * t
    if not w:
        raise ValueError("factored Leibniz form needs 1 + a*t != 0")
    return exp_op(T, a / w, n, order) @ u_power(w, n, order) @ exp_op(Tstar, t / w, n, order)


# -- group law ------------------------------------------------------------------------


class SingularCompositionError(ValueError):
    pass


def group_compose(p1: GroupParams, p2: GroupParams, n: int) -> tuple[Fraction, GroupParams]:
    """Return ``(c, p)`` with ``g(p1) g(p2) = c · g(p)``."""
    a, c, b = p1
    s, u, t = p2
    w = 1 + s * b
    if not w:
        raise SingularCompositionError("composition is singular: 1 + s*b = 0")
    return w ** n, GroupParams(a + s * c / w, u * c / (w * w), t + u * b / w)


def exp_X_scaled(v, n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """Rational form of ``exp(t(T+T*))`` with ``v = tanh t``: the matrix
    ``g(v, 1-v², v)``, whose entries are ``v^{|I Δ J|}``.  Multiplying by
    ``(1-v²)^{-n/2}`` gives the exponential itself."""
    v = _frac(v)
    return group_element(GroupParams(v, 1 - v * v, v), n, order)


def exp_X_float(t: float, n: int, terms: int = 60) -> np.ndarray:
    """Truncated Taylor series of ``exp(t(T+T*))`` in floating point (graded-lex)."""
    check_dense_n(n)
    x = op_matrix(T, n).to_float()
    x = (x + x.T) * t
    out = np.eye(1 << n)
    term = np.eye(1 << n)
    for k in range(1, terms):
        term = term @ x / k
        out = out + term
    return out


# -- Kronecker realization -------------------------------------------------------------

R_MATRIX = RationalMatrix([[0, 0], [1, 0]])


def kronecker_realization(n: int) -> tuple[list[RationalMatrix], np.ndarray]:
    """Matrices ``I⊗…⊗R⊗…⊗I`` (``R`` in slot ``i``) for each ``e_i``, and a permutation.

    Products associate to the left, so slot 1 is the most significant digit of
    the binary row label: label ``b`` stands for the subset
    ``{i : bit n-i of b is set}``.  ``perm[b]`` is the graded-lex rank of that
    subset, so ``mats[i-1].permuted(perm) == op_matrix(E_hat(i), n)``.
    """
    check_dense_n(n)
    eye = RationalMatrix.identity(2)
    mats = []
    for i in range(1, n + 1):
        m = R_MATRIX if i == 1 else eye
        for slot in range(2, n + 1):
            m = m.kron(R_MATRIX if slot == i else eye)
        mats.append(m)
    ranks = rank_table(n)
    perm = np.empty(1 << n, dtype=np.int64)
    for b in range(1 << n):
        mask = sum(1 << (i - 1) for i in range(1, n + 1) if b >> (n - i) & 1)
        perm[b] = ranks[mask]
    return mats, perm


def casimir_matrix(n: int, order: Order | str = Order.GRADED_LEX) -> RationalMatrix:
    """``C = 4 T T* + (U + I)^2`` assembled from the operator matrices."""
    t = op_matrix(T, n, order)
    ts = op_matrix(Tstar, n, order)
    h = op_matrix(U, n, order) + RationalMatrix.identity(1 << n, n=n, order=order)
    return (t @ ts).scale(4) + h @ h


def tj_layer_block(n: int, ell: int, j: int) -> RationalMatrix:
    """``T^j T*^j / (j!)^2`` restricted to ``V_ell`` via products of layer steps."""
    if not 0 <= ell <= n or j < 0:
        raise ValueError("layer or power out of range")
    size = comb(n, ell)
    if j > ell:
        return RationalMatrix.zeros(size, n=n, order=Order.GRADED_LEX, layer=ell)
    down = RationalMatrix.identity(size)
    for m in range(ell, ell - j, -1):
        down = layer_step_block(n, m, up=False) @ down
    up = RationalMatrix.identity(comb(n, ell - j))
    for m in range(ell - j, ell):
        up = layer_step_block(n, m, up=True) @ up
    out = (up @ down).scale(Fraction(1, factorial(j) ** 2))
    out.n, out.order, out.layer = n, Order.GRADED_LEX, ell
    return out

"""Decomposition of the Boolean lattice into irreducible sl(2) chains.

Every vacuum state is named by a nonnegative ±1 level path ``0 1 N_2 … N_n``.
Each descent from level ``N_m`` at step ``m`` contributes the zeon factor
``e_1 + … + e_m - N_m e_{m+1}``; the vacuum is the product of these factors
and its chain is ``(T^j / j!) Ω`` for ``0 <= j <= N_n``.

Chains are ordered by ``α`` (the number of descents), then lexicographically by
level sequence.  That order fixes the "from the left" indices ``i`` and ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from .boolean import (
    ZeonVector,
    complement_involution,
    inner_product,
    layer_masks,
    zeon_mul,
)
from .operators import T, Tstar, U, apply
from .ratmat import MAX_DENSE_N, RationalMatrix
from .report import CheckReport

MAX_PATH_N = 16


class ChainConsistencyError(RuntimeError):
    """A constructed chain violated the sl(2) action; indicates a bug."""


@dataclass(frozen=True)
class ChainPath:
    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        lv = tuple(self.levels)
        object.__setattr__(self, "levels", lv)
        if len(lv) < 2 or lv[0] != 0 or lv[1] != 1:
            raise ValueError(f"path must start 0,1: {lv}")
        for a, b in zip(lv, lv[1:]):
            if abs(a - b) != 1 or b < 0:
                raise ValueError(f"invalid level path {lv}")

    @classmethod
    def parse(cls, text: str) -> ChainPath:
        """``"01210"`` (single-digit levels) or ``"0,1,2,1,0"``."""
        parts = text.split(",") if "," in text else list(text)
        return cls(tuple(int(p) for p in parts))

    @property
    def n(self) -> int:
        return len(self.levels) - 1

    @property
    def N(self) -> int:
        return self.levels[-1]

    @property
    def alpha(self) -> int:
        return sum(1 for a, b in zip(self.levels, self.levels[1:]) if b < a)

    def descents(self) -> list[int]:
        """Steps ``m`` (0-based) at which the path goes from ``N_m`` down to ``N_m - 1``."""
        return [m for m, (a, b) in enumerate(zip(self.levels, self.levels[1:])) if b < a]

    def __str__(self) -> str:
        if max(self.levels) < 10:
            return "".join(map(str, self.levels))
        return ",".join(map(str, self.levels))


def enumerate_paths(n: int) -> list[ChainPath]:
    """All level paths of length ``n``, ordered by descent count, then lexicographically."""
    if not isinstance(n, int) or not 1 <= n <= MAX_PATH_N:
        raise ValueError(f"path length n must lie in 1..{MAX_PATH_N}, got {n!r}")
    out: list[tuple[int, ...]] = []

    def walk(prefix: list[int]) -> None:
        if len(prefix) == n + 1:
            out.append(tuple(prefix))
            return
        last = prefix[-1]
        if last > 0:
            prefix.append(last - 1)
            walk(prefix)
            prefix.pop()
        prefix.append(last + 1)
        walk(prefix)
        prefix.pop()

    walk([0, 1])
    paths = [ChainPath(p) for p in out]
    paths.sort(key=lambda p: (p.alpha, p.levels))
    return paths


def vacuum_from_path(p: ChainPath) -> ZeonVector:
    n = p.n
    vac = ZeonVector.one(n)
    for m in p.descents():
        level = p.levels[m]
        coeffs = {i: 1 for i in range(1, m + 1)}
        coeffs[m + 1] = -level
        vac = zeon_mul(vac, ZeonVector.linear(n, coeffs))
    return vac


@dataclass(frozen=True)
class Chain:
    path: ChainPath
    vacuum: ZeonVector
    states: tuple[ZeonVector, ...]  # φ̃_j = (T^j / j!) vacuum
    norms2: tuple[Fraction, ...]

    @property
    def N(self) -> int:
        return self.path.N

    @property
    def alpha(self) -> int:
        return self.path.alpha


def build_chain(p: ChainPath) -> Chain:
    vac = vacuum_from_path(p)
    N = p.N
    states = [vac]
    for j in range(N):
        states.append(apply(T, states[-1]).scale(Fraction(1, j + 1)))
    zero = ZeonVector.zero(p.n)
    for j, phi in enumerate(states):
        up = states[j + 1].scale(j + 1) if j < N else zero
        down = states[j - 1].scale(N + 1 - j) if j > 0 else zero
        if apply(T, phi) != up or apply(Tstar, phi) != down or apply(U, phi) != phi.scale(N - 2 * j):
            raise ChainConsistencyError(f"sl(2) action fails on chain {p} at j={j}")
    return Chain(p, vac, tuple(states), tuple(s.norm2() for s in states))


@lru_cache(maxsize=32)
def chains(n: int) -> tuple[Chain, ...]:
    return tuple(build_chain(p) for p in enumerate_paths(n))


# -- labels ---------------------------------------------------------------------


@dataclass(frozen=True)
class ChainLabel:
    """``|n N i j>``: state ``j`` of the ``i``-th chain (from the left) with principal number ``N``."""

    n: int
    N: int
    i: int
    j: int

    @property
    def alpha(self) -> int:
        return (self.n - self.N) // 2

    def validate(self) -> None:
        n, N = self.n, self.N
        if n < 1 or not 0 <= N <= n or (n - N) % 2:
            raise ValueError(f"no chains with N={N} for n={n}")
        a = self.alpha
        count = comb(n, a) - (comb(n, a - 1) if a else 0)
        if not 1 <= self.i <= count:
            raise ValueError(f"chain index i={self.i} outside 1..{count}")
        if not 0 <= self.j <= N:
            raise ValueError(f"state index j={self.j} outside 0..{N}")


@dataclass(frozen=True)
class LayerLabel:
    """``|n ℓ k>``: the ``k``-th state from the left in layer ``ℓ``."""

    n: int
    ell: int
    k: int

    def validate(self) -> None:
        if self.n < 1 or not 0 <= self.ell <= self.n:
            raise ValueError(f"layer {self.ell} outside 0..{self.n}")
        if not 1 <= self.k <= comb(self.n, self.ell):
            raise ValueError(f"k={self.k} outside 1..{comb(self.n, self.ell)}")


StateLabel = ChainLabel | LayerLabel


def _binom(n: int, k: int) -> int:
    return comb(n, k) if k >= 0 else 0


def label_convert(lbl: StateLabel) -> StateLabel:
    """Switch between the chain form ``(N, i, j)`` and the layer form ``(ℓ, k)``."""
    lbl.validate()
    n = lbl.n
    if isinstance(lbl, ChainLabel):
        a = lbl.alpha
        return LayerLabel(n, lbl.j + a, lbl.i + _binom(n, a - 1))
    top = min(lbl.ell, n - lbl.ell)
    a = max(a2 for a2 in range(top + 1) if _binom(n, a2 - 1) < lbl.k)
    return ChainLabel(n, n - 2 * a, lbl.k - _binom(n, a - 1), lbl.ell - a)


# -- the Z-basis ------------------------------------------------------------------


class ZState(NamedTuple):
    label: ChainLabel
    layer_label: LayerLabel
    vector: ZeonVector
    norm2: Fraction


def zbasis(n: int) -> list[ZState]:
    """All ``2^n`` chain states, ordered by layer then by ``k``."""
    if not isinstance(n, int) or not 1 <= n <= MAX_DENSE_N:
        raise ValueError(f"Z-basis is built for 1 <= n <= {MAX_DENSE_N}, got {n!r}")
    out: list[ZState] = []
    seen: dict[int, int] = {}
    for ch in chains(n):
        a = ch.alpha
        seen[a] = seen.get(a, 0) + 1
        for j, (phi, nn) in enumerate(zip(ch.states, ch.norms2)):
            lbl = ChainLabel(n, ch.N, seen[a], j)
            out.append(ZState(lbl, label_convert(lbl), phi, nn))
    out.sort(key=lambda z: (z.layer_label.ell, z.layer_label.k))
    return out


def state_matrices(n: int, ell: int) -> tuple[RationalMatrix, RationalMatrix]:
    """``(W, D)``: layer-``ell`` states as rows of natural coordinates, and their squared norms."""
    if not 0 <= ell <= n:
        raise ValueError(f"layer {ell} outside 0..{n}")
    cols = layer_masks(n, ell)
    rows = [z for z in zbasis(n) if z.layer_label.ell == ell]
    W = RationalMatrix.from_rows(([z.vector.coeff(m) for m in cols] for z in rows),
                                 n=n, order="graded-lex", layer=ell)
    D = RationalMatrix.diag([z.norm2 for z in rows], n=n, order="graded-lex", layer=ell)
    return W, D


def complement_sign_check(n: int) -> CheckReport:
    """Check ``(φ̃_j)' = (-1)^α φ̃_{N-j}`` on every chain."""
    if not 1 <= n <= 10:
        raise ValueError("complementation check runs for 1 <= n <= 10")
    rep = CheckReport(f"complement sign n={n}")
    for ch in chains(n):
        sign = -1 if ch.alpha % 2 else 1
        for j, phi in enumerate(ch.states):
            rep.record(complement_involution(phi) == ch.states[ch.N - j].scale(sign),
                       f"path {ch.path} j={j}")
    return rep


def gram_matrix(states: list[ZeonVector]) -> RationalMatrix:
    """Exact Gram matrix; sparse-aware since most pairs share no support."""
    size = len(states)
    rows = [[Fraction(0)] * size for _ in range(size)]
    by_layer: dict[int, list[int]] = {}
    for idx, s in enumerate(states):
        for ell in s.layers():
            by_layer.setdefault(ell, []).append(idx)
    for a in range(size):
        partners = {b for ell in states[a].layers() for b in by_layer[ell] if b >= a}
        for b in partners:
            rows[a][b] = rows[b][a] = inner_product(states[a], states[b])
    return RationalMatrix.from_rows(rows)


def vacua_per_layer(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for ch in chains(n):
        counts[ch.alpha] = counts.get(ch.alpha, 0) + 1
    return counts


def layer_coordinates(v: ZeonVector, ell: int) -> list[Fraction]:
    """Coordinates of ``v`` on ``V_ell`` in lexicographic order."""
    return [v.coeff(m) for m in layer_masks(v.n, ell)]


def chain_layers(ch: Chain) -> list[int]:
    """Layer occupied by each state of the chain (each state is homogeneous)."""
    return [min(s.layers()) for s in ch.states]


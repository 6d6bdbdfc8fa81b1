"""Subsets of {1..n} as bit masks, the two metrics on them, and exact zeon arithmetic.

A subset ``I`` of ``{1, ..., n}`` is stored as an integer whose bit ``i - 1`` is
set iff ``i`` is in ``I``.  A :class:`ZeonVector` is a finitely supported map
from such masks to :class:`fractions.Fraction` coefficients; zero coefficients
are never stored, so ``==`` is structural equality.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational

MAX_VECTOR_N = 20
EMPTY_SET_SYMBOL = "∅"


class Order(str, enum.Enum):
    """Row/column order used when subsets index a matrix."""

    GRADED_LEX = "graded-lex"
    BINARY = "binary"


def _check_n(n: int, cap: int = MAX_VECTOR_N) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"lattice size n must be a positive integer, got {n!r}")
    if n > cap:
        raise ValueError(f"lattice size n={n} exceeds the cap {cap}")


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def mask_elements(bits: int) -> tuple[int, ...]:
    """Increasing element tuple of a mask (1-based)."""
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def elements_mask(elements: Iterable[int], n: int) -> int:
    bits = 0
    for i in elements:
        if not 1 <= i <= n:
            raise ValueError(f"element {i} outside 1..{n}")
        bits |= 1 << (i - 1)
    return bits


@dataclass(frozen=True, slots=True)
class SubsetIndex:
    """A subset of ``{1, ..., n}`` encoded as an ``n``-bit mask."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"mask {self.bits} is not an {self.n}-bit subset")

    @classmethod
    def of(cls, n: int, elements: Iterable[int] = ()) -> SubsetIndex:
        return cls(n, elements_mask(elements, n))

    @property
    def elements(self) -> tuple[int, ...]:
        return mask_elements(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __str__(self) -> str:
        return format_subset(self.bits)


def format_subset(bits: int) -> str:
    """``1,3`` style label; the empty set is ``∅``."""
    els = mask_elements(bits)
    return ",".join(map(str, els)) if els else EMPTY_SET_SYMBOL


def _as_mask(I: SubsetIndex | int, n: int) -> int:
    if isinstance(I, SubsetIndex):
        if I.n != n:
            raise ValueError(f"subset belongs to n={I.n}, expected n={n}")
        return I.bits
    if not 0 <= I < (1 << n):
        raise ValueError(f"mask {I} is not an {n}-bit subset")
    return I


# -- canonical orders -------------------------------------------------------


def _lex_rank_in_layer(bits: int, n: int) -> int:
    # combinatorial number system, lexicographic on the increasing tuple
    els = mask_elements(bits)
    ell = len(els)
    rank = 0
    prev = 0
    for pos, c in enumerate(els, start=1):
        for x in range(prev + 1, c):
            rank += comb(n - x, ell - pos)
        prev = c
    return rank


def _lex_unrank_in_layer(r: int, n: int, ell: int) -> int:
    bits = 0
    x = 1
    for pos in range(1, ell + 1):
        while True:
            block = comb(n - x, ell - pos)
            if r < block:
                break
            r -= block
            x += 1
        bits |= 1 << (x - 1)
        x += 1
    return bits


def layer_offset(n: int, ell: int) -> int:
    """Graded-lex rank of the first subset of size ``ell``."""
    return sum(comb(n, m) for m in range(ell))


def subset_rank(I: SubsetIndex, order: Order | str = Order.GRADED_LEX) -> int:
    order = Order(order)
    if order is Order.BINARY:
        return I.bits
    return layer_offset(I.n, len(I)) + _lex_rank_in_layer(I.bits, I.n)


def subset_unrank(r: int, n: int, order: Order | str = Order.GRADED_LEX) -> SubsetIndex:
    _check_n(n)
    if not 0 <= r < (1 << n):
        raise ValueError(f"rank {r} out of range for n={n}")
    if Order(order) is Order.BINARY:
        return SubsetIndex(n, r)
    ell = 0
    while r >= comb(n, ell):
        r -= comb(n, ell)
        ell += 1
    return SubsetIndex(n, _lex_unrank_in_layer(r, n, ell))


@lru_cache(maxsize=64)
def layer_masks(n: int, ell: int) -> tuple[int, ...]:
    """Masks of the size-``ell`` subsets in lexicographic order."""
    return tuple(_lex_unrank_in_layer(r, n, ell) for r in range(comb(n, ell)))


@lru_cache(maxsize=64)
def ordered_masks(n: int, order: Order | str = Order.GRADED_LEX) -> tuple[int, ...]:
    """All ``2**n`` masks listed in ``order``; position = rank."""
    if Order(order) is Order.BINARY:
        return tuple(range(1 << n))
    out: list[int] = []
    for ell in range(n + 1):
        out.extend(layer_masks(n, ell))
    return tuple(out)


@lru_cache(maxsize=64)
def rank_table(n: int, order: Order | str = Order.GRADED_LEX) -> dict[int, int]:
    return {m: r for r, m in enumerate(ordered_masks(n, order))}


# -- metrics ----------------------------------------------------------------


def distance(metric: str, I: SubsetIndex, J: SubsetIndex) -> int:
    """Hamming distance ``|I Δ J|`` or Johnson distance ``|I| - |I ∩ J|``."""
    if I.n != J.n:
        raise ValueError("subsets from different lattices")
    metric = metric.lower()
    if metric == "hamming":
        return popcount(I.bits ^ J.bits)
    if metric == "johnson":
        if len(I) != len(J):
            raise ValueError("Johnson distance needs subsets of equal size")
        return len(I) - popcount(I.bits & J.bits)
    raise ValueError(f"unknown metric {metric!r}")


def complement(I: SubsetIndex) -> SubsetIndex:
    return SubsetIndex(I.n, I.bits ^ ((1 << I.n) - 1))


# -- zeon vectors -------------------------------------------------------------


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer; decimals are rejected."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"malformed rational {text!r} (expected p/q or an integer)")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class ZeonVector:
    """Element of the zeon algebra on ``n`` generators, in the natural basis.

    ``terms`` maps subset masks to nonzero :class:`Fraction` coefficients.
    Vectors are treated as immutable values.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[SubsetIndex | int, object] | None = None):
        _check_n(n)
        self.n = n
        clean: dict[int, Fraction] = {}
        for key, c in (terms or {}).items():
            m = _as_mask(key, n)
            c = _frac(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict[int, Fraction]) -> ZeonVector:
        # trusted constructor: masks valid, zeros already dropped
        v = object.__new__(cls)
        v.n = n
        v._terms = terms
        return v

    @classmethod
    def zero(cls, n: int) -> ZeonVector:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> ZeonVector:
        return cls._raw(n, {0: Fraction(1)})

    @classmethod
    def basis(cls, n: int, elements: Iterable[int] | SubsetIndex = ()) -> ZeonVector:
        """The natural basis vector ``e_I``."""
        m = elements.bits if isinstance(elements, SubsetIndex) else elements_mask(elements, n)
        return cls(n, {m: 1})

    @classmethod
    def gen(cls, n: int, i: int) -> ZeonVector:
        """The generator ``e_i``."""
        return cls.basis(n, (i,))

    @classmethod
    def linear(cls, n: int, coeffs: Mapping[int, object]) -> ZeonVector:
        """``Σ c_i e_i`` from a map of generator index to coefficient."""
        return cls(n, {elements_mask((i,), n): c for i, c in coeffs.items()})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Terms in graded-lex order of the subsets."""
        ranks = rank_table(self.n) if self.n <= 16 else None
        if ranks is not None:
            keys = sorted(self._terms, key=ranks.__getitem__)
        else:
            keys = sorted(self._terms, key=lambda m: (popcount(m), mask_elements(m)))
        for m in keys:
            yield m, self._terms[m]

    def coeff(self, I: SubsetIndex | int | Iterable[int]) -> Fraction:
        if isinstance(I, (SubsetIndex, int)):
            m = _as_mask(I, self.n)
        else:
            m = elements_mask(I, self.n)
        return self._terms.get(m, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZeonVector):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def _same_n(self, other: ZeonVector) -> None:
        if self.n != other.n:
            raise ValueError(f"n mismatch: {self.n} vs {other.n}")

    def __add__(self, other: ZeonVector) -> ZeonVector:
        if not isinstance(other, ZeonVector):
            return NotImplemented
        self._same_n(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ZeonVector._raw(self.n, out)

    def __neg__(self) -> ZeonVector:
        return ZeonVector._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: ZeonVector) -> ZeonVector:
        if not isinstance(other, ZeonVector):
            return NotImplemented
        return self + (-other)

    def scale(self, a) -> ZeonVector:
        a = _frac(a)
        if not a:
            return ZeonVector.zero(self.n)
        return ZeonVector._raw(self.n, {m: a * c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, ZeonVector):
            return zeon_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def layers(self) -> set[int]:
        return {popcount(m) for m in self._terms}

    def norm2(self) -> Fraction:
        return sum((c * c for c in self._terms.values()), Fraction(0))

    def __repr__(self) -> str:
        if not self._terms:
            return f"ZeonVector(n={self.n}, 0)"
        body = " + ".join(f"{format_rational(c)}*e[{format_subset(m)}]" for m, c in self.items())
        return f"ZeonVector(n={self.n}, {body})"

    # text form: one ``i1,i2,... : p/q`` line per term
    def to_text(self) -> str:
        return "".join(f"{format_subset(m)} : {format_rational(c)}\n" for m, c in self.items())

    @classmethod
    def from_text(cls, n: int, text: str) -> ZeonVector:
        terms: dict[int, Fraction] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if ":" not in line:
                raise ValueError(f"line {lineno}: expected 'indices : coefficient'")
            idx, coef = (part.strip() for part in line.split(":", 1))
            if idx in (EMPTY_SET_SYMBOL, ""):
                els: list[int] = []
            else:
                try:
                    els = [int(tok) for tok in idx.split(",")]
                except ValueError:
                    raise ValueError(f"line {lineno}: bad index list {idx!r}") from None
                if len(set(els)) != len(els):
                    raise ValueError(f"line {lineno}: repeated index in {idx!r}")
            m = elements_mask(els, n)
            terms[m] = terms.get(m, Fraction(0)) + parse_rational(coef)
        return cls(n, terms)


def zeon_mul(v: ZeonVector, w: ZeonVector) -> ZeonVector:
    """Bilinear product with ``e_I e_J = e_{I ∪ J}`` for disjoint ``I, J``, else 0."""
    v._same_n(w)
    out: dict[int, Fraction] = {}
    for a, ca in v._terms.items():
        for b, cb in w._terms.items():
            if a & b:
                continue
            m = a | b
            s = out.get(m, 0) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return ZeonVector._raw(v.n, out)


def inner_product(v: ZeonVector, w: ZeonVector) -> Fraction:
    """Standard inner product making the natural basis orthonormal."""
    v._same_n(w)
    if len(w) < len(v):
        v, w = w, v
    return sum((c * w._terms[m] for m, c in v._terms.items() if m in w._terms), Fraction(0))


def complement_involution(v: ZeonVector) -> ZeonVector:
    """Transport every coefficient to the complementary subset."""
    full = (1 << v.n) - 1
    return ZeonVector._raw(v.n, {m ^ full: c for m, c in v._terms.items()})

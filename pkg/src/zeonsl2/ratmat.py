"""Dense exact-rational matrices in common-denominator form.

A :class:`RationalMatrix` holds an integer numerator array and one positive
integer denominator, kept in lowest terms.  Numerators live in ``int64`` while
every intermediate provably fits, and fall back to Python integers
(``dtype=object``) otherwise, so results are exact either way.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .boolean import Order, format_rational, format_subset, ordered_masks, parse_rational

MAX_DENSE_N = 12
_INT64_SAFE = 1 << 62


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def _shrink(a: np.ndarray) -> np.ndarray:
    if a.dtype == object and _maxabs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def _wide(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def _as_frac(x) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


class RationalMatrix:
    """Exact rational matrix ``num / den``.

    ``n`` and ``order`` record which subset labelling the rows and columns use
    when the matrix lives on the whole lattice; per-layer blocks keep ``order``
    as graded-lex and set ``layer``.
    """

    __slots__ = ("num", "den", "n", "order", "layer")

    def __init__(self, num, den: int = 1, *, n: int | None = None,
                 order: Order | str | None = None, layer: int | None = None):
        num = np.asarray(num)
        if num.ndim != 2:
            raise ValueError("matrix numerator must be 2-dimensional")
        if num.dtype != object and not np.issubdtype(num.dtype, np.integer):
            raise TypeError("numerator entries must be integers")
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -_wide(num), -den
        self.num = num if num.dtype == object else num.astype(np.int64)
        self.den = den
        self.n = n
        self.order = Order(order) if order is not None else None
        self.layer = layer
        self._normalize()

    def _normalize(self) -> None:
        self.num = _shrink(self.num)
        if self.den != 1:
            g = self.den
            if self.num.size:
                g = gcd(g, int(np.gcd.reduce(self.num, axis=None)))
            if g > 1:
                self.num = self.num // g
                self.den //= g

    def _meta(self) -> dict:
        return {"n": self.n, "order": self.order, "layer": self.layer}

    def _like(self, num, den: int = 1) -> RationalMatrix:
        return RationalMatrix(num, den, **self._meta())

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], **meta) -> RationalMatrix:
        fr = [[_as_frac(x) for x in row] for row in rows]
        if not fr:
            return cls(np.zeros((0, 0), dtype=np.int64), **meta)
        width = len(fr[0])
        if any(len(r) != width for r in fr):
            raise ValueError("ragged rows")
        den = lcm(*(x.denominator for r in fr for x in r)) if width else 1
        num = np.array([[x.numerator * (den // x.denominator) for x in r] for r in fr], dtype=object)
        return cls(num.reshape(len(fr), width), den, **meta)

    @classmethod
    def identity(cls, size: int, **meta) -> RationalMatrix:
        return cls(np.eye(size, dtype=np.int64), **meta)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, **meta) -> RationalMatrix:
        return cls(np.zeros((rows, rows if cols is None else cols), dtype=np.int64), **meta)

    @classmethod
    def diag(cls, values: Sequence, **meta) -> RationalMatrix:
        fr = [_as_frac(x) for x in values]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        num = np.zeros((len(fr), len(fr)), dtype=object)
        for i, x in enumerate(fr):
            num[i, i] = x.numerator * (den // x.denominator)
        return cls(num, den, **meta)

    # -- basic protocol ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape  # type: ignore[return-value]

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return Fraction(int(self.num[i, j]), self.den)

    def to_fractions(self) -> list[list[Fraction]]:
        return [[Fraction(int(x), self.den) for x in row] for row in self.num]

    def to_float(self) -> np.ndarray:
        return np.array([[float(Fraction(int(x), self.den)) for x in row] for row in self.num])

    def is_integer(self) -> bool:
        return self.den == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.den == other.den and bool(np.array_equal(self.num, other.num))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        r, c = self.shape
        return f"RationalMatrix({r}x{c}, den={self.den}, n={self.n}, order={self.order and self.order.value})"

    # -- arithmetic ----------------------------------------------------------

    def _aligned(self, other: RationalMatrix) -> tuple[np.ndarray, np.ndarray, int]:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        d = lcm(self.den, other.den)
        fa, fb = d // self.den, d // other.den
        bound = _maxabs(self.num) * fa + _maxabs(other.num) * fb
        a, b = self.num, other.num
        if bound >= _INT64_SAFE:
            a, b = _wide(a), _wide(b)
        return a * fa, b * fb, d

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        a, b, d = self._aligned(other)
        return self._like(a + b, d)

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        a, b, d = self._aligned(other)
        return self._like(a - b, d)

    def __neg__(self) -> RationalMatrix:
        return self._like(-self.num, self.den)

    def scale(self, x) -> RationalMatrix:
        x = _as_frac(x)
        a = self.num
        if _maxabs(a) * abs(x.numerator) >= _INT64_SAFE:
            a = _wide(a)
        return self._like(a * x.numerator, self.den * x.denominator)

    def __mul__(self, x):
        if isinstance(x, RationalMatrix):
            return NotImplemented
        return self.scale(x)

    __rmul__ = __mul__

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.num, other.num
        if _maxabs(a) * _maxabs(b) * max(1, self.shape[1]) >= _INT64_SAFE:
            a, b = _wide(a), _wide(b)
        meta = self._meta()
        if self.layer != other.layer:
            meta["layer"] = None
        return RationalMatrix(a @ b, self.den * other.den, **meta)

    def __pow__(self, k: int) -> RationalMatrix:
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = RationalMatrix.identity(self.shape[0], **self._meta())
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    @property
    def T(self) -> RationalMatrix:
        return self._like(self.num.T.copy(), self.den)

    def commutator(self, other: RationalMatrix) -> RationalMatrix:
        return self @ other - other @ self

    def is_zero(self) -> bool:
        return not np.any(self.num)

    def is_diagonal(self) -> bool:
        off = self.num.copy()
        np.fill_diagonal(off, 0)
        return not np.any(off)

    def diagonal(self) -> list[Fraction]:
        return [Fraction(int(x), self.den) for x in np.diagonal(self.num)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None, **meta) -> RationalMatrix:
        cols = rows if cols is None else cols
        block = self.num[np.ix_(list(rows), list(cols))]
        return RationalMatrix(block, self.den, **meta)

    def kron(self, other: RationalMatrix) -> RationalMatrix:
        a, b = self.num, other.num
        if _maxabs(a) * _maxabs(b) >= _INT64_SAFE:
            a, b = _wide(a), _wide(b)
        return RationalMatrix(np.kron(a, b), self.den * other.den)

    def permuted(self, perm: Sequence[int], **meta) -> RationalMatrix:
        """Matrix ``B`` with ``B[perm[i], perm[j]] = A[i, j]``."""
        perm = np.asarray(perm)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        return RationalMatrix(self.num[np.ix_(inv, inv)], self.den, **meta)

    def apply_to(self, vec: Sequence) -> list[Fraction]:
        """Exact matrix-vector product with a coordinate list."""
        fr = [_as_frac(x) for x in vec]
        if len(fr) != self.shape[1]:
            raise ValueError("vector length mismatch")
        return [sum((Fraction(int(a), self.den) * x for a, x in zip(row, fr) if a and x), Fraction(0))
                for row in self.num]

    # -- emission ------------------------------------------------------------

    def row_labels(self) -> list[str] | None:
        if self.n is None or self.order is None:
            return None
        masks = ordered_masks(self.n, self.order)
        if self.layer is not None:
            masks = tuple(m for m in masks if bin(m).count("1") == self.layer)
        if len(masks) != self.shape[0]:
            return None
        return [format_subset(m) for m in masks]

    def to_csv(self, labels: bool = False) -> str:
        rows = self.to_fractions()
        names = self.row_labels() if labels else None
        lines = []
        if names is not None:
            lines.append(",".join([""] + [f'"{s}"' for s in names]))
        for idx, row in enumerate(rows):
            cells = [format_rational(x) for x in row]
            if names is not None:
                cells.insert(0, f'"{names[idx]}"')
            lines.append(",".join(cells))
        return "".join(line + "\n" for line in lines)

    def to_json_obj(self, labels: bool = False) -> dict:
        obj: dict = {
            "n": self.n,
            "order": self.order.value if self.order is not None else None,
        }
        if self.layer is not None:
            obj["layer"] = self.layer
        obj["rows"] = [[format_rational(x) for x in row] for row in self.to_fractions()]
        if labels:
            obj["labels"] = self.row_labels()
        return obj

    def to_json(self, labels: bool = False) -> str:
        return json.dumps(self.to_json_obj(labels), ensure_ascii=False) + "\n"


def check_dense_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"lattice size n must be a positive integer, got {n!r}")
    if n > MAX_DENSE_N:
        raise ValueError(
            f"dense 2^n x 2^n matrices are capped at n={MAX_DENSE_N} (got n={n}); "
            "use per-layer commands or vector operations instead"
        )


def exp_nilpotent(m: RationalMatrix) -> RationalMatrix:
    """``Σ_k m^k / k!``, stopping once a power vanishes; ``m`` must be nilpotent."""
    size = m.shape[0]
    out = RationalMatrix.identity(size, n=m.n, order=m.order, layer=m.layer)
    term = out
    for k in range(1, size + 2):
        term = (term @ m).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
    raise ValueError("matrix is not nilpotent")

"""Exact rational linear algebra over Q.

Vectors are plain tuples of :class:`fractions.Fraction`; matrices are the
immutable :class:`Matrix` below.  Elimination always pivots on the first
nonzero entry in column order, so every result is reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


class InconsistentSystem(ValueError):
    """Raised by :func:`solve` when ``rank([M|b]) > rank(M)``."""


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"malformed rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"malformed rational: {text!r} (zero denominator)")
    return Fraction(num, den)


def render_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sign(k: int) -> int:
    """(-1)**k for an integer exponent."""
    return -1 if k % 2 else 1


# -- vectors -----------------------------------------------------------------

def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


@lru_cache(maxsize=4096)
def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


# Zero entries are skipped explicitly: Fraction arithmetic dominates the run time
# and most vectors here are sparse.

def vadd(x: Vector, y: Vector) -> Vector:
    return tuple((a + b if a else b) if b else a for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    return tuple((a - b if a else -b) if b else a for a, b in zip(x, y))


def vscale(c, x: Vector) -> Vector:
    c = Fraction(c)
    if c == 1:
        return tuple(x)
    if not c:
        return (ZERO,) * len(x)
    return tuple(c * a if a else ZERO for a in x)


def vsum(vectors: Iterable[Vector], n: int) -> Vector:
    acc = [ZERO] * n
    for v in vectors:
        for k, a in enumerate(v):
            if a:
                acc[k] += a
    return tuple(acc)


def is_zero(x: Vector) -> bool:
    return not any(x)


def dot(x: Vector, y: Vector) -> Fraction:
    return sum((a * b for a, b in zip(x, y) if a and b), ZERO)


# -- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Matrix needs {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(a) for r in rows for a in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        entries = [ZERO] * (rows * cols)
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise ValueError("column length mismatch")
            for i, a in enumerate(c):
                entries[i * cols + j] = Fraction(a)
        return cls(rows, cols, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO
                               for i in range(n) for j in range(n)))

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append(sum((a * b for a, b in zip(r, v) if a and b), ZERO))
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matmul")
        cols = [other.col(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                entries.append(sum((a * b for a, b in zip(r, c) if a and b), ZERO))
        return Matrix(self.rows, other.cols, tuple(entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def _rref(rows: list, ncols: int):
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return pivots


def _as_rows(M) -> tuple[list, int]:
    if isinstance(M, Matrix):
        return M.to_rows(), M.cols
    rows = [[Fraction(a) for a in r] for r in M]
    return rows, (len(rows[0]) if rows else 0)


def rank(M) -> int:
    rows, ncols = _as_rows(M)
    return len(_rref(rows, ncols))


def nullspace(M) -> list:
    """Basis of ``{v : Mv = 0}``; each vector has 1 at its free coordinate."""
    rows, ncols = _as_rows(M)
    pivots = _rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def solve(M, b: Sequence) -> Vector:
    """One solution of ``Mv = b`` with all free variables set to zero."""
    rows, ncols = _as_rows(M)
    b = [Fraction(x) for x in b]
    if len(b) != len(rows):
        raise ValueError("right-hand side length does not match row count")
    aug = [r + [bi] for r, bi in zip(rows, b)]
    pivots = _rref(aug, ncols + 1)
    if ncols in pivots:
        raise InconsistentSystem("inconsistent system")
    v = [ZERO] * ncols
    for r, p in enumerate(pivots):
        v[p] = aug[r][ncols]
    return tuple(v)


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    aug = [list(M.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    pivots = _rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return Matrix(n, n, tuple(a for r in aug for a in r[n:]))


def is_invertible(M: Matrix) -> bool:
    return M.rows == M.cols and rank(M) == M.rows


def in_span(vectors: Sequence[Vector], v: Vector) -> bool:
    if is_zero(v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [v]) == rank(list(vectors))


def independent_subset(vectors: Iterable[Vector]) -> list:
    """Greedy left-to-right selection of a linearly independent subset."""
    chosen: list = []
    for v in vectors:
        if not is_zero(v) and not in_span(chosen, v):
            chosen.append(tuple(v))
    return chosen


# -- grading -----------------------------------------------------------------

@dataclass(frozen=True)
class GradedDimension:
    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError("graded dimensions must be non-negative")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def parity(self, i: int) -> int:
        if not 0 <= i < self.total:
            raise IndexError(f"basis index {i} out of range for {self}")
        return 0 if i < self.even else 1

    def parities(self) -> tuple:
        return (0,) * self.even + (1,) * self.odd

    def indices(self, parity: int) -> range:
        return range(self.even) if parity == 0 else range(self.even, self.total)

    def vector_parity(self, v: Vector):
        """0 or 1 for a nonzero homogeneous vector, None otherwise (0 -> 0)."""
        has_even = any(v[i] for i in range(self.even))
        has_odd = any(v[i] for i in range(self.even, self.total))
        if has_even and has_odd:
            return None
        return 1 if has_odd else 0

    def split(self, v: Vector) -> tuple:
        n0 = self.even
        return (tuple(v[:n0]) + (ZERO,) * self.odd,
                (ZERO,) * n0 + tuple(v[n0:]))

    def __str__(self):
        return f"({self.even}|{self.odd})"


def block_layout(parts: Sequence[GradedDimension]) -> tuple:
    """Global positions of each summand's basis in an even-first direct sum.

    Even parts of all summands come first (in summand order), then odd
    parts (in summand order).  Returns ``(total_dims, [index list per part])``.
    """
    even = sum(p.even for p in parts)
    odd = sum(p.odd for p in parts)
    maps = []
    e_off, o_off = 0, even
    for p in parts:
        idx = list(range(e_off, e_off + p.even)) + list(range(o_off, o_off + p.odd))
        e_off += p.even
        o_off += p.odd
        maps.append(idx)
    return GradedDimension(even, odd), maps


@dataclass(frozen=True)
class GradedLinearMap:
    """A matrix between graded spaces with a declared parity.

    Column ``j`` holds the image of the ``j``-th source basis vector.
    """

    matrix: Matrix
    degree: int
    source: GradedDimension
    target: GradedDimension

    def __post_init__(self):
        if self.degree not in (0, 1):
            raise ValueError("degree must be 0 or 1")
        if (self.matrix.rows, self.matrix.cols) != (self.target.total, self.source.total):
            raise ValueError(
                f"matrix shape {self.matrix.rows}x{self.matrix.cols} does not match "
                f"{self.source} -> {self.target}")

    @classmethod
    def zero(cls, source: GradedDimension, target: GradedDimension | None = None,
             degree: int = 0) -> "GradedLinearMap":
        target = source if target is None else target
        return cls(Matrix.zeros(target.total, source.total), degree, source, target)

    @classmethod
    def identity(cls, dims: GradedDimension) -> "GradedLinearMap":
        return cls(Matrix.identity(dims.total), 0, dims, dims)

    def __call__(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def image(self, j: int) -> Vector:
        return self.matrix.col(j)

    def respects_grading(self) -> bool:
        for i in range(self.target.total):
            pi = self.target.parity(i)
            for j in range(self.source.total):
                if self.matrix[i, j] and pi != (self.source.parity(j) + self.degree) % 2:
                    return False
        return True

    def allowed_entries(self) -> list:
        """Matrix positions (row, col) a map of this degree may occupy."""
        return allowed_positions(self.source, self.target, self.degree)

    def compose(self, other: "GradedLinearMap") -> "GradedLinearMap":
        """``self ∘ other``."""
        if other.target != self.source:
            raise ValueError("cannot compose: grading mismatch")
        return GradedLinearMap(self.matrix @ other.matrix, (self.degree + other.degree) % 2,
                               other.source, self.target)

    def scale(self, c) -> "GradedLinearMap":
        return GradedLinearMap(self.matrix.scale(c), self.degree, self.source, self.target)

    def __add__(self, other: "GradedLinearMap") -> "GradedLinearMap":
        if (self.degree, self.source, self.target) != (other.degree, other.source, other.target):
            raise ValueError("cannot add maps of different type")
        return GradedLinearMap(self.matrix + other.matrix, self.degree, self.source, self.target)

    def __sub__(self, other: "GradedLinearMap") -> "GradedLinearMap":
        return self + other.scale(-1)


def allowed_positions(source: GradedDimension, target: GradedDimension, degree: int) -> list:
    return [(i, j)
            for i in range(target.total)
            for j in range(source.total)
            if target.parity(i) == (source.parity(j) + degree) % 2]


def map_from_unknowns(values: Sequence, positions: Sequence, source: GradedDimension,
                      target: GradedDimension, degree: int) -> GradedLinearMap:
    entries = [ZERO] * (target.total * source.total)
    for a, (i, j) in zip(values, positions):
        entries[i * source.total + j] = Fraction(a)
    return GradedLinearMap(Matrix(target.total, source.total, tuple(entries)),
                           degree, source, target)


class LCG:
    """Deterministic integer stream in [-5, 5].

    Numerical Recipes constants (a=1664525, c=1013904223, m=2**32); each
    draw keeps bits 16..31 of the state and reduces them modulo 11.
    """

    A = 1664525
    C = 1013904223
    M = 2 ** 32

    def __init__(self, seed: int):
        self.state = seed % self.M

    def next_int(self) -> int:
        self.state = (self.A * self.state + self.C) % self.M
        return (self.state >> 16) % 11 - 5

    def vector(self, n: int) -> Vector:
        return tuple(Fraction(self.next_int()) for _ in range(n))

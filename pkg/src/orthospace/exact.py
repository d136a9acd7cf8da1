"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`, which is already canonical
(positive denominator, reduced). Everything here is pure: matrices are
immutable and every routine returns fresh values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

RationalLike = Union[Fraction, int, str]


def rat(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are refused: a decision procedure must never see a rounded value.
    """
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not a rational literal: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational exactly")


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(xs: Iterable[RationalLike]) -> tuple:
    return tuple(rat(x) for x in xs)


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int | None = None) -> "RatMatrix":
        rows = [vec(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "RatMatrix":
        cols = [vec(c) for c in columns]
        for c in cols:
            if len(c) != rows:
                raise ValueError("ragged matrix columns")
        return cls(rows, len(cols), tuple(cols[j][i] for i in range(rows) for j in range(len(cols))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "RatMatrix":
        d = vec(values)
        n = len(d)
        return cls(n, n, tuple(d[i] if i == j else Fraction(0) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, x: Sequence[Fraction]) -> tuple:
        if len(x) != self.cols:
            raise ValueError(f"vector of length {len(x)} against {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(self.row(i), x) if a and b), Fraction(0))
                     for i in range(self.rows))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return RatMatrix(self.rows, other.cols, tuple(
            sum((a * b for a, b in zip(self.row(i), c) if a and b), Fraction(0))
            for i in range(self.rows) for c in cols))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: RationalLike) -> "RatMatrix":
        c = rat(c)
        return RatMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def map(self, fn) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(fn(a) for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return RatMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                   cols=self.cols + other.cols)

    def _same_shape(self, other: "RatMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns.

    Plain Gauss-Jordan over Fractions; Fraction keeps every intermediate
    reduced so coefficient growth stays bounded by the input's content.
    """
    a = [list(m.row(i)) for i in range(m.rows)]
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RatMatrix.from_rows(a, cols=m.cols), tuple(pivots)


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RatMatrix) -> list[tuple]:
    """Basis of {x : m x = 0}, one vector per free column of the RREF.

    The vector for free column j has a 1 in position j, zeros in the other
    free positions, and minus the RREF column j in the pivot positions,
    then scaled so that its first nonzero entry is positive. This is the
    canonical representative set, so results are byte-stable.
    """
    red, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for j in free:
        x = [Fraction(0)] * m.cols
        x[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -red[r, j]
        if next(c for c in x if c) < 0:
            x = [-c for c in x]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class NoSolution:
    pass


@dataclass(frozen=True)
class Unique:
    x: tuple


@dataclass(frozen=True)
class Affine:
    x0: tuple
    basis: list


SolveResult = Union[NoSolution, Unique, Affine]


def solve_linear(a: RatMatrix, b: Sequence[RationalLike]) -> SolveResult:
    """Classify and solve a x = b exactly.

    The particular solution of an ``Affine`` result sets every free variable
    to zero; its homogeneous part is :func:`kernel_basis` of ``a``.
    """
    b = vec(b)
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {a.rows} rows")
    aug = a.hstack(RatMatrix(a.rows, 1, b))
    red, pivots = rref(aug)
    if a.cols in pivots:
        return NoSolution()
    x = [Fraction(0)] * a.cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r, a.cols]
    x = tuple(x)
    if len(pivots) == a.cols:
        return Unique(x)
    return Affine(x, kernel_basis(a))


def in_span(basis: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> bool:
    if not any(x):
        return True
    if not basis:
        return False
    return not isinstance(solve_linear(RatMatrix.from_columns(basis, len(x)), x), NoSolution)


def span_equal(b1: Sequence[Sequence[Fraction]], b2: Sequence[Sequence[Fraction]], dim: int) -> bool:
    """Whether two lists of vectors in Q^dim span the same subspace."""
    def reduced(b):
        if not b:
            return ()
        red, piv = rref(RatMatrix.from_rows(b, cols=dim))
        return tuple(red.row(i) for i in range(len(piv)))
    return reduced(list(b1)) == reduced(list(b2))


def is_feasible(a_ub: Sequence[Sequence[Fraction]], b_ub: Sequence[Fraction]) -> bool:
    """Decide whether {x : a_ub x <= b_ub} is nonempty by Fourier-Motzkin elimination.

    Exact, and exponential in the worst case; callers keep systems small.
    """
    rows = [(vec(r), rat(c)) for r, c in zip(a_ub, b_ub)]
    nvars = len(rows[0][0]) if rows else 0
    for k in range(nvars):
        pos, neg, rest = [], [], []
        for r, c in rows:
            (pos if r[k] > 0 else neg if r[k] < 0 else rest).append((r, c))
        combined = list(rest)
        for rp, cp in pos:
            for rn, cn in neg:
                s, t = -rn[k], rp[k]
                combined.append((tuple(s * x + t * y for x, y in zip(rp, rn)), s * cp + t * cn))
        rows = _dedupe(combined)
        for r, c in rows:
            if not any(r) and c < 0:
                return False
    return all(c >= 0 for r, c in rows if not any(r))


def _dedupe(rows):
    # scale each inequality so its first nonzero coefficient has magnitude 1
    best = {}
    for r, c in rows:
        lead = next((abs(x) for x in r if x), None)
        if lead is None:
            key, c = r, c
        else:
            key, c = tuple(x / lead for x in r), c / lead
        if key not in best or c < best[key]:
            best[key] = c
    return list(best.items())

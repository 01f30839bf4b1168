"""Exact dense linear algebra over the rationals.

Everything is built on fractions.Fraction, so solves, kernels and signatures
are exact and a sign is never lost to rounding.  Matrices are immutable
tuples of tuples and all operations return new values.  Dimensions in this
package stay tiny (a few dozen at the very most), so the implementation
favours clarity over asymptotic cleverness: plain Gaussian elimination with
a deterministic first-nonzero pivot rule, which also keeps every witness
vector reproducible between runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence, Union

from .errors import InputError

Scalar = Union[int, str, Fraction]
Vector = tuple[Fraction, ...]


def as_rational(x: Scalar) -> Fraction:
    """Coerce an int, a Fraction, or a string like '3/4' to an exact Fraction.

    Floats are rejected on purpose: admitting one would silently poison
    every exactness guarantee downstream.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {x!r}") from exc
    raise InputError(f"not an exact rational: {x!r}")


def as_vector(entries: Iterable[Scalar]) -> Vector:
    return tuple(as_rational(x) for x in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_dot(u: Vector, v: Vector) -> Fraction:
    # skipping zero terms matters: forms and echelon bases are mostly zeros
    total = Fraction(0)
    for a, b in zip(u, v, strict=True):
        if a and b:
            total += a * b
    return total


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix.  `cols` is explicit so 0-row shapes survive."""

    entries: tuple[tuple[Fraction, ...], ...]
    cols: int

    def __post_init__(self) -> None:
        for row in self.entries:
            if len(row) != self.cols:
                raise InputError(
                    f"ragged matrix: row of length {len(row)}, expected {self.cols}"
                )

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> "Matrix":
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if cols is None:
            if not data:
                raise InputError("cannot infer column count of an empty matrix")
            cols = len(data[0])
        return Matrix(data, cols)

    @staticmethod
    def from_columns(columns: Sequence[Sequence[Scalar]], rows: int | None = None) -> "Matrix":
        cols = [as_vector(c) for c in columns]
        if rows is None:
            if not cols:
                raise InputError("cannot infer row count of an empty matrix")
            rows = len(cols[0])
        for c in cols:
            if len(c) != rows:
                raise InputError("column length mismatch")
        data = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return Matrix(data, len(cols))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(n))
                for i in range(n)
            ),
            n,
        )

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(tuple((Fraction(0),) * cols for _ in range(rows)), cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.rows,
        )

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in row) for row in self.entries), self.cols)

    def scale(self, c: Scalar) -> "Matrix":
        f = as_rational(c)
        return Matrix(tuple(tuple(f * a for a in row) for row in self.entries), self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.transpose()
        return Matrix(
            tuple(
                tuple(vec_dot(row, col) for col in ot.entries)
                for row in self.entries
            ),
            other.cols,
        )

    def apply(self, v: Sequence[Scalar]) -> Vector:
        x = as_vector(v)
        if len(x) != self.cols:
            raise InputError(f"vector of length {len(x)} against {self.rows}x{self.cols}")
        return tuple(vec_dot(row, x) for row in self.entries)

    def block_diag(self, other: "Matrix") -> "Matrix":
        top = tuple(row + (Fraction(0),) * other.cols for row in self.entries)
        bot = tuple((Fraction(0),) * self.cols + row for row in other.entries)
        return Matrix(top + bot, self.cols + other.cols)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def _require_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def matrix_power(m: Matrix, k: int) -> Matrix:
    """Exact k-th power, k >= 0, by square and multiply."""
    if not m.is_square():
        raise InputError("power of a non-square matrix")
    if k < 0:
        raise InputError("negative matrix power")
    result = Matrix.identity(m.rows)
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


SolveStatus = Literal["unique", "affine", "inconsistent"]


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact linear solve A x = b.

    `particular` sets every free variable to zero; `kernel_basis` holds one
    vector per free column.  Both are None / empty when inconsistent.  The
    pivot rule is first-nonzero, so results are bit-stable across runs.
    """

    status: SolveStatus
    particular: Vector | None
    kernel_basis: tuple[Vector, ...]


def _rref(rows: list[list[Fraction]],
          pivot_limit: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form.  Returns (rows, pivot column list).

    `pivot_limit` restricts pivot columns to the first that many; trailing
    columns still get eliminated but never host a pivot (multi-rhs solves).
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if pivot_limit is None:
        pivot_limit = ncols
    pivots: list[int] = []
    r = 0
    for c in range(pivot_limit):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def solve_linear(a: Matrix, b: Sequence[Scalar]) -> SolveResult:
    """Solve A x = b exactly, reporting the full affine solution set."""
    rhs = as_vector(b)
    if len(rhs) != a.rows:
        raise InputError(f"rhs of length {len(rhs)} against {a.rows}x{a.cols}")
    aug = [list(row) + [v] for row, v in zip(a.entries, rhs)]
    if not aug:
        # no equations: everything is a solution
        kernel = tuple(
            tuple(Fraction(1 if i == j else 0) for i in range(a.cols))
            for j in range(a.cols)
        )
        status: SolveStatus = "unique" if a.cols == 0 else "affine"
        return SolveResult(status, zero_vector(a.cols), kernel)
    reduced, pivots = _rref(aug)
    if a.cols in pivots:
        return SolveResult("inconsistent", None, ())
    pivot_set = set(pivots)
    free_cols = [c for c in range(a.cols) if c not in pivot_set]
    particular = [Fraction(0)] * a.cols
    for r, c in enumerate(pivots):
        particular[c] = reduced[r][a.cols]
    kernel = []
    for f in free_cols:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        kernel.append(tuple(v))
    status = "unique" if not free_cols else "affine"
    return SolveResult(status, tuple(particular), tuple(kernel))


def solve_many(a: Matrix, rhs_list: Sequence[Sequence[Scalar]]) -> list[Vector | None]:
    """Particular solutions of A x = b for several b, one elimination for all.

    Each result matches solve_linear(a, b).particular exactly (same pivot
    rule, free variables zeroed); None marks an inconsistent right-hand side.
    """
    columns = [as_vector(b) for b in rhs_list]
    for b in columns:
        if len(b) != a.rows:
            raise InputError(f"rhs of length {len(b)} against {a.rows}x{a.cols}")
    if not columns:
        return []
    if a.rows == 0:
        return [zero_vector(a.cols)] * len(columns)
    aug = [list(row) + [b[i] for b in columns] for i, row in enumerate(a.entries)]
    reduced, pivots = _rref(aug, pivot_limit=a.cols)
    out: list[Vector | None] = []
    for j in range(len(columns)):
        col = a.cols + j
        if any(reduced[r][col] != 0 for r in range(len(pivots), a.rows)):
            out.append(None)
            continue
        particular = [Fraction(0)] * a.cols
        for r, c in enumerate(pivots):
            particular[c] = reduced[r][col]
        out.append(tuple(particular))
    return out


def _swap_sym(m: list[list[Fraction]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]


def signature_symmetric(s: Matrix) -> int:
    """Signature of a symmetric rational matrix via congruence diagonalization.

    Symmetric Gaussian steps E M E^T keep the matrix symmetric; when the whole
    trailing diagonal vanishes, a symmetric row+column addition manufactures a
    nonzero diagonal pivot (2*m[i][j]).  The signature is the count of positive
    pivots minus negative ones; zero rows contribute nothing.
    """
    if not s.is_square():
        raise InputError("signature of a non-square matrix")
    if s != s.transpose():
        raise InputError("signature of a non-symmetric matrix")
    m = s.to_lists()
    n = s.rows
    sig = 0
    for k in range(n):
        if m[k][k] == 0:
            i = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
            if i is not None:
                _swap_sym(m, k, i)
            else:
                pos = next(
                    ((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0),
                    None,
                )
                if pos is None:
                    break  # trailing block is identically zero
                i, j = pos
                for c in range(n):
                    m[i][c] += m[j][c]
                for r in range(n):
                    m[r][i] += m[r][j]
                if i != k:
                    _swap_sym(m, k, i)
        p = m[k][k]
        sig += 1 if p > 0 else -1
        for r in range(k + 1, n):
            if m[r][k] != 0:
                f = m[r][k] / p
                for c in range(n):
                    m[r][c] -= f * m[k][c]
                for c in range(n):
                    m[c][r] -= f * m[c][k]
    return sig


def sign(x: Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# Subspace arithmetic.  A subspace of Q^n is handled as a tuple of spanning
# row vectors; `span_basis` canonicalizes to the RREF basis, so equal
# subspaces get equal representations and every downstream choice (complement
# representatives, witnesses) is deterministic.
# ---------------------------------------------------------------------------


def span_basis(vectors: Sequence[Sequence[Scalar]], dim: int) -> tuple[Vector, ...]:
    """Canonical (RREF) basis of the span of the given vectors inside Q^dim."""
    rows = [list(as_vector(v)) for v in vectors]
    for r in rows:
        if len(r) != dim:
            raise InputError(f"vector of length {len(r)} in ambient dimension {dim}")
    if not rows:
        return ()
    reduced, pivots = _rref(rows)
    return tuple(tuple(reduced[i]) for i in range(len(pivots)))


def rank(a: Matrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    _, pivots = _rref(a.to_lists())
    return len(pivots)


def kernel_basis(a: Matrix) -> tuple[Vector, ...]:
    """Basis of the right kernel of A, one vector per free column."""
    return solve_linear(a, zero_vector(a.rows)).kernel_basis


def in_span(basis: Sequence[Vector], v: Sequence[Scalar], dim: int) -> bool:
    if not basis:
        return all(as_rational(x) == 0 for x in v)
    m = Matrix.from_columns(basis, rows=dim)
    return solve_linear(m, v).status != "inconsistent"


def intersect_spans(
    u: Sequence[Vector], v: Sequence[Vector], dim: int
) -> tuple[Vector, ...]:
    """Canonical basis of span(u) ∩ span(v) inside Q^dim."""
    if not u or not v:
        return ()
    stacked = Matrix.from_columns(list(u) + [vec_scale(Fraction(-1), w) for w in v], rows=dim)
    meet = []
    for coeffs in kernel_basis(stacked):
        vec = zero_vector(dim)
        for c, basis_vec in zip(coeffs[: len(u)], u):
            vec = vec_add(vec, vec_scale(c, basis_vec))
        meet.append(vec)
    return span_basis(meet, dim)


def sum_spans(u: Sequence[Vector], v: Sequence[Vector], dim: int) -> tuple[Vector, ...]:
    return span_basis(list(u) + list(v), dim)

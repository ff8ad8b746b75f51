"""Builders for the symmetric matrices attached to tournaments.

Given nonzero vertex weights (a_1, ..., a_n) and a tournament, the base
matrix is symmetric with zero diagonal and, for i < j, entry (i, j) equal to
the winner's weight: a_i if i -> j, else a_j.  Variants built here: the
reverse-ranked transitive matrix (entry a_max(i,j)), the linear-mix matrix
(entry alpha*x + beta*y with x the winner's weight), the ratio matrix
(winner's weight over loser's), and the pair-sum matrix (a_i + a_j off the
diagonal), which equals any base matrix plus its reversal's.

Matrix rows/columns are 0-indexed; row r corresponds to vertex r + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, FieldMismatchError, Scalar, format_field, format_scalar, parse_field, parse_scalar
from .tournaments import Tournament


class LengthMismatchError(ValueError):
    """Weight sequence length differs from the tournament's vertex count."""


class ZeroWeightError(ValueError):
    """Weight sequences must consist of nonzero field elements."""


class MatrixShapeError(ValueError):
    """Dimensions inconsistent with the entry count, or unexpected shape."""


class MatrixParseError(ValueError):
    """Matrix CSV text malformed."""


@dataclass(frozen=True, slots=True)
class WeightSeq:
    """An ordered sequence of nonzero scalars from one field.

    values[k] is the weight of vertex k + 1.
    """

    field: Field
    values: tuple

    def __post_init__(self):
        for k, v in enumerate(self.values):
            if not isinstance(v, Scalar) or v.field != self.field:
                raise FieldMismatchError(f"weight {k} is not a {self.field} scalar")
            if v.is_zero():
                raise ZeroWeightError(f"weight {k + 1} is zero")

    @classmethod
    def of(cls, field: Field, values) -> "WeightSeq":
        """Coerce ints / Fractions / Scalars into a validated sequence."""
        return cls(field, tuple(field.scalar(v) for v in values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def replace(self, k: int, value) -> "WeightSeq":
        """A copy with values[k] swapped for `value` (still nonzero)."""
        vals = list(self.values)
        vals[k] = self.field.scalar(value)
        return WeightSeq(self.field, tuple(vals))

    def permuted(self, perm) -> "WeightSeq":
        """Reorder by perm: new values[k] = values[perm[k] - 1], perm over 1..n."""
        return WeightSeq(self.field, tuple(self.values[p - 1] for p in perm))

    def __str__(self):
        return ",".join(format_scalar(v) for v in self.values)


@dataclass(frozen=True, slots=True)
class DenseMatrix:
    """Dense matrix of scalars over one field, row-major, immutable."""

    field: Field
    n_rows: int
    n_cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.n_rows * self.n_cols:
            raise MatrixShapeError(
                f"{self.n_rows}x{self.n_cols} needs {self.n_rows * self.n_cols} entries,"
                f" got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, field: Field, rows) -> "DenseMatrix":
        rows = [tuple(field.scalar(v) for v in row) for row in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise MatrixShapeError("ragged rows")
        return cls(field, n_rows, n_cols, tuple(v for row in rows for v in row))

    def at(self, r: int, c: int) -> Scalar:
        return self.entries[r * self.n_cols + c]

    def row(self, r: int) -> tuple:
        return self.entries[r * self.n_cols : (r + 1) * self.n_cols]

    def rows(self):
        return [self.row(r) for r in range(self.n_rows)]

    def raw_rows(self) -> list:
        """Rows of raw values (ints for GF(p), Fractions for Q)."""
        return [[v.value for v in self.row(r)] for r in range(self.n_rows)]

    def transpose(self) -> "DenseMatrix":
        ent = tuple(self.at(r, c) for c in range(self.n_cols) for r in range(self.n_rows))
        return DenseMatrix(self.field, self.n_cols, self.n_rows, ent)

    def principal_submatrix(self, s: int) -> "DenseMatrix":
        """Top-left s x s block."""
        if not 0 <= s <= min(self.n_rows, self.n_cols):
            raise MatrixShapeError(f"principal size {s} out of range")
        ent = tuple(self.at(r, c) for r in range(s) for c in range(s))
        return DenseMatrix(self.field, s, s, ent)

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise MatrixShapeError("shape mismatch in add")
        ent = tuple(a + b for a, b in zip(self.entries, other.entries))
        return DenseMatrix(self.field, self.n_rows, self.n_cols, ent)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.n_cols != other.n_rows:
            raise MatrixShapeError("shape mismatch in matmul")
        zero = self.field.zero
        out = []
        for r in range(self.n_rows):
            row = self.row(r)
            for c in range(other.n_cols):
                acc = zero
                for k in range(self.n_cols):
                    acc = acc + row[k] * other.at(k, c)
                out.append(acc)
        return DenseMatrix(self.field, self.n_rows, other.n_cols, tuple(out))

    def is_symmetric(self) -> bool:
        return self.n_rows == self.n_cols and all(
            self.at(r, c) == self.at(c, r)
            for r in range(self.n_rows)
            for c in range(r + 1, self.n_cols)
        )

    def has_zero_diagonal(self) -> bool:
        return all(self.at(r, r).is_zero() for r in range(min(self.n_rows, self.n_cols)))


@dataclass(frozen=True, slots=True)
class LinearMix:
    """The two-coefficient mix f(x, y) = alpha*x + beta*y applied to weights."""

    alpha: Scalar
    beta: Scalar

    def __post_init__(self):
        if self.alpha.field != self.beta.field:
            raise FieldMismatchError("alpha and beta from different fields")

    @property
    def field(self) -> Field:
        return self.alpha.field

    def degenerate(self) -> bool:
        """True when alpha + beta = 0, which kills the pair-sum rank bound."""
        return (self.alpha + self.beta).is_zero()


def _check_weights(t: Tournament, weights: WeightSeq):
    if len(weights) != t.n:
        raise LengthMismatchError(f"{len(weights)} weights for n={t.n}")


def tournament_matrix(t: Tournament, weights: WeightSeq) -> DenseMatrix:
    """Symmetric zero-diagonal matrix with entry (i, j) = the winner's weight."""
    _check_weights(t, weights)
    n = t.n
    vals = weights.values
    zero = weights.field.zero
    grid = [[zero] * n for _ in range(n)]
    code = t.code
    k = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            e = vals[i] if (code >> k) & 1 else vals[j]
            grid[i][j] = e
            grid[j][i] = e
            k += 1
    return DenseMatrix(weights.field, n, n, tuple(v for row in grid for v in row))


def transitive_matrix(weights: WeightSeq) -> DenseMatrix:
    """The reverse-ranked transitive tournament's matrix: entry (i, j) = a_max(i,j)."""
    n = len(weights)
    vals = weights.values
    zero = weights.field.zero
    ent = tuple(
        zero if r == c else vals[max(r, c)] for r in range(n) for c in range(n)
    )
    return DenseMatrix(weights.field, n, n, ent)


def linear_mix_matrix(t: Tournament, weights: WeightSeq, mix: LinearMix) -> DenseMatrix:
    """Entry (i, j) = alpha*winner + beta*loser weights; zero diagonal, symmetric."""
    _check_weights(t, weights)
    if mix.field != weights.field:
        raise FieldMismatchError("mix coefficients from a different field")
    n = t.n
    vals = weights.values
    zero = weights.field.zero
    grid = [[zero] * n for _ in range(n)]
    code = t.code
    k = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            if (code >> k) & 1:
                e = mix.alpha * vals[i] + mix.beta * vals[j]
            else:
                e = mix.alpha * vals[j] + mix.beta * vals[i]
            grid[i][j] = e
            grid[j][i] = e
            k += 1
    return DenseMatrix(weights.field, n, n, tuple(v for row in grid for v in row))


def ratio_matrix(t: Tournament, weights: WeightSeq) -> DenseMatrix:
    """Entry (i, j) = winner's weight divided by loser's; zero diagonal, symmetric."""
    _check_weights(t, weights)
    n = t.n
    vals = weights.values
    zero = weights.field.zero
    grid = [[zero] * n for _ in range(n)]
    code = t.code
    k = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            e = vals[i] / vals[j] if (code >> k) & 1 else vals[j] / vals[i]
            grid[i][j] = e
            grid[j][i] = e
            k += 1
    return DenseMatrix(weights.field, n, n, tuple(v for row in grid for v in row))


def reversal_sum_matrix(weights: WeightSeq) -> DenseMatrix:
    """Entry (i, j) = a_i + a_j off the diagonal, zero on it.

    Equals tournament_matrix(t, w) + tournament_matrix(t.reverse(), w) for
    every tournament t, and also diag(a)J + Jdiag(a) - 2diag(a).
    """
    n = len(weights)
    vals = weights.values
    zero = weights.field.zero
    ent = tuple(
        zero if r == c else vals[r] + vals[c] for r in range(n) for c in range(n)
    )
    return DenseMatrix(weights.field, n, n, ent)


def in_matrix_family(m: DenseMatrix, weights: WeightSeq) -> bool:
    """True iff m is symmetric, zero-diagonal, with entry (i,j) in {a_i, a_j}."""
    n = len(weights)
    if m.n_rows != n or m.n_cols != n:
        return False
    if not m.has_zero_diagonal() or not m.is_symmetric():
        return False
    vals = weights.values
    return all(
        m.at(r, c) in (vals[r], vals[c])
        for r in range(n)
        for c in range(r + 1, n)
    )


def matrix_to_csv(m: DenseMatrix) -> str:
    """Serialize: header "field=<spec>,rows=<r>,cols=<c>", then entry rows."""
    lines = [f"field={format_field(m.field)},rows={m.n_rows},cols={m.n_cols}"]
    for r in range(m.n_rows):
        lines.append(",".join(format_scalar(v) for v in m.row(r)))
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str, field: Field | None = None) -> DenseMatrix:
    """Parse the CSV form; `field` overrides the header field if given."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise MatrixParseError("empty matrix text")
    header = lines[0].split(",")
    try:
        kv = dict(item.split("=", 1) for item in header)
        hdr_field = parse_field(kv["field"])
        n_rows, n_cols = int(kv["rows"]), int(kv["cols"])
    except (KeyError, ValueError) as exc:
        raise MatrixParseError(f"bad matrix header {lines[0]!r}") from exc
    if field is None:
        field = hdr_field
    if len(lines) - 1 != n_rows:
        raise MatrixParseError(f"expected {n_rows} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != n_cols:
            raise MatrixParseError(f"expected {n_cols} cols in {ln!r}")
        rows.append([parse_scalar(field, c) for c in cells])
    if n_rows == 0:
        return DenseMatrix(field, 0, n_cols, ())
    return DenseMatrix.from_rows(field, rows)

"""Exact linear algebra on the n^2-dimensional coordinate space of n x n matrices.

Matrices flatten row-major to vectors; subspaces keep a reduced row-echelon
basis with leading ones, which is unique, so subspace equality is plain list
equality.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatchError
from .fields import FieldSpec, Scalar


class Mat:
    """An immutable n x n matrix with Scalar entries, stored flat row-major."""

    __slots__ = ("n", "field", "values")

    def __init__(self, n: int, field: FieldSpec, values: Iterable[Scalar]):
        vals = tuple(values)
        if len(vals) != n * n:
            raise DimensionMismatchError(f"expected {n * n} entries, got {len(vals)}")
        self.n = n
        self.field = field
        self.values = vals

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, n: int, field: FieldSpec) -> "Mat":
        z = field.zero()
        return cls(n, field, (z,) * (n * n))

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Mat":
        z, o = field.zero(), field.one()
        return cls(n, field, (o if i % (n + 1) == 0 else z for i in range(n * n)))

    @classmethod
    def unit(cls, n: int, field: FieldSpec, i: int, j: int) -> "Mat":
        """The matrix unit E_ij (1-based indices would invite mistakes: 0-based)."""
        z = field.zero()
        vals = [z] * (n * n)
        vals[i * n + j] = field.one()
        return cls(n, field, vals)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence]) -> "Mat":
        n = len(rows)
        vals = []
        for row in rows:
            if len(row) != n:
                raise DimensionMismatchError("matrix rows must be square")
            vals.extend(field.scalar(x) for x in row)
        return cls(n, field, vals)

    @classmethod
    def diag(cls, field: FieldSpec, entries: Sequence) -> "Mat":
        n = len(entries)
        m = cls.zeros(n, field)
        vals = list(m.values)
        for i, e in enumerate(entries):
            vals[i * n + i] = field.scalar(e)
        return cls(n, field, vals)

    # -- access --------------------------------------------------------
    def entry(self, i: int, j: int) -> Scalar:
        return self.values[i * self.n + j]

    def rows(self) -> list[list[Scalar]]:
        n = self.n
        return [list(self.values[i * n : (i + 1) * n]) for i in range(n)]

    def is_zero(self) -> bool:
        return not any(self.values)

    # -- arithmetic ------------------------------------------------------
    def _same_space(self, other: "Mat"):
        if self.n != other.n or self.field != other.field:
            raise DimensionMismatchError("matrices live in different spaces")

    def __add__(self, other: "Mat") -> "Mat":
        self._same_space(other)
        return Mat(self.n, self.field, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_space(other)
        return Mat(self.n, self.field, (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Mat":
        return Mat(self.n, self.field, (-a for a in self.values))

    def scale(self, c) -> "Mat":
        c = self.field.scalar(c)
        return Mat(self.n, self.field, (c * a for a in self.values))

    def __mul__(self, other: "Mat") -> "Mat":
        """Ordinary matrix product, skipping zero entries of the left factor."""
        if not isinstance(other, Mat):
            return NotImplemented
        self._same_space(other)
        n = self.n
        a, b = self.values, other.values
        zero = self.field.zero()
        out = [zero] * (n * n)
        for i in range(n):
            base = i * n
            for k in range(n):
                aik = a[base + k]
                if not aik:
                    continue
                kb = k * n
                for j in range(n):
                    bkj = b[kb + j]
                    if bkj:
                        out[base + j] = out[base + j] + aik * bkj
        return Mat(n, self.field, out)

    def inverse(self) -> "Mat":
        """Exact inverse via Gauss-Jordan; raises ValueError if singular."""
        n = self.n
        aug = [list(self.values[i * n : (i + 1) * n]) + Mat.identity(n, self.field).rows()[i] for i in range(n)]
        col = 0
        for r in range(n):
            piv = next((k for k in range(r, n) if aug[k][col]), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = aug[r][col].inverse()
            aug[r] = [x * inv for x in aug[r]]
            for k in range(n):
                if k != r and aug[k][col]:
                    f = aug[k][col]
                    aug[k] = [x - f * y for x, y in zip(aug[k], aug[r])]
            col += 1
        return Mat(n, self.field, [aug[i][n + j] for i in range(n) for j in range(n)])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.field, self.values))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows())
        return f"Mat({self.field.label()}, [{body}])"


# ---------------------------------------------------------------------------
# Row reduction on flat coordinate vectors (tuples/lists of Scalars).
# ---------------------------------------------------------------------------


def _rref(rows: list[list[Scalar]]) -> list[tuple[Scalar, ...]]:
    """Reduced row echelon form with leading ones; zero rows dropped.

    The result is the unique canonical basis of the row space.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    width = len(rows[0])
    pivot_row = 0
    for col in range(width):
        piv = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        lead = rows[pivot_row]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], lead)]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [tuple(r) for r in rows[:pivot_row] if any(r)]


def _reduce_vector(rref_rows: Sequence[tuple[Scalar, ...]], vec: Sequence[Scalar]) -> list[Scalar]:
    """Residual of vec after elimination against canonical rows."""
    out = list(vec)
    for row in rref_rows:
        lead = next(c for c, x in enumerate(row) if x)
        f = out[lead]
        if f:
            out = [x - f * y for x, y in zip(out, row)]
    return out


class LinearSolver:
    """Exact coordinates with respect to a fixed independent list of vectors."""

    def __init__(self, vectors: Sequence[Sequence[Scalar]], field: FieldSpec):
        self.field = field
        self.count = len(vectors)
        zero, one = field.zero(), field.one()
        combined = []
        for i, v in enumerate(vectors):
            tag = [zero] * self.count
            tag[i] = one
            combined.append(list(v) + tag)
        width = len(vectors[0]) if vectors else 0
        self.width = width
        reduced = _rref(combined)
        self.rows = []
        for row in reduced:
            if not any(row[:width]):
                raise ValueError("vectors are linearly dependent")
            self.rows.append((row[:width], row[width:]))

    def coordinates(self, vec: Sequence[Scalar]) -> list[Scalar] | None:
        """Coefficients expressing vec in the original vectors, or None."""
        residual = list(vec)
        coeffs = [self.field.zero()] * self.count
        for row, tag in self.rows:
            lead = next(c for c, x in enumerate(row) if x)
            f = residual[lead]
            if f:
                residual = [x - f * y for x, y in zip(residual, row)]
                coeffs = [c + f * t for c, t in zip(coeffs, tag)]
        if any(residual):
            return None
        return coeffs


class Subspace:
    """A linear subspace of the flattened n x n matrix space.

    Stored as canonical RREF rows, so == and hash see through any choice of
    spanning set.  The zero subspace keeps its ambient dimension explicit.
    """

    __slots__ = ("n", "field", "rows", "_basis")

    def __init__(self, n: int, field: FieldSpec, rows: Sequence[tuple[Scalar, ...]]):
        self.n = n
        self.field = field
        self.rows = tuple(rows)
        self._basis = None

    @classmethod
    def zero(cls, n: int, field: FieldSpec) -> "Subspace":
        return cls(n, field, ())

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple[Mat, ...]:
        if self._basis is None:
            self._basis = tuple(Mat(self.n, self.field, row) for row in self.rows)
        return self._basis

    def _same_space(self, other: "Subspace"):
        if self.n != other.n or self.field != other.field:
            raise DimensionMismatchError("subspaces live in different ambient spaces")

    def contains(self, mat: Mat) -> bool:
        if mat.n != self.n or mat.field != self.field:
            raise DimensionMismatchError("matrix outside the ambient space")
        return not any(_reduce_vector(self.rows, mat.values))

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._same_space(other)
        return all(not any(_reduce_vector(other.rows, row)) for row in self.rows)

    def coordinates(self, mat: Mat) -> list[Scalar] | None:
        """Coefficients over the canonical basis, or None if outside."""
        residual = list(mat.values)
        coeffs = []
        for row in self.rows:
            lead = next(c for c, x in enumerate(row) if x)
            f = residual[lead]
            coeffs.append(f)
            if f:
                residual = [x - f * y for x, y in zip(residual, row)]
        if any(residual):
            return None
        return coeffs

    def extend_basis_to(self, within: "Subspace") -> list[Mat]:
        """Vectors from within's canonical basis that extend self to within.

        Deterministic complement: scan within's RREF basis in order and keep
        what is not yet spanned.
        """
        self._same_space(within)
        current = list(self.rows)
        added = []
        for row in within.rows:
            if any(_reduce_vector(current, row)):
                added.append(Mat(self.n, self.field, row))
                current = _rref(current + [list(row)])
        return added

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.field, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n}, {self.field.label()})"


def span(mats: Sequence[Mat], n: int | None = None, field: FieldSpec | None = None) -> Subspace:
    """Canonical subspace spanned by the given matrices.

    Spanning the empty list needs the ambient space spelled out.
    """
    mats = list(mats)
    if not mats:
        if n is None or field is None:
            raise ValueError("empty span needs explicit ambient n and field")
        return Subspace.zero(n, field)
    n0, f0 = mats[0].n, mats[0].field
    for m in mats:
        if m.n != n0 or m.field != f0:
            raise DimensionMismatchError("mixed ambient spaces in span")
    if n is not None and n != n0:
        raise DimensionMismatchError("ambient dimension disagrees with matrices")
    return Subspace(n0, f0, _rref([list(m.values) for m in mats]))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._same_space(v)
    return Subspace(u.n, u.field, _rref([list(r) for r in u.rows + v.rows]))


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Exact intersection via the block (Zassenhaus) construction."""
    u._same_space(v)
    width = u.n * u.n
    zero = u.field.zero()
    stacked = []
    for r in u.rows:
        stacked.append(list(r) + list(r))
    for r in v.rows:
        stacked.append(list(r) + [zero] * width)
    reduced = _rref(stacked)
    inter_rows = [row[width:] for row in reduced if not any(row[:width]) and any(row[width:])]
    return Subspace(u.n, u.field, _rref([list(r) for r in inter_rows]))


def product_span(u: Subspace, v: Subspace, prod: Callable[[Mat, Mat], Mat]) -> Subspace:
    """Span of prod(x, y) over basis pairs; exact for bilinear prod."""
    u._same_space(v)
    mats = [prod(x, y) for x in u.basis for y in v.basis]
    return span(mats, n=u.n, field=u.field)


def annihilator_kernel(domain: Subspace, maps: Sequence[Callable[[Mat], Mat]]) -> Subspace:
    """Elements of domain sent to zero by every map.

    Solved as one exact null-space problem in domain coordinates.
    """
    d = domain.dim
    if d == 0 or not maps:
        return domain
    images = [[f(b) for b in domain.basis] for f in maps]
    width = domain.n * domain.n
    constraint_rows = []
    for img_list in images:
        cols = [m.values for m in img_list]
        for r in range(width):
            row = [cols[j][r] for j in range(d)]
            if any(row):
                constraint_rows.append(row)
    coeff_vectors = _null_space(constraint_rows, d, domain.field)
    mats = []
    for coeffs in coeff_vectors:
        acc = Mat.zeros(domain.n, domain.field)
        for c, b in zip(coeffs, domain.basis):
            if c:
                acc = acc + b.scale(c)
        mats.append(acc)
    return span(mats, n=domain.n, field=domain.field)


def _null_space(rows: list[list[Scalar]], width: int, field: FieldSpec) -> list[list[Scalar]]:
    """Canonical basis of {x : Rx = 0} from the free columns of the RREF."""
    reduced = _rref(rows)
    pivots = []
    for row in reduced:
        pivots.append(next(c for c, x in enumerate(row) if x))
    free = [c for c in range(width) if c not in pivots]
    zero, one = field.zero(), field.one()
    out = []
    for f in free:
        vec = [zero] * width
        vec[f] = one
        for prow, pcol in zip(reduced, pivots):
            vec[pcol] = -prow[f]
        out.append(vec)
    return out

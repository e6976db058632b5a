"""Exact sparse linear algebra over the rationals or a prime field.

Vectors are plain ``dict[int, value]`` maps holding only nonzero entries;
values are :class:`fractions.Fraction` over the rationals and ``int`` in
``0..p-1`` over ``F_p``.  A :class:`Field` object carries the arithmetic so
the same code runs over either.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Vector = Dict[int, object]


class DimensionError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p == 0``) or the prime field ``F_p``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``"rational"`` / ``"Q"`` or ``"fp:<p>"``."""
        text = text.strip()
        if text.lower() in ("rational", "rationals", "q"):
            return cls(0)
        if text.lower().startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}")

    @property
    def name(self) -> str:
        return "rational" if self.p == 0 else f"fp:{self.p}"

    def __str__(self):
        return self.name

    def __call__(self, x):
        """Coerce an int (or Fraction, over Q) into the field."""
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p == 0 else pow(a, -1, self.p)


RATIONALS = Field(0)


# ---------------------------------------------------------------- vectors

def vector(entries: Mapping[int, object] | Sequence, field: Field = RATIONALS) -> Vector:
    """Build a sparse vector from a mapping or a dense sequence, dropping zeros."""
    items = entries.items() if isinstance(entries, Mapping) else enumerate(entries)
    out = {}
    for i, x in items:
        x = field(x)
        if x:
            out[i] = x
    return out


def axpy(F: Field, y: Vector, a, x: Vector) -> None:
    """In place ``y += a * x``."""
    if not a:
        return
    for i, xi in x.items():
        v = F.add(y.get(i, F.zero), F.mul(a, xi))
        if v:
            y[i] = v
        else:
            y.pop(i, None)


def scale(F: Field, a, x: Vector) -> Vector:
    if not a:
        return {}
    return {i: F.mul(a, xi) for i, xi in x.items()}


def _check_vec(v: Vector, dim: int) -> None:
    for i in v:
        if not 0 <= i < dim:
            raise DimensionError(f"index {i} outside dimension {dim}")


# ---------------------------------------------------------------- matrices

class SparseMatrix:
    """A ``nrows x ncols`` matrix stored column by column.

    Column ``j`` is the image of the ``j``-th basis vector, which is how
    generator actions are naturally produced.
    """

    __slots__ = ("nrows", "ncols", "field", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Iterable[Vector] | None = None,
                 field: Field = RATIONALS):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        if cols is None:
            self.cols = [{} for _ in range(ncols)]
        else:
            self.cols = [{i: x for i, x in c.items() if x} for c in cols]
            if len(self.cols) != ncols:
                raise DimensionError(f"expected {ncols} columns, got {len(self.cols)}")
            for c in self.cols:
                _check_vec(c, nrows)

    @classmethod
    def identity(cls, dim: int, field: Field = RATIONALS) -> "SparseMatrix":
        return cls(dim, dim, [{j: field.one} for j in range(dim)], field)

    @classmethod
    def zero(cls, nrows: int, ncols: int, field: Field = RATIONALS) -> "SparseMatrix":
        return cls(nrows, ncols, None, field)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], field: Field = RATIONALS) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [vector({i: rows[i][j] for i in range(nrows)}, field) for j in range(ncols)]
        return cls(nrows, ncols, cols, field)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def entries(self) -> Dict[Tuple[int, int], object]:
        return {(i, j): x for j, c in enumerate(self.cols) for i, x in c.items()}

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def to_dense(self) -> List[List]:
        out = [[self.field.zero] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                out[i][j] = x
        return out

    def rows(self) -> List[Vector]:
        out: List[Vector] = [{} for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                out[i][j] = x
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, self.rows(), self.field)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        F = self.field
        out: Vector = {}
        for j, x in v.items():
            axpy(F, out, x, self.cols[j])
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        return SparseMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols], self.field)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            axpy(self.field, c, self.field.one, b)
            cols.append(c)
        return SparseMatrix(self.nrows, self.ncols, cols, self.field)

    def __neg__(self) -> "SparseMatrix":
        F = self.field
        return SparseMatrix(self.nrows, self.ncols,
                            [{i: F.neg(x) for i, x in c.items()} for c in self.cols], F)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scaled(self, a) -> "SparseMatrix":
        a = self.field(a)
        return SparseMatrix(self.nrows, self.ncols, [scale(self.field, a, c) for c in self.cols],
                            self.field)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()}, field={self.field})"

    def is_monomial(self) -> bool:
        """At most one nonzero entry in every row and every column."""
        seen = set()
        for c in self.cols:
            if len(c) > 1:
                return False
            for i in c:
                if i in seen:
                    return False
                seen.add(i)
        return True


# ---------------------------------------------------------------- subspaces

@dataclass
class Subspace:
    """A subspace stored as its reduced row-echelon basis.

    The echelon form is canonical, so two subspaces are equal exactly when
    their ``pivots`` and ``basis`` agree.
    """

    ambient_dim: int
    field: Field = RATIONALS
    basis: List[Vector] = dc_field(default_factory=list)
    pivots: List[int] = dc_field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"

    def copy(self) -> "Subspace":
        return Subspace(self.ambient_dim, self.field, [dict(b) for b in self.basis],
                        list(self.pivots))

    def reduce(self, v: Vector) -> Vector:
        """Return the remainder of ``v`` modulo this subspace (a fresh dict)."""
        F = self.field
        w = dict(v)
        for p, b in zip(self.pivots, self.basis):
            c = w.get(p)
            if c:
                axpy(F, w, F.neg(c), b)
        return w

    def contains(self, v: Vector) -> bool:
        _check_vec(v, self.ambient_dim)
        return not self.reduce(v)

    def __contains__(self, v: Vector) -> bool:
        return self.contains(v)

    def add(self, v: Vector) -> Vector | None:
        """Enlarge the span by ``v`` in place.

        Returns the new normalized echelon row, or ``None`` if ``v`` was
        already in the span.
        """
        _check_vec(v, self.ambient_dim)
        F = self.field
        w = self.reduce(v)
        if not w:
            return None
        q = min(w)
        w = scale(F, F.inv(w[q]), w)
        for b in self.basis:
            c = b.get(q)
            if c:
                axpy(F, b, F.neg(c), w)
        k = _bisect(self.pivots, q)
        self.pivots.insert(k, q)
        self.basis.insert(k, w)
        return w

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self.is_subspace_of(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return rref_span(self.basis + other.basis, self.ambient_dim, self.field)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of ``[B_self | -B_other]``."""
        F = self.field
        k = self.dim
        cols = [dict(b) for b in self.basis] + [scale(F, F.neg(F.one), b) for b in other.basis]
        M = SparseMatrix(self.ambient_dim, len(cols), cols, F)
        _, ker = map_image_kernel(M)
        vecs = []
        for z in ker.basis:
            v: Vector = {}
            for j, c in z.items():
                if j < k:
                    axpy(F, v, c, self.basis[j])
            vecs.append(v)
        return rref_span(vecs, self.ambient_dim, F)

    def coordinates(self) -> List[List[Tuple[int, object]]]:
        """Sorted ``(index, value)`` lists, one per basis row."""
        return [sorted(b.items()) for b in self.basis]

    def is_coordinate(self) -> bool:
        """Whether the subspace is spanned by standard basis vectors."""
        return all(len(b) == 1 for b in self.basis)


def _bisect(xs: List[int], q: int) -> int:
    lo, hi = 0, len(xs)
    while lo < hi:
        mid = (lo + hi) // 2
        if xs[mid] < q:
            lo = mid + 1
        else:
            hi = mid
    return lo


def rref_span(vectors: Iterable[Vector], ambient_dim: int, field: Field = RATIONALS) -> Subspace:
    """Canonical reduced echelon basis of the span of ``vectors``."""
    S = Subspace(ambient_dim, field)
    for v in vectors:
        S.add(v)
    return S


def coordinate_subspace(indices: Iterable[int], ambient_dim: int,
                        field: Field = RATIONALS) -> Subspace:
    return rref_span(({i: field.one} for i in sorted(set(indices))), ambient_dim, field)


def spin(seeds: Iterable[Vector], generators: Sequence[SparseMatrix], ambient_dim: int | None = None,
         field: Field | None = None, stop_at: int | None = None) -> Subspace:
    """Smallest generator-stable subspace containing ``seeds``.

    Seeds are echelonized first; every newly added echelon row is then fed
    through each generator in order, breadth first, until nothing new
    appears.  With ``stop_at`` the search ends as soon as the span reaches
    that dimension.
    """
    if ambient_dim is None:
        if not generators:
            raise ValueError("ambient_dim is required when there are no generators")
        ambient_dim = generators[0].nrows
    if field is None:
        field = generators[0].field if generators else RATIONALS
    for g in generators:
        if g.shape != (ambient_dim, ambient_dim):
            raise DimensionError(f"generator of shape {g.shape} on a {ambient_dim}-dim space")
    S = Subspace(ambient_dim, field)
    queue = []
    for v in seeds:
        w = S.add(v)
        if w is not None:
            queue.append(w)
    head = 0
    while head < len(queue) and (stop_at is None or S.dim < stop_at):
        w = queue[head]
        head += 1
        for g in generators:
            new = S.add(g.apply(w))
            if new is not None:
                queue.append(new)
    return S


def map_image_kernel(M: SparseMatrix) -> Tuple[Subspace, Subspace]:
    """Column space (in the codomain) and null space (in the domain) of ``M``."""
    F = M.field
    image = rref_span(M.cols, M.nrows, F)
    # row-reduce the rows of M to read off the null space
    R = rref_span(M.rows(), M.ncols, F)
    pivset = set(R.pivots)
    kernel_vecs = []
    for f in range(M.ncols):
        if f in pivset:
            continue
        z: Vector = {f: F.one}
        for p, b in zip(R.pivots, R.basis):
            c = b.get(f)
            if c:
                z[p] = F.neg(c)
        kernel_vecs.append(z)
    kernel = rref_span(kernel_vecs, M.ncols, F)
    return image, kernel


def rank(M: SparseMatrix) -> int:
    return rref_span(M.cols, M.nrows, M.field).dim

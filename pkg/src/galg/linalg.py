"""Exact dense linear algebra over a base field.

Matrices are small (degree components at desk scale), so everything is
plain row reduction.  Subspaces are kept in reduced row echelon form, which
is a canonical representative: equality of subspaces is equality of their
RREF bases.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

from .errors import AmbientMismatch
from .fields import Field, Scalar

Vector = list  # mutable rows internally; public containers expose tuples


class Matrix:
    """A rectangular matrix with entries in one field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Sequence[Sequence[Scalar]], ncols: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("matrix rows must have equal length")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols does not match the given rows")
        else:
            if ncols is None:
                raise ValueError("an empty matrix needs an explicit column count")
            self.ncols = ncols

    def rref(self) -> tuple["Matrix", int]:
        """Reduced row echelon form and rank; the row space is preserved."""
        builder = RrefBuilder(self.field, self.ncols)
        for row in self.rows:
            builder.insert(row)
        return Matrix(self.field, builder.rows, self.ncols), builder.dim

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self) -> "Subspace":
        """Canonical basis of the right null space {v : M v = 0}."""
        reduced, rank = self.rref()
        pivots = [next(j for j, x in enumerate(row) if x != 0) for row in reduced.rows]
        pivot_set = set(pivots)
        free_cols = [j for j in range(self.ncols) if j not in pivot_set]
        neg = self.field.neg
        vectors = []
        for j in free_cols:
            v = [self.field.zero] * self.ncols
            v[j] = self.field.one
            for row, p in zip(reduced.rows, pivots):
                v[p] = neg(row[j])
            vectors.append(v)
        return Subspace.from_vectors(self.field, self.ncols, vectors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r})"


class RrefBuilder:
    """Incrementally maintained RREF basis with full back-substitution.

    Rows are kept sorted by pivot column; every pivot column is zero in all
    other rows, and entries left of a pivot are zero.  ``insert`` returns
    whether the vector enlarged the span.
    """

    __slots__ = ("field", "width", "rows", "pivots")

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[Scalar]) -> list[Scalar]:
        """Residue of vec modulo the current row space."""
        field = self.field
        sub, mul = field.sub, field.mul
        v = list(vec)
        for p, row in zip(self.pivots, self.rows):
            c = v[p]
            if c != 0:
                for j in range(p, self.width):
                    rj = row[j]
                    if rj != 0:
                        v[j] = sub(v[j], mul(c, rj))
        return v

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def insert(self, vec: Sequence[Scalar]) -> bool:
        field = self.field
        v = self.reduce(vec)
        pivot = next((j for j, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return False
        inv = field.inv(v[pivot])
        mul, sub = field.mul, field.sub
        if inv != field.one:
            v = [mul(inv, x) for x in v]
        # clear the new pivot column in every existing row
        for row in self.rows:
            c = row[pivot]
            if c != 0:
                for j in range(pivot, self.width):
                    vj = v[j]
                    if vj != 0:
                        row[j] = sub(row[j], mul(c, vj))
        k = bisect_left(self.pivots, pivot)
        self.pivots.insert(k, pivot)
        self.rows.insert(k, v)
        return True

    def subspace(self) -> "Subspace":
        return Subspace(self.field, self.width, tuple(tuple(r) for r in self.rows))


class Subspace:
    """A subspace of k^n represented by its canonical RREF basis rows."""

    __slots__ = ("field", "ambient_dim", "rows")

    def __init__(self, field: Field, ambient_dim: int, rows: tuple[tuple[Scalar, ...], ...] = ()):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = rows

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        builder = RrefBuilder(field, ambient_dim)
        for v in vectors:
            builder.insert(v)
        return builder.subspace()

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        rows = []
        for i in range(ambient_dim):
            row = [field.zero] * ambient_dim
            row[i] = field.one
            rows.append(tuple(row))
        return cls(field, ambient_dim, tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def builder(self) -> RrefBuilder:
        b = RrefBuilder(self.field, self.ambient_dim)
        for row in self.rows:
            b.insert(row)
        return b

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return self.builder().contains(vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        b = self.builder()
        return all(b.contains(r) for r in other.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        b = self.builder()
        for row in other.rows:
            b.insert(row)
        return b.subspace()

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the Zassenhaus block construction."""
        self._check(other)
        field, n = self.field, self.ambient_dim
        stacked = []
        for u in self.rows:
            stacked.append(list(u) + list(u))
        for v in other.rows:
            stacked.append(list(v) + [field.zero] * n)
        builder = RrefBuilder(field, 2 * n)
        for row in stacked:
            builder.insert(row)
        vectors = [row[n:] for row in builder.rows if all(x == 0 for x in row[:n])]
        return Subspace.from_vectors(field, n, vectors)

    def annihilator(self) -> "Subspace":
        """Vectors orthogonal to every basis row under the standard dot pairing."""
        return Matrix(self.field, [list(r) for r in self.rows], self.ambient_dim).kernel_basis()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"


def intersect_many(spaces: Sequence[Subspace]) -> Subspace:
    """Intersection of several subspaces via the sum of their annihilators.

    Cheaper than folding pairwise intersections when each space has small
    codimension, which is the common case for ideal kernels.
    """
    if not spaces:
        raise ValueError("need at least one subspace")
    first = spaces[0]
    for s in spaces[1:]:
        first._check(s)
    builder = RrefBuilder(first.field, first.ambient_dim)
    for s in spaces:
        for row in s.annihilator().rows:
            builder.insert(row)
    return builder.subspace().annihilator()

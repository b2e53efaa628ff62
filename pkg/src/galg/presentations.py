"""Graded algebra presentations and their constructors.

A presentation is a generator set with homogeneous defining relations over
one base field.  Skew polynomial rings keep their parameter matrix as
metadata so that isomorphism tests can check their hypotheses; quotients
append extra relations and track the minimal degree of those extras.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import (
    DependentElements,
    FieldMismatch,
    InhomogeneousRelation,
    InvalidSkewMatrix,
)
from .fields import Field, Scalar
from .freealg import GeneratorSet, NcPoly, Word, generators
from .linalg import Matrix, RrefBuilder


@dataclass(frozen=True)
class SkewMatrix:
    """Multiplicatively antisymmetric parameter matrix: p_ii = 1, p_ji = p_ij^-1."""

    field: Field
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        f = self.field
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise InvalidSkewMatrix("parameter matrix must be square")
            for j, q in enumerate(row):
                if q == 0:
                    raise InvalidSkewMatrix("parameter matrix entries must be nonzero")
                if i == j and q != f.one:
                    raise InvalidSkewMatrix("diagonal parameters must be 1")
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[j][i] != f.inv(self.entries[i][j]):
                    raise InvalidSkewMatrix(f"entry ({j},{i}) is not the inverse of ({i},{j})")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_upper(cls, field: Field, n: int, upper: dict[tuple[int, int], Scalar] | None = None) -> "SkewMatrix":
        """Build from the entries above the diagonal; unspecified pairs default to 1."""
        rows = [[field.one] * n for _ in range(n)]
        for (i, j), q in (upper or {}).items():
            if not 0 <= i < j < n:
                raise InvalidSkewMatrix(f"({i},{j}) is not an above-diagonal position")
            if q == 0:
                raise InvalidSkewMatrix("parameters must be nonzero")
            rows[i][j] = q
            rows[j][i] = field.inv(q)
        return cls(field, tuple(tuple(r) for r in rows))

    def has_unit_off_diagonal(self) -> bool:
        n = self.n
        return any(self.entries[i][j] == self.field.one for i in range(n) for j in range(n) if i != j)


def _normalize_relation(rel: NcPoly) -> NcPoly:
    if rel.is_zero():
        return rel
    if not rel.is_homogeneous():
        raise InhomogeneousRelation(f"relation mixes degrees {sorted(rel.degrees())}")
    if rel.degree() < 1:
        raise InhomogeneousRelation("relations must have degree >= 1")
    return rel.monic()


@dataclass(frozen=True)
class Presentation:
    """A connected graded algebra given by generators and homogeneous relations."""

    field: Field
    gens: GeneratorSet
    relations: tuple[NcPoly, ...]
    skew: SkewMatrix | None = None
    extras: tuple[NcPoly, ...] = dc_field(default=())

    @property
    def num_generators(self) -> int:
        return len(self.gens)

    @property
    def min_relation_degree(self) -> int | None:
        if not self.relations:
            return None
        return min(r.degree() for r in self.relations)

    @property
    def min_extra_degree(self) -> int | None:
        """Minimal degree among relations beyond the skew commutation set."""
        if not self.extras:
            return None
        return min(r.degree() for r in self.extras)

    @property
    def max_relation_degree(self) -> int:
        if not self.relations:
            return 0
        return max(r.degree() for r in self.relations)

    def generator(self, i: int) -> NcPoly:
        return NcPoly.generator(self.gens, self.field, i)

    def structurally_equal(self, other: "Presentation") -> bool:
        if self.field != other.field or self.gens != other.gens:
            return False
        if frozenset(self.relations) != frozenset(other.relations):
            return False
        if (self.skew is None) != (other.skew is None):
            return False
        if self.skew is not None and self.skew.entries != other.skew.entries:
            return False
        return True

    def __repr__(self) -> str:
        kind = "skew" if self.skew is not None else "free-quotient"
        return (
            f"Presentation({kind}, gens={list(self.gens.names)}, "
            f"{len(self.relations)} relations over {self.field!r})"
        )


def free_presentation(field: Field, gens: GeneratorSet) -> Presentation:
    return Presentation(field, gens, ())


def skew_ring(
    p: SkewMatrix,
    degrees: Sequence[int] | None = None,
    names: Sequence[str] | None = None,
) -> Presentation:
    """k_{p_ij}[x_1..x_n]: relations x_j x_i - p_ij x_i x_j for i < j."""
    n = p.n
    if names is None:
        names = [f"x{i + 1}" for i in range(n)]
    gens = generators(names, degrees if degrees is not None else (1,) * n)
    if len(gens) != n:
        raise InvalidSkewMatrix("generator count does not match the parameter matrix")
    field = p.field
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            rels.append(
                NcPoly(gens, field, {(j, i): field.one, (i, j): field.neg(p[i, j])})
            )
    return Presentation(field, gens, tuple(rels), skew=p)


def quotient(pres: Presentation, extra: Iterable[NcPoly]) -> Presentation:
    """Append homogeneous relations; skew metadata and old extras survive."""
    new = []
    for rel in extra:
        if rel.gens != pres.gens or rel.field != pres.field:
            raise FieldMismatch("extra relations live over a different presentation")
        rel = _normalize_relation(rel)
        if not rel.is_zero():
            new.append(rel)
    return Presentation(
        pres.field,
        pres.gens,
        pres.relations + tuple(new),
        skew=pres.skew,
        extras=pres.extras + tuple(new),
    )


def _reindexed(poly: NcPoly, gens: GeneratorSet, field: Field, shift: int) -> NcPoly:
    return NcPoly(gens, field, {tuple(i + shift for i in w): c for w, c in poly.terms.items()})


def tensor(a: Presentation, b: Presentation) -> Presentation:
    """Algebra tensor product: generator union plus cross-commutation relations."""
    if a.field != b.field:
        raise FieldMismatch("tensor factors must share the base field")
    field = a.field
    a_names, b_names = list(a.gens.names), list(b.gens.names)
    if set(a_names) & set(b_names):
        a_names = [f"a_{n}" for n in a_names]
        b_names = [f"b_{n}" for n in b_names]
    gens = generators(a_names + b_names, a.gens.degrees + b.gens.degrees)
    na = len(a_names)
    rels = [_reindexed(r, gens, field, 0) for r in a.relations]
    rels += [_reindexed(r, gens, field, na) for r in b.relations]
    cross = []
    for i in range(na):
        for j in range(na, len(gens)):
            # y x - x y with y the later generator: already deglex-monic
            cross.append(NcPoly(gens, field, {(j, i): field.one, (i, j): field.neg(field.one)}))
    skew = None
    if a.skew is not None and b.skew is not None and not a.extras and not b.extras:
        n = len(gens)
        rows = [[field.one] * n for _ in range(n)]
        for i in range(na):
            for j in range(na):
                rows[i][j] = a.skew[i, j]
        for i in range(len(b.gens)):
            for j in range(len(b.gens)):
                rows[na + i][na + j] = b.skew[i, j]
        skew = SkewMatrix(field, tuple(tuple(r) for r in rows))
    return Presentation(field, gens, tuple(rels) + tuple(cross), skew=skew)


def adjoin_central(pres: Presentation, count: int, name: str = "t") -> Presentation:
    """Adjoin count central degree-1 generators."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return pres
    taken = set(pres.gens.names)
    new_names = []
    k = 1
    while len(new_names) < count:
        candidate = name if (count == 1 and name not in taken) else f"{name}{k}"
        k += 1
        if candidate not in taken:
            taken.add(candidate)
            new_names.append(candidate)
    field = pres.field
    n_old = len(pres.gens)
    gens = generators(tuple(pres.gens.names) + tuple(new_names), pres.gens.degrees + (1,) * count)
    rels = [_reindexed(r, gens, field, 0) for r in pres.relations]
    for t in range(n_old, n_old + count):
        for g in range(t):
            # t g - g t: the new index is larger, so this is deglex-monic
            rels.append(NcPoly(gens, field, {(t, g): field.one, (g, t): field.neg(field.one)}))
    skew = None
    if pres.skew is not None and not pres.extras:
        n = len(gens)
        rows = [[field.one] * n for _ in range(n)]
        for i in range(n_old):
            for j in range(n_old):
                rows[i][j] = pres.skew[i, j]
        skew = SkewMatrix(field, tuple(tuple(r) for r in rows))
    extras = tuple(_reindexed(r, gens, field, 0) for r in pres.extras)
    return Presentation(field, gens, tuple(rels), skew=skew, extras=extras)


def eliminate_degree_one(pres: Presentation, elems: Sequence[NcPoly]) -> Presentation:
    """Quotient by independent degree-1 elements via linear elimination.

    The elements are completed to a generating set, deleted, and substituted
    by 0 in every relation; the result is a presentation on the surviving
    generators.
    """
    if not elems:
        return pres
    field = pres.field
    n = len(pres.gens)
    coords = []
    for e in elems:
        if e.gens != pres.gens or e.field != pres.field:
            raise FieldMismatch("elements live over a different presentation")
        if e.is_zero() or not e.is_homogeneous() or e.degree() != 1:
            raise DependentElements("elements must be nonzero homogeneous of degree 1")
        row = [field.zero] * n
        for w, c in e.terms.items():
            row[w[0]] = c
        coords.append(row)
    reduced, rank = Matrix(field, coords, n).rref()
    if rank != len(elems):
        raise DependentElements("the given degree-1 elements are linearly dependent")
    pivots = [next(j for j, x in enumerate(row) if x != 0) for row in reduced.rows]
    pivot_set = set(pivots)
    keep = [j for j in range(n) if j not in pivot_set]
    new_gens = generators(
        tuple(pres.gens.names[j] for j in keep),
        tuple(pres.gens.degrees[j] for j in keep),
    )
    new_index = {j: k for k, j in enumerate(keep)}
    # setting each eliminated generator to the negated tail of its RREF row
    images: dict[int, NcPoly] = {}
    for row, p in zip(reduced.rows, pivots):
        terms = {}
        for j in keep:
            if row[j] != 0:
                terms[(j,)] = field.neg(row[j])
        images[p] = NcPoly(pres.gens, field, terms)
    new_rels = []
    seen = set()
    for rel in pres.relations:
        sub = rel.substitute(images)
        mapped = NcPoly(
            new_gens, field, {tuple(new_index[i] for i in w): c for w, c in sub.terms.items()}
        )
        if mapped.is_zero():
            continue
        mapped = _normalize_relation(mapped)
        if mapped not in seen:
            seen.add(mapped)
            new_rels.append(mapped)
    return Presentation(field, new_gens, tuple(new_rels))

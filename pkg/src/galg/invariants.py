"""Ungraded and graded invariants of a presented algebra.

Codimension-1 ideals are represented by characters: a point assigning one
scalar to each generator at which every defining relation vanishes under
commuting substitution.  Over GF(p) all characters are found by exhaustive
scan, which makes the tangent-dimension radical (the intersection of all
codimension-1 ideals with a prescribed tangent dimension) finitely
computable inside a truncation window.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .errors import BudgetExceeded, InfiniteField, NotACharacter
from .fields import PrimeField, Scalar
from .freealg import NcPoly
from .groebner import (
    DegreeSlicedSubspace,
    ReductionSystem,
    component_slice,
    ideal_closure,
    ideal_product,
)
from .linalg import RrefBuilder, Subspace, intersect_many
from .presentations import Presentation

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class Character:
    """A point where all relations vanish; its kernel is a codimension-1 ideal."""

    point: tuple[Scalar, ...]


@dataclass(frozen=True)
class TangentProfile:
    """Successive dimensions dim I^i / I^{i+1} of a character's kernel ideal.

    Entry k (0-based) is the dimension jump of the (k+1)-st power, computed
    on the truncated ideal models, so entries are reliable only while the
    powers stay clear of the truncation boundary.
    """

    character: Character
    dims: tuple[int, ...]

    @property
    def cotangent(self) -> int:
        return self.dims[0]


def character_check(pres: Presentation, point: tuple[Scalar, ...]) -> bool:
    """Do all relations vanish at the point under commuting substitution?"""
    if len(point) != len(pres.gens):
        return False
    return all(r.evaluate_commutative(point) == 0 for r in pres.relations)


def characters_enumerate(pres: Presentation, budget: int = DEFAULT_BUDGET) -> list[Character]:
    """All characters over GF(p), by depth-first scan of the point cube.

    Each relation is tested as soon as its last generator gets a value, so
    constrained coordinates prune whole subtrees; the scan is still complete.
    """
    field = pres.field
    if not isinstance(field, PrimeField):
        raise InfiniteField("character enumeration needs a finite base field")
    n = len(pres.gens)
    if field.p ** n > budget:
        raise BudgetExceeded(f"{field.p}^{n} points exceed the enumeration budget")
    by_last: list[list[NcPoly]] = [[] for _ in range(n)]
    for rel in pres.relations:
        last = max(max(w) for w in rel.terms)
        by_last[last].append(rel)
    out: list[Character] = []
    point: list[Scalar] = [0] * n

    def descend(i: int) -> None:
        if i == n:
            out.append(Character(tuple(point)))
            return
        for a in range(field.p):
            point[i] = a
            if all(r.evaluate_commutative(tuple(point)) == 0 for r in by_last[i]):
                descend(i + 1)
        point[i] = 0

    descend(0)
    return out


def _shifted_linear_part(pres: Presentation, rel: NcPoly, point: tuple[Scalar, ...]) -> list[Scalar]:
    """Degree-1 coefficients of rel after substituting x_i -> x_i + point_i."""
    field = pres.field
    mul, add = field.mul, field.add
    vec = [field.zero] * len(pres.gens)
    for w, c in rel.terms.items():
        k = len(w)
        prefix = [field.one] * (k + 1)
        for t in range(k):
            prefix[t + 1] = mul(prefix[t], point[w[t]])
        suffix = [field.one] * (k + 1)
        for t in range(k - 1, -1, -1):
            suffix[t] = mul(point[w[t]], suffix[t + 1])
        for t in range(k):
            vec[w[t]] = add(vec[w[t]], mul(c, mul(prefix[t], suffix[t + 1])))
    return vec


def cotangent_dimension(pres: Presentation, character: Character) -> int:
    """dim I/I^2 for the character's kernel ideal, via relation linearization."""
    if not character_check(pres, character.point):
        raise NotACharacter(f"point {character.point} does not kill all relations")
    field = pres.field
    builder = RrefBuilder(field, len(pres.gens))
    for rel in pres.relations:
        builder.insert(_shifted_linear_part(pres, rel, character.point))
    return len(pres.gens) - builder.dim


def character_ideal_generators(pres: Presentation, character: Character) -> list[NcPoly]:
    """The elements x_i - alpha_i generating the character's kernel."""
    field = pres.field
    out = []
    for i, a in enumerate(character.point):
        terms = {(i,): field.one}
        if a != 0:
            terms[()] = field.neg(a)
        out.append(NcPoly(pres.gens, field, terms))
    return out


def character_ideal(rs: ReductionSystem, character: Character) -> Subspace:
    """The kernel ideal's model inside the truncation window.

    Equal to ideal_closure of {x_i - alpha_i}: both sit between the span of
    {w - w(alpha)} over normal words w and the kernel of the evaluation
    functional, and those two spaces coincide (codimension one).  Computing
    the kernel directly avoids the closure fixpoint.
    """
    pres = rs.presentation
    if not character_check(pres, character.point):
        raise NotACharacter(f"point {character.point} does not kill all relations")
    field = rs.field
    functional = [field.zero] * rs.full_dim
    for i, w in enumerate(rs._coord_word):
        v = field.one
        for letter in w:
            v = field.mul(v, character.point[letter])
        functional[i] = v
    return Subspace(field, rs.full_dim, (tuple(functional),)).annihilator()


def tangent_profile(rs: ReductionSystem, character: Character, depth: int) -> TangentProfile:
    """Dimension profile of the kernel ideal's powers, via iterated closure products."""
    if depth < 1:
        raise ValueError("profile depth must be >= 1")
    if depth > rs.truncation_degree:
        raise ValueError("profile depth exceeds the truncation degree")
    ideal = ideal_closure(rs, character_ideal_generators(rs.presentation, character))
    dims = []
    power = ideal
    for _ in range(depth):
        next_power = ideal_product(rs, power, ideal)
        dims.append(power.dim - next_power.dim)
        power = next_power
    return TangentProfile(character, tuple(dims))


def tangent_ideal(
    pres: Presentation,
    s: int,
    rs: ReductionSystem,
    budget: int = DEFAULT_BUDGET,
) -> DegreeSlicedSubspace:
    """Intersection of the kernels of all characters with cotangent dimension s.

    Returns the whole window when no character matches (the empty
    intersection convention).
    """
    matching = [
        ch for ch in characters_enumerate(pres, budget) if cotangent_dimension(pres, ch) == s
    ]
    if not matching:
        return DegreeSlicedSubspace.full(rs)
    kernels = [character_ideal(rs, ch) for ch in matching]
    return DegreeSlicedSubspace(rs, intersect_many(kernels))


def tangent_ideal_for_profile(
    pres: Presentation,
    profile: tuple[int, ...],
    rs: ReductionSystem,
    budget: int = DEFAULT_BUDGET,
) -> DegreeSlicedSubspace:
    """Like tangent_ideal, but matching the full power-dimension profile."""
    depth = len(profile)
    matching = []
    for ch in characters_enumerate(pres, budget):
        if cotangent_dimension(pres, ch) != profile[0]:
            continue
        if tangent_profile(rs, ch, depth).dims == tuple(profile):
            matching.append(ch)
    if not matching:
        return DegreeSlicedSubspace.full(rs)
    kernels = [character_ideal(rs, ch) for ch in matching]
    return DegreeSlicedSubspace(rs, intersect_many(kernels))


def unique_codim1_of_tangent_d(pres: Presentation, budget: int = DEFAULT_BUDGET) -> bool:
    """Is the augmentation ideal the only codimension-1 ideal of maximal tangent dimension?

    The reference dimension is dim A_1, which equals the cotangent dimension
    at the origin for a connected graded presentation.
    """
    origin = Character((pres.field.zero,) * len(pres.gens))
    d = cotangent_dimension(pres, origin)
    count = sum(
        1 for ch in characters_enumerate(pres, budget) if cotangent_dimension(pres, ch) == d
    )
    return count == 1


# ======================================================================
# normal elements and centers
# ======================================================================


def is_normal_up_to(rs: ReductionSystem, f: NcPoly, up_to: int | None = None) -> bool:
    """Does f*A_d equal A_d*f for every degree d inside the window?"""
    from .errors import DegreeExceedsTruncation, InhomogeneousInput

    if f.is_zero():
        return True
    if not f.is_homogeneous():
        raise InhomogeneousInput("normality is tested on homogeneous elements")
    D = rs.truncation_degree if up_to is None else min(up_to, rs.truncation_degree)
    m = f.degree()
    if m + 1 > D:
        raise DegreeExceedsTruncation("no room to compare products inside the window")
    for d in range(1, D - m + 1):
        target = m + d
        width = len(rs.basis[target])
        left = RrefBuilder(rs.field, width)
        right = RrefBuilder(rs.field, width)
        for w in rs.basis[d]:
            b = NcPoly.monomial(rs.gens, rs.field, w)
            left.insert(rs.component_vector(f * b, target))
            right.insert(rs.component_vector(b * f, target))
        if left.subspace() != right.subspace():
            return False
    return True


def projective_directions(field: PrimeField, dim: int):
    """Canonical representatives (first nonzero coordinate 1) of P^{dim-1}(GF(p))."""
    for lead in range(dim):
        prefix = (field.zero,) * lead + (field.one,)
        for rest in iter_product(range(field.p), repeat=dim - lead - 1):
            yield prefix + rest


def normal_lines_degree_one(
    rs: ReductionSystem, budget: int = 100_000
) -> list[tuple[tuple[Scalar, ...], NcPoly]]:
    """Exhaustive scan of projective directions in A_1 for normal elements."""
    field = rs.field
    if not isinstance(field, PrimeField):
        raise InfiniteField("exhaustive line search needs a finite base field")
    m = len(rs.basis[1])
    count = (field.p**m - 1) // (field.p - 1)
    if count > budget:
        raise BudgetExceeded(f"{count} projective directions exceed the budget")
    out = []
    for coeffs in projective_directions(field, m):
        f = rs.element_from_component(1, coeffs)
        if is_normal_up_to(rs, f):
            out.append((coeffs, f))
    return out


def central_elements(rs: ReductionSystem, degree: int, up_to: int | None = None) -> Subspace:
    """Subspace of A_degree commuting with every generator, checked in the window."""
    from .errors import DegreeExceedsTruncation

    D = rs.truncation_degree if up_to is None else min(up_to, rs.truncation_degree)
    if degree + 1 > D:
        raise DegreeExceedsTruncation("no room to commute with a generator inside the window")
    field = rs.field
    width = len(rs.basis[degree])
    if width == 0:
        return Subspace.zero(field, width)
    constraining = [
        g for g, gdeg in enumerate(rs.gens.degrees) if degree + gdeg <= D
    ]
    columns = []
    for w in rs.basis[degree]:
        b = NcPoly.monomial(rs.gens, field, w)
        col: list[Scalar] = []
        for g in constraining:
            xg = NcPoly.generator(rs.gens, field, g)
            col.extend(rs.component_vector(b * xg - xg * b, degree + rs.gens.degrees[g]))
        columns.append(col)
    if not columns[0]:
        return Subspace.full(field, width)
    from .linalg import Matrix

    rows = [list(r) for r in zip(*columns)]
    return Matrix(field, rows, width).kernel_basis()


# ======================================================================
# composite fingerprint
# ======================================================================


@dataclass(frozen=True)
class GradedFingerprint:
    """A separating (not complete) record: equality is necessary for graded isomorphism."""

    truncation_degree: int
    hilbert: tuple[int, ...]
    commutator_dims: tuple[int, ...]
    normal_line_count: int | None
    cotangent_multiset: tuple[int, ...] | None


def graded_fingerprint(
    rs: ReductionSystem, budget: int = DEFAULT_BUDGET
) -> GradedFingerprint:
    """Hilbert vector, commutator dimensions, and (over GF(p)) line and character data.

    commutator_dims[d-2] is the dimension of the span of [A_1, A_{d-1}]
    inside A_d, for 2 <= d <= D.
    """
    field = rs.field
    D = rs.truncation_degree
    comm_dims = []
    for d in range(2, D + 1):
        width = len(rs.basis[d])
        builder = RrefBuilder(field, width)
        for u in rs.basis[1]:
            a = NcPoly.monomial(rs.gens, field, u)
            for v in rs.basis[d - 1]:
                b = NcPoly.monomial(rs.gens, field, v)
                builder.insert(rs.component_vector(a * b - b * a, d))
        comm_dims.append(builder.dim)
    line_count = None
    cotangents = None
    if isinstance(field, PrimeField):
        pres = rs.presentation
        m = len(rs.basis[1])
        lines_affordable = (field.p**m - 1) // (field.p - 1) <= 100_000 and D >= 2
        if lines_affordable:
            line_count = len(normal_lines_degree_one(rs))
        if field.p ** len(pres.gens) <= budget:
            chars = characters_enumerate(pres, budget)
            cotangents = tuple(sorted(cotangent_dimension(pres, ch) for ch in chars))
    return GradedFingerprint(
        truncation_degree=D,
        hilbert=tuple(rs.hilbert()),
        commutator_dims=tuple(comm_dims),
        normal_line_count=line_count,
        cotangent_multiset=cotangents,
    )

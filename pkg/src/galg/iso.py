"""Graded isomorphism decisions for skew polynomial quotients.

The decision procedure searches elementary changes of generators: a
permutation paired with nonzero scalars.  A candidate is accepted when it
transports every defining relation of one presentation into the ideal of
the other (normal form zero) and the Hilbert vectors agree throughout the
checked window; the verdict records that window as its certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .errors import BudgetExceeded, HypothesisViolated
from .fields import Field, PrimeField, Scalar
from .freealg import NcPoly
from .groebner import ReductionSystem, build
from .linalg import Matrix
from .presentations import Presentation, SkewMatrix, quotient, skew_ring

DEFAULT_SEARCH_BUDGET = 500_000


@dataclass(frozen=True)
class ElementaryChange:
    """Replace the ordered generators by (a_1 x_{sigma(1)}, ..., a_n x_{sigma(n)})."""

    sigma: tuple[int, ...]  # 0-indexed permutation
    scalars: tuple[Scalar, ...]

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)):
            raise ValueError("sigma is not a permutation")
        if len(self.scalars) != n or any(a == 0 for a in self.scalars):
            raise ValueError("scalars must be nonzero, one per generator")

    @property
    def n(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class IsoVerdict:
    isomorphic: bool
    witness: ElementaryChange | None
    checked_degree: int
    linear_witness: tuple[tuple[Scalar, ...], ...] | None = None


# ----------------------------------------------------------------- perm_equiv


def _row_signature(field: Field, row) -> tuple:
    return tuple(sorted(field.format_scalar(x) for x in row))


def perm_equiv_all(P: SkewMatrix, Q: SkewMatrix):
    """All permutations sigma with Q_ij = P_{sigma(i) sigma(j)}, in lex order."""
    if P.field != Q.field or P.n != Q.n:
        return
    n = P.n
    p_sig = [_row_signature(P.field, P.entries[i]) for i in range(n)]
    q_sig = [_row_signature(Q.field, Q.entries[i]) for i in range(n)]
    sigma: list[int] = []
    used = [False] * n

    def backtrack(i: int):
        if i == n:
            yield tuple(sigma)
            return
        for c in range(n):
            if used[c] or q_sig[i] != p_sig[c]:
                continue
            ok = True
            for j in range(i):
                if Q[i, j] != P[c, sigma[j]] or Q[j, i] != P[sigma[j], c]:
                    ok = False
                    break
            if not ok:
                continue
            used[c] = True
            sigma.append(c)
            yield from backtrack(i + 1)
            sigma.pop()
            used[c] = False

    yield from backtrack(0)


def perm_equiv(P: SkewMatrix, Q: SkewMatrix) -> tuple[int, ...] | None:
    """The lex-least permutation matching the parameter matrices, or None."""
    return next(perm_equiv_all(P, Q), None)


# ----------------------------------------------------- elementary changes


def apply_elementary_change(pres: Presentation, change: ElementaryChange) -> Presentation:
    """The presentation of the same algebra in the changed generating set.

    With new generators x'_i = a_i x_{sigma(i)}, the parameter matrix picks
    up the permutation and the extra relations are rewritten by the inverse
    substitution x_k -> a_{tau(k)}^{-1} x_{tau(k)} where tau inverts sigma.
    """
    if pres.skew is None:
        raise HypothesisViolated("elementary changes are defined for skew quotients")
    field = pres.field
    n = change.n
    if n != pres.num_generators:
        raise HypothesisViolated("change size does not match the generator count")
    sigma = change.sigma
    tau = [0] * n
    for i, s in enumerate(sigma):
        tau[s] = i
    new_entries = tuple(
        tuple(pres.skew[sigma[i], sigma[j]] for j in range(n)) for i in range(n)
    )
    new_skew = SkewMatrix(field, new_entries)
    base = skew_ring(new_skew, degrees=pres.gens.degrees, names=pres.gens.names)
    sub_sigma = {k: tau[k] for k in range(n)}
    sub_scale = {k: field.inv(change.scalars[tau[k]]) for k in range(n)}
    extras = [r.substitute_monomial(sub_sigma, sub_scale) for r in pres.extras]
    return quotient(base, extras)


def transport_relation(
    rel: NcPoly, change: ElementaryChange, target: Presentation
) -> NcPoly:
    """Image of a source relation under generator i -> a_i x_{sigma(i)} of the target."""
    field = target.field
    out: dict = {}
    add, mul = field.add, field.mul
    for w, c in rel.terms.items():
        for i in w:
            c = mul(c, change.scalars[i])
        nw = tuple(change.sigma[i] for i in w)
        s = add(out.get(nw, field.zero), c)
        if s == 0:
            out.pop(nw, None)
        else:
            out[nw] = s
    return NcPoly(target.gens, field, out)


def verify_witness(
    rs_target: ReductionSystem,
    source: Presentation,
    change: ElementaryChange,
) -> bool:
    """Independent re-check: every source relation transports into the target ideal."""
    return all(
        rs_target.is_zero_in_truncation(
            transport_relation(rel, change, rs_target.presentation)
        )
        for rel in source.relations
    )


# ------------------------------------------------------------ main decision


def _check_skew_hypotheses(A: Presentation, B: Presentation) -> None:
    if A.skew is None or B.skew is None:
        raise HypothesisViolated("both presentations must be skew quotients")
    if not (A.gens.all_weight_one and B.gens.all_weight_one):
        raise HypothesisViolated("skew quotient isomorphism needs degree-1 generators")
    if A.skew.has_unit_off_diagonal():
        raise HypothesisViolated("the first presentation needs all off-diagonal parameters != 1")
    if A.min_extra_degree is not None and A.min_extra_degree < 3:
        raise HypothesisViolated("extra relations of the first presentation must have degree >= 3")
    if B.min_extra_degree is not None and B.min_extra_degree < 2:
        raise HypothesisViolated("extra relations of the second presentation must have degree >= 2")


def skew_quotient_iso(
    A: Presentation,
    B: Presentation,
    D: int,
    budget: int = DEFAULT_SEARCH_BUDGET,
    scalar_candidates: list[tuple[Scalar, ...]] | None = None,
    rs_A: ReductionSystem | None = None,
    rs_B: ReductionSystem | None = None,
) -> IsoVerdict:
    """Decide graded isomorphism of two skew quotients up to degree D.

    Over GF(p) the scalar search runs over unit tuples with first entry 1
    (relations are homogeneous, so witnesses are stable under a common
    scaling); over the rationals only caller-supplied candidates are tried,
    so a negative verdict there is certified only when the permutation
    search already fails.
    """
    _check_skew_hypotheses(A, B)
    if A.num_generators != B.num_generators:
        return IsoVerdict(False, None, D)
    field = A.field
    rs_A = rs_A or build(A, D)
    rs_B = rs_B or build(B, D)
    if rs_A.hilbert() != rs_B.hilbert():
        return IsoVerdict(False, None, D)
    perms = list(perm_equiv_all(A.skew, B.skew))
    if not perms:
        return IsoVerdict(False, None, D)
    n = A.num_generators
    if isinstance(field, PrimeField):
        units = list(range(1, field.p))
        total = len(perms) * len(units) ** (n - 1)
        if total > budget:
            raise BudgetExceeded(f"{total} candidate changes exceed the search budget")
        tuples = [(field.one,) + rest for rest in iter_product(units, repeat=n - 1)]
    else:
        tuples = list(scalar_candidates or [(field.one,) * n])
        if len(perms) * len(tuples) > budget:
            raise BudgetExceeded("candidate changes exceed the search budget")
    relations = sorted(B.relations, key=lambda r: (r.degree(), len(r.terms)))
    for sigma in perms:
        for scalars in tuples:
            change = ElementaryChange(sigma, tuple(scalars))
            if all(
                rs_A.is_zero_in_truncation(transport_relation(rel, change, A))
                for rel in relations
            ):
                return IsoVerdict(True, change, D)
    return IsoVerdict(False, None, D)


# -------------------------------------------------------------- brute force


def _invertible_matrices(field: PrimeField, n: int):
    """All of GL_n(GF(p)) in lexicographic entry order."""
    for entries in iter_product(range(field.p), repeat=n * n):
        rows = [list(entries[i * n : (i + 1) * n]) for i in range(n)]
        if Matrix(field, rows).rank() == n:
            yield rows

def _monomial_change(field: Field, rows) -> ElementaryChange | None:
    n = len(rows)
    sigma, scalars = [], []
    for row in rows:
        nz = [j for j, x in enumerate(row) if x != 0]
        if len(nz) != 1:
            return None
        sigma.append(nz[0])
        scalars.append(row[nz[0]])
    if sorted(sigma) != list(range(n)):
        return None
    return ElementaryChange(tuple(sigma), tuple(scalars))


def brute_force_graded_iso(
    A: Presentation,
    B: Presentation,
    D: int,
    rs_A: ReductionSystem | None = None,
    rs_B: ReductionSystem | None = None,
) -> IsoVerdict:
    """Exact graded isomorphism test by exhausting degree-1 linear maps.

    Only feasible over GF(2) or GF(3) with at most three generators; the
    generators must form a basis of the degree-1 component.
    """
    field = A.field
    if not isinstance(field, PrimeField) or field.p not in (2, 3):
        raise BudgetExceeded("exhaustive linear search is limited to GF(2) and GF(3)")
    if A.field != B.field:
        return IsoVerdict(False, None, D)
    n, m = A.num_generators, B.num_generators
    if max(n, m) > 3:
        raise BudgetExceeded("exhaustive linear search is limited to <= 3 generators")
    rs_A = rs_A or build(A, D)
    rs_B = rs_B or build(B, D)
    if len(rs_A.basis[1]) != n or len(rs_B.basis[1]) != m:
        raise HypothesisViolated("generators must be a basis of the degree-1 component")
    if rs_A.hilbert() != rs_B.hilbert():
        return IsoVerdict(False, None, D)
    if n != m:
        return IsoVerdict(False, None, D)
    for rows in _invertible_matrices(field, n):
        images = {
            i: NcPoly(B.gens, field, {(j,): rows[i][j] for j in range(n) if rows[i][j] != 0})
            for i in range(n)
        }
        ok = True
        for rel in A.relations:
            moved = NcPoly(B.gens, field, rel.terms).substitute(images)
            if not rs_B.is_zero_in_truncation(moved):
                ok = False
                break
        if ok:
            witness = _monomial_change(field, rows)
            return IsoVerdict(True, witness, D, tuple(tuple(r) for r in rows))
    return IsoVerdict(False, None, D)

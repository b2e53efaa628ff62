"""Cancellation workflow built on degree-1 centers.

For an algebra with trivial degree-1 center, adjoining n central variables,
recomputing the degree-1 center of the extension, and quotienting it away
must return an algebra indistinguishable from the original.  The center of
the extension is computed fresh rather than assumed to be the adjoined
variables; that recomputation is the substance of the check.
"""

from __future__ import annotations

from .errors import HypothesisViolated
from .groebner import ReductionSystem, build
from .invariants import central_elements
from .linalg import Subspace
from .presentations import Presentation, adjoin_central, eliminate_degree_one


def degree_one_center_check(rs: ReductionSystem) -> Subspace:
    """The degree-1 center; the cancellation hypothesis asks for the zero subspace."""
    return central_elements(rs, 1)


def cancel(A: Presentation, n: int, D: int) -> Presentation:
    """Adjoin n central degree-1 variables, then cancel them again.

    Raises when A itself has central degree-1 elements, since then the
    recomputed center of the extension is too large to cancel cleanly.
    """
    if n < 0:
        raise ValueError("count must be >= 0")
    if n == 0:
        return A
    rs_A = build(A, D)
    if not degree_one_center_check(rs_A).is_zero():
        raise HypothesisViolated("the degree-1 center of the input is nonzero")
    if not rs_A.is_generated_in_degree_one():
        raise HypothesisViolated("cancellation needs an algebra generated in degree 1")
    C = adjoin_central(A, n)
    rs_C = build(C, D)
    z1 = degree_one_center_check(rs_C)
    if z1.dim != n:
        raise HypothesisViolated(
            f"degree-1 center of the extension has dimension {z1.dim}, expected {n}"
        )
    elems = [rs_C.element_from_component(1, row) for row in z1.rows]
    return eliminate_degree_one(C, elems)

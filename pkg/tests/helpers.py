"""Shared independent oracles and generators for the test suite.

The Hilbert oracle here never touches the rewriting machinery: it spans the
ideal degreewise inside the free algebra by brute force and subtracts
ranks.  The series oracle multiplies power series with plain integer
arithmetic.
"""

from __future__ import annotations

import random

from galg.fields import Field
from galg.freealg import NcPoly, words_of_degree
from galg.linalg import RrefBuilder
from galg.presentations import Presentation, SkewMatrix, skew_ring, tensor


def hilbert_oracle(pres: Presentation, D: int) -> list[int]:
    """dim A_d by brute-force ideal spanning inside the free algebra."""
    gens, field = pres.gens, pres.field
    out = []
    for d in range(D + 1):
        basis = list(words_of_degree(gens, d))
        index = {w: i for i, w in enumerate(basis)}
        builder = RrefBuilder(field, len(basis))
        for rel in pres.relations:
            rd = rel.degree()
            if rd is None or rd > d:
                continue
            for left_deg in range(d - rd + 1):
                for left in words_of_degree(gens, left_deg):
                    for right in words_of_degree(gens, d - rd - left_deg):
                        vec = [field.zero] * len(basis)
                        for w, c in rel.terms.items():
                            vec[index[left + w + right]] = c
                        builder.insert(vec)
        out.append(len(basis) - builder.dim)
    return out


def series_coeffs(factor_degrees: list[int], D: int) -> list[int]:
    """Coefficients of prod 1/(1 - t^k) over the factor degrees, up to t^D."""
    coeffs = [1] + [0] * D
    for k in factor_degrees:
        # multiply by the expansion of 1/(1 - t^k)
        out = [0] * (D + 1)
        for i, c in enumerate(coeffs):
            j = i
            while j <= D:
                out[j] += c
                j += k
        coeffs = out
    return coeffs


def rand_units(rng: random.Random, field, forbid_one: bool = False) -> int:
    units = list(range(1, field.p))
    if forbid_one and len(units) > 1:
        units = [u for u in units if u != 1]
    return rng.choice(units)


def rand_skew_matrix(rng: random.Random, field, n: int, forbid_one: bool = False) -> SkewMatrix:
    upper = {
        (i, j): rand_units(rng, field, forbid_one) for i in range(n) for j in range(i + 1, n)
    }
    return SkewMatrix.from_upper(field, n, upper)


def example_13_pair(field: Field) -> tuple[Presentation, Presentation]:
    """The two oppositely graded tensor algebras with equal Hilbert series."""
    minus_one = field.neg(field.one)
    a = tensor(
        skew_ring(SkewMatrix.from_upper(field, 2, {(0, 1): minus_one}), names=["x1", "x2"]),
        skew_ring(SkewMatrix.from_upper(field, 2), names=["y1", "y2"], degrees=(2, 2)),
    )
    b = tensor(
        skew_ring(
            SkewMatrix.from_upper(field, 2, {(0, 1): minus_one}),
            names=["x1", "x2"],
            degrees=(2, 2),
        ),
        skew_ring(SkewMatrix.from_upper(field, 2), names=["y1", "y2"]),
    )
    return a, b

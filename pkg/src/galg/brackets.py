"""Iterated commutators and pivot-power decompositions in a free algebra.

For a distinguished generator x_d, the bracket letter (i, j) stands for the
degree-j element [x_d, [x_d, ..., [x_d, x_i]...]] with j-1 nested x_d's
(order 1 is x_i itself).  Every homogeneous polynomial in weight-1
generators rewrites into a sum of terms x_d^s * (product of bracket
letters) using the single rule

    (bracket letter) x_d  ->  x_d (bracket letter) - (next bracket letter),

applied leftmost-first.  Each application moves an x_d occurrence one step
left, so the total distance of x_d's from the left end strictly drops and
the rewriting terminates in a unique normal form for this strategy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    DistinguishedIndexClash,
    HypothesisViolated,
    InhomogeneousInput,
    ZeroDecomposition,
)
from .fields import Field, Scalar
from .freealg import GeneratorSet, NcPoly

# a symbol is (i, j): j >= 1 is the bracket letter of order j over generator i;
# j == 0 marks a plain occurrence of the distinguished generator (i == d)
Symbol = tuple[int, int]
BWord = tuple[Symbol, ...]


def bracket_expand(gens: GeneratorSet, field: Field, i: int, j: int, d: int) -> NcPoly:
    """The order-j bracket letter over generator i, expanded in the free algebra."""
    if i == d:
        raise DistinguishedIndexClash("bracket letters are indexed by non-distinguished generators")
    if j < 1:
        raise ValueError("bracket order must be >= 1")
    xd = NcPoly.generator(gens, field, d)
    out = NcPoly.generator(gens, field, i)
    for _ in range(j - 1):
        out = xd.commutator(out)
    return out


def _symbol_degree(sym: Symbol) -> int:
    return sym[1] if sym[1] >= 1 else 1


class BracketPoly:
    """A scalar combination of words over bracket letters (no x_d occurrences)."""

    __slots__ = ("gens", "field", "d", "terms")

    def __init__(self, gens: GeneratorSet, field: Field, d: int, terms: Mapping[BWord, Scalar]):
        self.gens = gens
        self.field = field
        self.d = d
        self.terms: dict[BWord, Scalar] = {w: c for w, c in terms.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def expanded_degree(self) -> int | None:
        """Total degree after expanding every bracket letter, None for zero."""
        if not self.terms:
            return None
        degs = {sum(_symbol_degree(s) for s in w) for w in self.terms}
        return max(degs)

    def is_homogeneous(self) -> bool:
        degs = {sum(_symbol_degree(s) for s in w) for w in self.terms}
        return len(degs) <= 1

    def expand(self) -> NcPoly:
        out = NcPoly.zero(self.gens, self.field)
        for w, c in self.terms.items():
            factor = NcPoly.monomial(self.gens, self.field, (), c)
            for (i, j) in w:
                factor = factor * bracket_expand(self.gens, self.field, i, j, self.d)
            out = out + factor
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BracketPoly)
            and self.gens == other.gens
            and self.field == other.field
            and self.d == other.d
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        names = self.gens.names
        parts = []
        for w, c in sorted(self.terms.items()):
            word = "*".join(f"{names[i]}^[{j}]" for i, j in w) or "1"
            parts.append(f"{c}*{word}")
        return "BracketPoly(" + (" + ".join(parts) or "0") + ")"


@dataclass(frozen=True)
class BracketDecomposition:
    """parts[s] is the bracket-letter polynomial multiplying x_d^s."""

    gens: GeneratorSet
    field: Field
    d: int
    degree: int
    parts: dict[int, BracketPoly]

    def expand(self) -> NcPoly:
        xd = NcPoly.generator(self.gens, self.field, self.d)
        out = NcPoly.zero(self.gens, self.field)
        for s, part in self.parts.items():
            out = out + xd.power(s) * part.expand()
        return out


def bracket_decompose(r: NcPoly, d: int) -> BracketDecomposition:
    """Rewrite a homogeneous polynomial as a sum of x_d^s times bracket letters."""
    gens, field = r.gens, r.field
    if not gens.all_weight_one:
        raise HypothesisViolated("the decomposition needs all generators in degree 1")
    if not 0 <= d < len(gens):
        raise ValueError(f"no generator with index {d}")
    if not r.is_homogeneous():
        raise InhomogeneousInput("only homogeneous polynomials decompose cleanly")
    degree = r.degree() or 0

    add, mul = field.add, field.mul

    def accumulate(store: dict, key, value) -> None:
        s = add(store.get(key, field.zero), value)
        if s == 0:
            store.pop(key, None)
        else:
            store[key] = s

    work: dict[BWord, Scalar] = {}
    for w, c in r.terms.items():
        bw = tuple((i, 0) if i == d else (i, 1) for i in w)
        accumulate(work, bw, c)

    done: dict[BWord, Scalar] = {}
    while work:
        word, coeff = work.popitem()
        # leftmost redex: a bracket letter immediately followed by x_d
        redex = None
        for t in range(len(word) - 1):
            if word[t][1] >= 1 and word[t + 1] == (d, 0):
                redex = t
                break
        if redex is None:
            accumulate(done, word, coeff)
            continue
        i, j = word[redex]
        prefix, suffix = word[:redex], word[redex + 2 :]
        accumulate(work, prefix + ((d, 0), (i, j)) + suffix, coeff)
        accumulate(work, prefix + ((i, j + 1),) + suffix, field.neg(coeff))

    parts: dict[int, dict[BWord, Scalar]] = {}
    for word, coeff in done.items():
        s = 0
        while s < len(word) and word[s] == (d, 0):
            s += 1
        assert all(sym[1] >= 1 for sym in word[s:]), "normal form must be x_d^s * brackets"
        parts.setdefault(s, {})[word[s:]] = coeff
    return BracketDecomposition(
        gens,
        field,
        d,
        degree,
        {s: BracketPoly(gens, field, d, terms) for s, terms in sorted(parts.items())},
    )


def leading_part_index(dec: BracketDecomposition) -> int:
    """The largest s whose part is nonzero."""
    live = [s for s, part in dec.parts.items() if not part.is_zero()]
    if not live:
        raise ZeroDecomposition("the zero polynomial has no leading part")
    return max(live)

"""Words and noncommutative polynomials in a free algebra with weighted generators.

A word is a tuple of generator indices (the empty tuple is the unit), so
concatenation and comparison are cheap inside reduction loops.  The term
order everywhere is deglex: first by weighted degree, ties broken by
left-to-right comparison of index sequences.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import GeneratorSetMismatch
from .fields import Field, Scalar

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered generator names with positive integer degrees."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be >= 1")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def word_degree(self, word: Word) -> int:
        degs = self.degrees
        return sum(degs[i] for i in word)

    @property
    def all_weight_one(self) -> bool:
        return all(d == 1 for d in self.degrees)


def generators(names: Iterable[str], degrees: Iterable[int] | None = None) -> GeneratorSet:
    names = tuple(names)
    if degrees is None:
        degrees = (1,) * len(names)
    return GeneratorSet(names, tuple(degrees))


def deglex_key(gens: GeneratorSet, word: Word) -> tuple[int, Word]:
    return (gens.word_degree(word), word)


def deglex_compare(gens: GeneratorSet, u: Word, v: Word) -> int:
    """-1, 0, or 1 as u precedes, equals, or follows v in deglex order."""
    ku, kv = deglex_key(gens, u), deglex_key(gens, v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


class NcPoly:
    """A finite scalar combination of words; zero coefficients are never stored."""

    __slots__ = ("gens", "field", "terms")

    def __init__(self, gens: GeneratorSet, field: Field, terms: Mapping[Word, Scalar] | None = None):
        self.gens = gens
        self.field = field
        self.terms: dict[Word, Scalar] = {w: c for w, c in (terms or {}).items() if c != 0}

    # ------------------------------------------------------ constructors

    @classmethod
    def zero(cls, gens: GeneratorSet, field: Field) -> "NcPoly":
        return cls(gens, field)

    @classmethod
    def unit(cls, gens: GeneratorSet, field: Field) -> "NcPoly":
        return cls(gens, field, {EMPTY_WORD: field.one})

    @classmethod
    def monomial(cls, gens: GeneratorSet, field: Field, word: Word, coeff: Scalar | None = None) -> "NcPoly":
        return cls(gens, field, {tuple(word): field.one if coeff is None else coeff})

    @classmethod
    def generator(cls, gens: GeneratorSet, field: Field, index: int) -> "NcPoly":
        return cls.monomial(gens, field, (index,))

    # ------------------------------------------------------------- state

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NcPoly)
            and self.gens == other.gens
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.gens, self.field, frozenset(self.terms.items())))

    def _check_compatible(self, other: "NcPoly") -> None:
        if self.gens != other.gens or self.field != other.field:
            raise GeneratorSetMismatch("operands live over different generator sets or fields")

    # -------------------------------------------------------- arithmetic

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._check_compatible(other)
        add = self.field.add
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = add(terms.get(w, self.field.zero), c)
            if s == 0:
                terms.pop(w, None)
            else:
                terms[w] = s
        return NcPoly(self.gens, self.field, terms)

    def __neg__(self) -> "NcPoly":
        neg = self.field.neg
        return NcPoly(self.gens, self.field, {w: neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def scalar_mul(self, c: Scalar) -> "NcPoly":
        if c == 0:
            return NcPoly.zero(self.gens, self.field)
        mul = self.field.mul
        return NcPoly(self.gens, self.field, {w: mul(c, x) for w, x in self.terms.items()})

    def __mul__(self, other: "NcPoly") -> "NcPoly":
        self._check_compatible(other)
        mul, add = self.field.mul, self.field.add
        terms: dict[Word, Scalar] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa + wb
                s = add(terms.get(w, self.field.zero), mul(ca, cb))
                if s == 0:
                    terms.pop(w, None)
                else:
                    terms[w] = s
        return NcPoly(self.gens, self.field, terms)

    def commutator(self, other: "NcPoly") -> "NcPoly":
        return self * other - other * self

    def power(self, n: int) -> "NcPoly":
        result = NcPoly.unit(self.gens, self.field)
        for _ in range(n):
            result = result * self
        return result

    # ----------------------------------------------------------- grading

    def degrees(self) -> set[int]:
        wd = self.gens.word_degree
        return {wd(w) for w in self.terms}

    def degree(self) -> int | None:
        """Maximal word degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.degrees())

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d: int) -> "NcPoly":
        wd = self.gens.word_degree
        return NcPoly(self.gens, self.field, {w: c for w, c in self.terms.items() if wd(w) == d})

    # --------------------------------------------------------- structure

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading word")
        return max(self.terms, key=lambda w: deglex_key(self.gens, w))

    def leading_coeff(self) -> Scalar:
        return self.terms[self.leading_word()]

    def monic(self) -> "NcPoly":
        if not self.terms:
            return self
        return self.scalar_mul(self.field.inv(self.leading_coeff()))

    # ------------------------------------------------------ substitution

    def substitute(self, images: Mapping[int, "NcPoly"]) -> "NcPoly":
        """Replace generator i by images[i] (generators absent from the map stay)."""
        result = NcPoly.zero(self.gens, self.field)
        cache: dict[int, NcPoly] = {}
        for w, c in self.terms.items():
            factor = NcPoly.monomial(self.gens, self.field, EMPTY_WORD, c)
            for i in w:
                img = cache.get(i)
                if img is None:
                    img = cache[i] = images.get(i, NcPoly.generator(self.gens, self.field, i))
                factor = factor * img
            result = result + factor
        return result

    def substitute_monomial(self, sigma: Mapping[int, int], scale: Mapping[int, Scalar]) -> "NcPoly":
        """Fast path for maps sending each generator to a scalar multiple of one generator."""
        mul, add = self.field.mul, self.field.add
        terms: dict[Word, Scalar] = {}
        for w, c in self.terms.items():
            for i in w:
                c = mul(c, scale.get(i, self.field.one))
            nw = tuple(sigma.get(i, i) for i in w)
            s = add(terms.get(nw, self.field.zero), c)
            if s == 0:
                terms.pop(nw, None)
            else:
                terms[nw] = s
        return NcPoly(self.gens, self.field, terms)

    def evaluate_commutative(self, point: tuple[Scalar, ...]) -> Scalar:
        """Value under the commuting substitution generator i -> point[i]."""
        mul, add = self.field.mul, self.field.add
        total = self.field.zero
        for w, c in self.terms.items():
            v = c
            for i in w:
                v = mul(v, point[i])
            total = add(total, v)
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "NcPoly(0)"
        parts = []
        for w in sorted(self.terms, key=lambda w: deglex_key(self.gens, w), reverse=True):
            word = "*".join(self.gens.names[i] for i in w) or "1"
            parts.append(f"{self.terms[w]}*{word}")
        return "NcPoly(" + " + ".join(parts) + ")"


def words_of_degree(gens: GeneratorSet, degree: int) -> Iterator[Word]:
    """All free-algebra words of the given weighted degree, in lex order."""
    if degree == 0:
        yield EMPTY_WORD
        return
    for i, d in enumerate(gens.degrees):
        if d <= degree:
            for tail in words_of_degree(gens, degree - d):
                yield (i,) + tail


def random_homogeneous(
    gens: GeneratorSet, field: Field, degree: int, num_terms: int, rng: random.Random
) -> NcPoly:
    """A random homogeneous polynomial with at most num_terms nonzero terms."""
    pool = list(words_of_degree(gens, degree))
    if not pool:
        return NcPoly.zero(gens, field)
    chosen = rng.sample(pool, min(num_terms, len(pool)))
    if field.is_finite:
        coeffs = [rng.randrange(1, field.characteristic) for _ in chosen]
    else:
        coeffs = [field.from_int(rng.randint(-9, 9) or 1) for _ in chosen]
    return NcPoly(gens, field, dict(zip(chosen, coeffs)))

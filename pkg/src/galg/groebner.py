"""Degree-truncated noncommutative Groebner machinery.

``build`` completes a presentation's relations into a rewriting system that
is confluent for all degrees up to the truncation bound D, by resolving
every overlap ambiguity whose overlap word has degree <= D.  Normal words
(words containing no rule's leading word) then form a basis of each graded
component A_d for d <= D, which yields Hilbert functions and a concrete
arena for exact linear algebra on ideals.

Ideal computations model the low-degree part of a true ideal: products are
formed only while the total degree stays inside the window, never truncated
mid-product.  Truncating instead would let high-degree garbage fold back
into low degrees and, for ideals with inhomogeneous generators, collapse
proper ideals to the whole algebra.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeExceedsTruncation, GeneratorSetMismatch, TruncationTooSmall
from .fields import Scalar
from .freealg import EMPTY_WORD, GeneratorSet, NcPoly, Word, deglex_key
from .linalg import Matrix, RrefBuilder, Subspace
from .presentations import Presentation

Terms = dict  # Word -> Scalar, no zero values


@dataclass(frozen=True)
class RewriteRule:
    """lead -> tail, with every tail word strictly deglex-smaller than lead."""

    lead: Word
    tail: NcPoly


def _contains_subword(big: Word, small: Word) -> bool:
    k = len(small)
    if k > len(big):
        return False
    return any(big[i : i + k] == small for i in range(len(big) - k + 1))


class ReductionSystem:
    """A completed, degree-truncated rewriting system for one presentation."""

    def __init__(self, presentation: Presentation, truncation_degree: int):
        self.presentation = presentation
        self.truncation_degree = truncation_degree
        self.field = presentation.field
        self.gens = presentation.gens
        self._rule_map: dict[Word, Terms] = {}
        self._lead_lengths: tuple[int, ...] = ()
        self._complete()
        self._enumerate_basis()
        self._mul_cache: dict[tuple[int, int, Word], Terms] = {}
        self._word_mul_cache: dict[tuple[Word, Word], Terms] = {}

    # ------------------------------------------------------------ completion

    def _reduce_terms(self, terms: Terms) -> Terms:
        """Full normal form of a term dict under the current rules."""
        field = self.field
        add, mul = field.add, field.mul
        rule_map = self._rule_map
        lengths = self._lead_lengths
        gens_deglex = lambda w: deglex_key(self.gens, w)  # noqa: E731
        work = dict(terms)
        out: Terms = {}
        while work:
            word = max(work, key=gens_deglex)
            coeff = work.pop(word)
            if coeff == 0:
                continue
            redex = None
            n = len(word)
            for i in range(n):
                for k in lengths:
                    if i + k > n:
                        continue
                    cand = word[i : i + k]
                    if cand in rule_map:
                        redex = (i, k, cand)
                        break
                if redex:
                    break
            if redex is None:
                c = add(out.get(word, field.zero), coeff)
                if c == 0:
                    out.pop(word, None)
                else:
                    out[word] = c
                continue
            i, k, lead = redex
            prefix, suffix = word[:i], word[i + k :]
            for tw, tc in rule_map[lead].items():
                w2 = prefix + tw + suffix
                c2 = add(work.get(w2, field.zero), mul(coeff, tc))
                if c2 == 0:
                    work.pop(w2, None)
                else:
                    work[w2] = c2
        return out

    def _refresh_lengths(self) -> None:
        self._lead_lengths = tuple(sorted({len(w) for w in self._rule_map}))

    def _complete(self) -> None:
        D = self.truncation_degree
        if D < 1:
            raise TruncationTooSmall("truncation degree must be >= 1")
        field = self.field
        wd = self.gens.word_degree
        heap: list[tuple[int, Word, int, Terms]] = []
        seq = 0
        for rel in self.presentation.relations:
            if rel.is_zero():
                continue
            deg = rel.degree()
            if deg > D:
                raise TruncationTooSmall(
                    f"relation of degree {deg} exceeds truncation degree {D}"
                )
            heapq.heappush(heap, (deg, rel.leading_word(), seq, dict(rel.terms)))
            seq += 1

        def push(terms: Terms) -> None:
            nonlocal seq
            if not terms:
                return
            lead = max(terms, key=lambda w: deglex_key(self.gens, w))
            heapq.heappush(heap, (wd(lead), lead, seq, terms))
            seq += 1

        while heap:
            _, _, _, terms = heapq.heappop(heap)
            nf = self._reduce_terms(terms)
            if not nf:
                continue
            lead = max(nf, key=lambda w: deglex_key(self.gens, w))
            inv = field.inv(nf[lead])
            tail = {w: field.neg(field.mul(inv, c)) for w, c in nf.items() if w != lead}
            # keep leading words an antichain: displaced rules go back to the queue
            for old in [w for w in self._rule_map if w != lead and _contains_subword(w, lead)]:
                old_tail = self._rule_map.pop(old)
                poly = {old: field.one}
                for tw, tc in old_tail.items():
                    poly[tw] = field.neg(tc)
                push(poly)
            self._rule_map[lead] = tail
            self._refresh_lengths()
            for other_lead, other_tail in list(self._rule_map.items()):
                for s_terms in self._overlap_spolys(lead, tail, other_lead, other_tail):
                    push(s_terms)
                if other_lead != lead:
                    for s_terms in self._overlap_spolys(other_lead, other_tail, lead, tail):
                        push(s_terms)

        # cosmetic pass: fully reduce tails (normal forms are unchanged)
        for lead in list(self._rule_map):
            self._rule_map[lead] = self._reduce_terms(self._rule_map[lead])
        self.rules = tuple(
            RewriteRule(lead, NcPoly(self.gens, field, self._rule_map[lead]))
            for lead in sorted(self._rule_map, key=lambda w: deglex_key(self.gens, w))
        )

    def _overlap_spolys(
        self, l1: Word, t1: Terms, l2: Word, t2: Terms
    ) -> Iterable[Terms]:
        """S-polynomials of suffix-prefix ambiguities l1 = a w, l2 = w c."""
        field = self.field
        wd = self.gens.word_degree
        D = self.truncation_degree
        add, mul = field.add, field.mul
        for k in range(1, min(len(l1), len(l2))):
            if l1[len(l1) - k :] != l2[:k]:
                continue
            a, c = l1[: len(l1) - k], l2[k:]
            if wd(a) + wd(l2) > D:
                continue
            s: Terms = {}
            for w, coeff in t1.items():
                key = w + c
                v = add(s.get(key, field.zero), coeff)
                if v == 0:
                    s.pop(key, None)
                else:
                    s[key] = v
            for w, coeff in t2.items():
                key = a + w
                v = add(s.get(key, field.zero), mul(field.neg(field.one), coeff))
                if v == 0:
                    s.pop(key, None)
                else:
                    s[key] = v
            yield s

    # ------------------------------------------------------------ normal words

    def _enumerate_basis(self) -> None:
        D = self.truncation_degree
        leads_by_len = {}
        for lead in self._rule_map:
            leads_by_len.setdefault(len(lead), set()).add(lead)
        basis: list[list[Word]] = [[EMPTY_WORD]]
        for d in range(1, D + 1):
            words = []
            for g, gdeg in enumerate(self.gens.degrees):
                rest = d - gdeg
                if rest < 0:
                    continue
                for u in basis[rest]:
                    w = u + (g,)
                    # u is normal, so only leads ending at the last letter matter
                    if any(
                        w[len(w) - k :] in leads
                        for k, leads in leads_by_len.items()
                        if k <= len(w)
                    ):
                        continue
                    words.append(w)
            words.sort()
            basis.append(words)
        self.basis = tuple(tuple(b) for b in basis)
        self._pos: dict[Word, tuple[int, int]] = {}
        for d, words in enumerate(self.basis):
            for i, w in enumerate(words):
                self._pos[w] = (d, i)
        # full-space layout: degree-D block first, degree-0 last, so a row's
        # first nonzero coordinate sits in its top-degree block
        offsets = [0] * (D + 1)
        acc = 0
        for d in range(D, -1, -1):
            offsets[d] = acc
            acc += len(self.basis[d])
        self.offsets = tuple(offsets)
        self.full_dim = acc
        coord_deg = [0] * acc
        coord_word: list[Word] = [EMPTY_WORD] * acc
        for d in range(D + 1):
            base = offsets[d]
            for i, w in enumerate(self.basis[d]):
                coord_deg[base + i] = d
                coord_word[base + i] = w
        self._coord_degree = tuple(coord_deg)
        self._coord_word = tuple(coord_word)

    # --------------------------------------------------------------- queries

    def hilbert(self) -> list[int]:
        """dim A_d for d = 0..D."""
        return [len(b) for b in self.basis]

    def normal_form(self, f: NcPoly) -> NcPoly:
        if f.gens != self.gens or f.field != self.field:
            raise GeneratorSetMismatch("polynomial lives over a different presentation")
        deg = f.degree()
        if deg is not None and deg > self.truncation_degree:
            raise DegreeExceedsTruncation(
                f"degree {deg} exceeds truncation degree {self.truncation_degree}"
            )
        return NcPoly(self.gens, self.field, self._reduce_terms(f.terms))

    def is_zero_in_truncation(self, f: NcPoly) -> bool:
        return self.normal_form(f).is_zero()

    def component_dim(self, d: int) -> int:
        return len(self.basis[d])

    def is_generated_in_degree_one(self) -> bool:
        """True when A_1 * A_{d-1} spans A_d for every 2 <= d <= D."""
        for d in range(2, self.truncation_degree + 1):
            target = len(self.basis[d])
            if target == 0:
                continue
            builder = RrefBuilder(self.field, target)
            done = False
            for u in self.basis[1]:
                for v in self.basis[d - 1]:
                    prod = self._word_mul(u, v)
                    builder.insert(self._component_vector_of_terms(prod, d))
                    if builder.dim == target:
                        done = True
                        break
                if done:
                    break
            if builder.dim < target:
                return False
        return True

    # ----------------------------------------------------------- vector views

    def to_vector(self, f: NcPoly) -> list[Scalar]:
        """Coordinates of nf(f) in the full degree-<=D layout."""
        nf = self.normal_form(f)
        vec = [self.field.zero] * self.full_dim
        for w, c in nf.terms.items():
            d, i = self._pos[w]
            vec[self.offsets[d] + i] = c
        return vec

    def from_vector(self, vec: Sequence[Scalar]) -> NcPoly:
        terms = {self._coord_word[i]: c for i, c in enumerate(vec) if c != 0}
        return NcPoly(self.gens, self.field, terms)

    def component_vector(self, f: NcPoly, d: int) -> list[Scalar]:
        """Coordinates of the degree-d part of nf(f) over the degree-d basis."""
        nf = self.normal_form(f)
        return self._component_vector_of_terms(nf.terms, d)

    def _component_vector_of_terms(self, terms: Terms, d: int) -> list[Scalar]:
        vec = [self.field.zero] * len(self.basis[d])
        wd = self.gens.word_degree
        for w, c in terms.items():
            if wd(w) == d:
                vec[self._pos[w][1]] = c
        return vec

    def element_from_component(self, d: int, vec: Sequence[Scalar]) -> NcPoly:
        terms = {self.basis[d][i]: c for i, c in enumerate(vec) if c != 0}
        return NcPoly(self.gens, self.field, terms)

    def word_str(self, w: Word) -> str:
        return "*".join(self.gens.names[i] for i in w) or "1"

    # ------------------------------------------------------- cached products

    def _gen_mul(self, word: Word, g: int, left: bool) -> Terms:
        key = (g, 0 if left else 1, word)
        cached = self._mul_cache.get(key)
        if cached is None:
            prod = (g,) + word if left else word + (g,)
            cached = self._mul_cache[key] = self._reduce_terms({prod: self.field.one})
        return cached

    def _word_mul(self, u: Word, v: Word) -> Terms:
        key = (u, v)
        cached = self._word_mul_cache.get(key)
        if cached is None:
            cached = self._word_mul_cache[key] = self._reduce_terms({u + v: self.field.one})
        return cached


def build(presentation: Presentation, truncation_degree: int) -> ReductionSystem:
    """Complete the presentation's relations up to the truncation degree."""
    return ReductionSystem(presentation, truncation_degree)


# ======================================================================
# subspaces of the truncated algebra
# ======================================================================


def full_subspace(rs: ReductionSystem) -> Subspace:
    return Subspace.full(rs.field, rs.full_dim)


def augmentation_subspace(rs: ReductionSystem) -> Subspace:
    """Span of all normal words of degree >= 1 (the unit sits in the last block)."""
    field, n = rs.field, rs.full_dim
    rows = []
    for i in range(n - len(rs.basis[0])):
        row = [field.zero] * n
        row[i] = field.one
        rows.append(tuple(row))
    return Subspace(field, n, tuple(rows))


def _row_topdeg(rs: ReductionSystem, pivot: int) -> int:
    return rs._coord_degree[pivot]


def _mul_row_by_generator(
    rs: ReductionSystem, row: Sequence[Scalar], g: int, left: bool
) -> list[Scalar]:
    field = rs.field
    add, mul = field.add, field.mul
    out = [field.zero] * rs.full_dim
    coord_word = rs._coord_word
    offsets = rs.offsets
    pos = rs._pos
    for i, c in enumerate(row):
        if c == 0:
            continue
        for w, pc in rs._gen_mul(coord_word[i], g, left).items():
            d, k = pos[w]
            j = offsets[d] + k
            out[j] = add(out[j], mul(c, pc))
    return out


def _close_under_generators(rs: ReductionSystem, builder: RrefBuilder) -> None:
    """Saturate a span under one-letter products that stay inside the window."""
    D = rs.truncation_degree
    degrees = rs.gens.degrees
    seen: set[tuple] = set()
    changed = True
    while changed:
        changed = False
        snapshot = [list(r) for r in builder.rows]
        pivots = list(builder.pivots)
        for row, pivot in zip(snapshot, pivots):
            top = _row_topdeg(rs, pivot)
            key = tuple(row)
            if key in seen:
                continue
            seen.add(key)
            for g, gdeg in enumerate(degrees):
                if top + gdeg > D:
                    continue
                for left in (True, False):
                    if builder.insert(_mul_row_by_generator(rs, row, g, left)):
                        changed = True


def ideal_closure(rs: ReductionSystem, gens: Iterable[NcPoly]) -> Subspace:
    """Low-degree model of the two-sided ideal generated by the given elements.

    The result is the span of all products (word)*(generator)*(word) whose
    total degree fits below the truncation bound, computed as a fixpoint of
    one-letter multiplications.  For homogeneous generators this agrees with
    the true ideal degreewise; for inhomogeneous ones it is a subspace of
    the true ideal that can undershoot only near the boundary.
    """
    builder = RrefBuilder(rs.field, rs.full_dim)
    for f in gens:
        builder.insert(rs.to_vector(f))
    _close_under_generators(rs, builder)
    return builder.subspace()


def ideal_product(rs: ReductionSystem, left: Subspace, right: Subspace) -> Subspace:
    """Model of the product of two ideals given by their closure subspaces."""
    field = rs.field
    add, mul = field.add, field.mul
    D = rs.truncation_degree
    builder = RrefBuilder(field, rs.full_dim)
    right_rows = []
    for row in right.rows:
        pivot = next(j for j, x in enumerate(row) if x != 0)
        right_rows.append((row, _row_topdeg(rs, pivot)))
    coord_word = rs._coord_word
    offsets = rs.offsets
    pos = rs._pos
    for u in left.rows:
        pu = next(j for j, x in enumerate(u) if x != 0)
        du = _row_topdeg(rs, pu)
        for v, dv in right_rows:
            if du + dv > D:
                continue
            out = [field.zero] * rs.full_dim
            for i, ci in enumerate(u):
                if ci == 0:
                    continue
                wi = coord_word[i]
                for j, cj in enumerate(v):
                    if cj == 0:
                        continue
                    for w, pc in rs._word_mul(wi, coord_word[j]).items():
                        d, k = pos[w]
                        t = offsets[d] + k
                        out[t] = add(out[t], mul(mul(ci, cj), pc))
            builder.insert(out)
    _close_under_generators(rs, builder)
    return builder.subspace()


def component_slice(rs: ReductionSystem, space: Subspace, d: int) -> Subspace:
    """The homogeneous degree-d part of a subspace of the full window."""
    field = rs.field
    hd = len(rs.basis[d])
    lo = rs.offsets[d]
    hi = lo + hd
    rows_d = []
    for row in space.rows:
        pivot = next(j for j, x in enumerate(row) if x != 0)
        if lo <= pivot < hi:
            rows_d.append(row)
    if not rows_d:
        return Subspace.zero(field, hd)
    # combinations of these rows whose coordinates outside block d vanish;
    # entries left of the pivot block are already zero in RREF rows
    tails = [list(r[hi:]) for r in rows_d]
    if not tails[0]:
        coeff_space = Subspace.full(field, len(rows_d))
    else:
        coeff_space = Matrix(field, [list(col) for col in zip(*tails)], len(rows_d)).kernel_basis()
    vectors = []
    for coeffs in coeff_space.rows:
        vec = [field.zero] * hd
        for c, row in zip(coeffs, rows_d):
            if c == 0:
                continue
            for j in range(hd):
                x = row[lo + j]
                if x != 0:
                    vec[j] = field.add(vec[j], field.mul(c, x))
        vectors.append(vec)
    return Subspace.from_vectors(field, hd, vectors)


class DegreeSlicedSubspace:
    """A subspace of the truncation window together with its graded slices."""

    def __init__(self, rs: ReductionSystem, total: Subspace):
        self.rs = rs
        self.total = total
        self._slices: dict[int, Subspace] = {}

    @classmethod
    def full(cls, rs: ReductionSystem) -> "DegreeSlicedSubspace":
        return cls(rs, full_subspace(rs))

    def slice(self, d: int) -> Subspace:
        if d not in self._slices:
            self._slices[d] = component_slice(self.rs, self.total, d)
        return self._slices[d]

    def dims(self) -> list[int]:
        return [self.slice(d).dim for d in range(self.rs.truncation_degree + 1)]

    @property
    def is_full(self) -> bool:
        return self.total.is_full()

    def equals_degreewise(self, other: "DegreeSlicedSubspace", up_to: int) -> bool:
        return all(self.slice(d) == other.slice(d) for d in range(up_to + 1))

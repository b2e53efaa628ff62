import pytest
from hypothesis import given, settings, strategies as st

from galg.errors import GeneratorSetMismatch
from galg.fields import GF, QQ
from galg.freealg import (
    NcPoly,
    deglex_compare,
    deglex_key,
    generators,
    words_of_degree,
)

G2 = generators(["x1", "x2"])
F = GF(7)


def gen(i):
    return NcPoly.generator(G2, F, i)


def test_product_of_generators_is_concatenation():
    assert dict((gen(0) * gen(1)).terms) == {(0, 1): 1}


def test_commutator_definition():
    c = gen(1).commutator(gen(0))
    assert dict(c.terms) == {(1, 0): 1, (0, 1): 6}


def test_commutator_antisymmetry():
    f = gen(0) * gen(1) + gen(1)
    assert f.commutator(f).is_zero()


def test_deglex_examples():
    assert deglex_compare(G2, (0,), (0, 1)) == -1  # degree first
    assert deglex_compare(G2, (0, 1), (1, 0)) == -1  # then lex on letters
    assert deglex_compare(G2, (1, 0), (1, 0)) == 0


def test_homogeneous_components():
    f = gen(0) + gen(0) * gen(1)
    assert dict(f.homogeneous_component(1).terms) == {(0,): 1}
    assert dict(f.homogeneous_component(2).terms) == {(0, 1): 1}
    zero = NcPoly.zero(G2, F)
    assert zero.homogeneous_component(3).is_zero()


def test_component_sum_reconstructs():
    f = gen(0) * gen(0) + gen(1) + NcPoly.unit(G2, F).scalar_mul(3)
    total = NcPoly.zero(G2, F)
    for d in sorted(f.degrees()):
        total = total + f.homogeneous_component(d)
    assert total == f


def test_generator_set_mismatch():
    other = NcPoly.generator(generators(["y"]), F, 0)
    with pytest.raises(GeneratorSetMismatch):
        gen(0) + other
    with pytest.raises(GeneratorSetMismatch):
        gen(0) * NcPoly.generator(G2, GF(5), 0)


def test_weighted_degrees():
    g = generators(["x", "y"], [1, 2])
    f = NcPoly.monomial(g, QQ, (0, 1, 0))
    assert f.degree() == 4
    assert set(words_of_degree(g, 2)) == {(0, 0), (1,)}


def test_substitute_monomial_matches_general():
    f = gen(0) * gen(1) - gen(1).scalar_mul(2)
    sigma = {0: 1, 1: 0}
    scale = {0: 3, 1: 5}
    fast = f.substitute_monomial(sigma, scale)
    images = {0: gen(1).scalar_mul(3), 1: gen(0).scalar_mul(5)}
    assert fast == f.substitute(images)


def test_evaluate_commutative():
    f = gen(1) * gen(0) - gen(0) * gen(1).scalar_mul(3)
    # commuting substitution: a*b - 3*a*b = -2ab
    assert f.evaluate_commutative((2, 3)) == F.mul(F.from_int(-2), 6)


words = st.lists(st.integers(min_value=0, max_value=1), min_size=0, max_size=4).map(tuple)
coeffs = st.integers(min_value=0, max_value=6)
polys = st.dictionaries(words, coeffs, max_size=4).map(lambda t: NcPoly(G2, F, t))


@settings(max_examples=60)
@given(polys, polys, polys)
def test_mul_associative_and_distributive(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60)
@given(words, words, words)
def test_deglex_multiplication_compatible(u, v, w):
    if deglex_key(G2, u) < deglex_key(G2, v):
        assert deglex_key(G2, w + u) < deglex_key(G2, w + v)
        assert deglex_key(G2, u + w) < deglex_key(G2, v + w)


@settings(max_examples=60)
@given(polys)
def test_components_partition(f):
    parts = [f.homogeneous_component(d) for d in sorted(f.degrees())]
    total = NcPoly.zero(G2, F)
    for p in parts:
        assert p.is_homogeneous()
        total = total + p
    assert total == f

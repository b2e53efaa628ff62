import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from galg.errors import AmbientMismatch
from galg.fields import GF, QQ
from galg.linalg import Matrix, RrefBuilder, Subspace, intersect_many

F5 = GF(5)


def test_rref_identity():
    m = Matrix(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    reduced, rank = m.rref()
    assert rank == 3
    assert reduced.rows == m.rows


def test_rref_zero():
    m = Matrix(QQ, [[0, 0], [0, 0]])
    _, rank = m.rref()
    assert rank == 0


def test_rref_dependent_rows():
    m = Matrix(QQ, [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
    reduced, rank = m.rref()
    assert rank == 1
    assert reduced.rows[0] == [Fraction(1), Fraction(2)]


def test_rref_idempotent():
    rng = random.Random(11)
    for _ in range(20):
        rows = [[rng.randrange(5) for _ in range(4)] for _ in range(3)]
        reduced, rank = Matrix(F5, rows).rref()
        again, rank2 = reduced.rref()
        assert rank == rank2
        assert again.rows == [r for r in reduced.rows]


def test_kernel_identity_and_zero():
    assert Matrix(QQ, [[1, 0], [0, 1]]).kernel_basis().dim == 0
    k = Matrix(QQ, [[0, 0, 0], [0, 0, 0]]).kernel_basis()
    assert k.dim == 3 and k.is_full()


def test_kernel_gf5_line():
    k = Matrix(F5, [[1, 1]]).kernel_basis()
    assert k.rows == ((1, 4),)


def test_subspace_examples():
    e1 = Subspace.from_vectors(QQ, 3, [[1, 0, 0]])
    e2 = Subspace.from_vectors(QQ, 3, [[0, 1, 0]])
    e12 = Subspace.from_vectors(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    e23 = Subspace.from_vectors(QQ, 3, [[0, 1, 0], [0, 0, 1]])
    assert e1.intersect(e1) == e1
    assert e1.intersect(e2).is_zero()
    assert e12.intersect(e23) == e2


def test_ambient_mismatch():
    a = Subspace.from_vectors(QQ, 2, [[1, 0]])
    b = Subspace.from_vectors(QQ, 3, [[1, 0, 0]])
    with pytest.raises(AmbientMismatch):
        a + b
    with pytest.raises(AmbientMismatch):
        a.intersect(Subspace.from_vectors(GF(5), 2, [[1, 0]]))


def _random_subspace(rng, field, ambient, max_rows):
    rows = [[rng.randrange(field.p) for _ in range(ambient)] for _ in range(rng.randint(0, max_rows))]
    return Subspace.from_vectors(field, ambient, rows)


def test_modular_dimension_formula():
    rng = random.Random(23)
    for _ in range(40):
        u = _random_subspace(rng, F5, 6, 4)
        v = _random_subspace(rng, F5, 6, 4)
        assert u.dim + v.dim == (u + v).dim + u.intersect(v).dim


def test_membership_agrees_with_rank():
    rng = random.Random(5)
    for _ in range(40):
        u = _random_subspace(rng, F5, 5, 3)
        vec = [rng.randrange(5) for _ in range(5)]
        grows = Subspace.from_vectors(F5, 5, list(u.rows) + [vec]).dim > u.dim
        assert u.contains(vec) == (not grows)


def test_zassenhaus_agrees_with_annihilator_route():
    rng = random.Random(7)
    for _ in range(30):
        u = _random_subspace(rng, F5, 6, 4)
        v = _random_subspace(rng, F5, 6, 4)
        assert u.intersect(v) == intersect_many([u, v])


def test_annihilator_involution():
    rng = random.Random(9)
    for _ in range(20):
        u = _random_subspace(rng, F5, 5, 3)
        assert u.annihilator().annihilator() == u
        assert u.annihilator().dim == 5 - u.dim


def test_builder_full_rref_invariants():
    rng = random.Random(31)
    for _ in range(20):
        b = RrefBuilder(F5, 6)
        for _ in range(5):
            b.insert([rng.randrange(5) for _ in range(6)])
        pivots = b.pivots
        assert pivots == sorted(pivots)
        for i, row in enumerate(b.rows):
            p = pivots[i]
            assert row[p] == 1
            assert all(x == 0 for x in row[:p])
            for j, q in enumerate(pivots):
                if j != i:
                    assert row[q] == 0


def test_sum_and_equality_canonical():
    u = Subspace.from_vectors(QQ, 3, [[1, 1, 0]])
    v = Subspace.from_vectors(QQ, 3, [[2, 2, 0]])
    assert u == v
    w = u + Subspace.from_vectors(QQ, 3, [[0, 0, 3]])
    assert w == Subspace.from_vectors(QQ, 3, [[1, 1, 0], [0, 0, 1]])

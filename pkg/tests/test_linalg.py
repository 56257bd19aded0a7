"""Exact linear core: row reduction, relation morphisms, solving."""

import random
from fractions import Fraction

import pytest

from nchull.errors import (
    DimensionMismatchError,
    FieldMismatchError,
    InconsistentSystemError,
    UnmaterializedDegreeError,
)
from nchull.field import GF, QQ
from nchull.linalg import (
    FormalVector,
    Matrix,
    check_exactness,
    rank,
    relation_morphism,
    rref,
    solve_linear,
)

from oracles import all_gf2_matrices_2x2, naive_rref_gf, naive_rref_q


def dense(m):
    return [[m.entry(r, c).value for c in range(m.cols)] for r in range(m.rows)]


def test_scalar_field_mixing_rejected():
    with pytest.raises(FieldMismatchError):
        QQ.one + GF(5).one  # noqa: B018


def test_rref_identity():
    m = Matrix.identity(QQ, 2)
    reduced, pivots = rref(m)
    assert pivots == (0, 1)
    assert dense(reduced) == [[1, 0], [0, 1]]


def test_rref_duplicate_row():
    m = Matrix.from_rows(QQ, [[1, 1], [2, 2]])
    reduced, pivots = rref(m)
    assert pivots == (0,)
    assert dense(reduced) == [[1, 1], [0, 0]]


def test_rref_gf2_swap():
    m = Matrix.from_rows(GF(2), [[0, 1], [1, 0]])
    reduced, pivots = rref(m)
    assert pivots == (0, 1)
    assert dense(reduced) == [[1, 0], [0, 1]]


def test_rref_all_gf2_2x2_against_naive_oracle():
    f2 = GF(2)
    for rows in all_gf2_matrices_2x2():
        reduced, pivots = rref(Matrix.from_rows(f2, rows))
        expected, expected_pivots = naive_rref_gf(rows, 2)
        assert dense(reduced) == expected
        assert list(pivots) == expected_pivots


def test_rref_idempotent_random():
    rng = random.Random(7)
    for _ in range(40):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)]
        m = Matrix.from_rows(QQ, rows)
        once, pivots = rref(m)
        twice, pivots2 = rref(once)
        assert dense(once) == dense(twice)
        assert pivots == pivots2
        expected, expected_pivots = naive_rref_q(rows)
        assert dense(once) == expected


def test_solve_identity():
    a = Matrix.identity(QQ, 3)
    target = [QQ.scalar(2), QQ.scalar(-1), QQ.scalar(5)]
    assert [s.value for s in solve_linear(a, target)] == [2, -1, 5]


def test_solve_free_variable_tiebreak():
    a = Matrix.from_rows(QQ, [[1, 1]])
    sol = solve_linear(a, [QQ.one])
    assert [s.value for s in sol] == [1, 0]


def test_solve_inconsistent():
    a = Matrix.from_rows(QQ, [[0]])
    assert solve_linear(a, [QQ.one]) is None


def test_solve_exactness_random():
    rng = random.Random(11)
    for _ in range(30):
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(4)] for _ in range(3)]
        a = Matrix.from_rows(QQ, rows)
        x = [Fraction(rng.randint(-2, 2)) for _ in range(4)]
        target = a.matvec(x)
        sol = solve_linear(a, target)
        assert sol is not None
        assert a.matvec(list(sol)) == target


def test_relation_morphism_trivial_quotient():
    rel = relation_morphism(3, Matrix.zero(QQ, 0, 3))
    assert rel.r == 0
    assert rel.fgens == ()
    assert rel.dVW == Matrix.zero(QQ, 3, 3)


def test_relation_morphism_single_relation():
    # v1 + v2 - v3 = 0 over a 3-dimensional space
    rel = relation_morphism(3, Matrix.from_rows(QQ, [[1, 1, -1]]))
    assert rel.r == 1
    assert rel.beta[(0, 1)].value == 1
    assert rel.beta[(0, 2)].value == -1
    # d(w1) = w1 - w2 + w3, d(w2) = d(w3) = 0
    assert dense(rel.dVW) == [[1, 0, 0], [-1, 0, 0], [1, 0, 0]]
    assert [s.value for s in rel.fgens[0]] == [1, 1, -1]


def test_relation_morphism_two_relations():
    rel = relation_morphism(4, Matrix.from_rows(QQ, [[1, 0, -1, 0], [0, 1, 0, -1]]))
    assert rel.r == 2
    fmat = Matrix.from_rows(QQ, [list(f) for f in rel.fgens])
    assert rank(fmat) == 2


def test_relation_morphism_rejects_wide_matrix():
    with pytest.raises(DimensionMismatchError):
        relation_morphism(2, Matrix.from_rows(QQ, [[1, 0, 0]]))


def test_relation_morphism_unit_guard():
    with pytest.raises(InconsistentSystemError):
        relation_morphism(2, Matrix.from_rows(QQ, [[1, 0]]), unit_column=0)


def test_exactness_single_relation():
    rel = relation_morphism(3, Matrix.from_rows(QQ, [[1, 1, -1]]))
    # kappa: w1 -> v1, w2 -> v2, w3 -> v1 + v2
    kappa = Matrix.from_rows(QQ, [[1, 0, 1], [0, 1, 1]])
    assert check_exactness(rel, kappa)


def test_exactness_fails_for_zero_ideal():
    rel = relation_morphism(3, Matrix.zero(QQ, 0, 3))
    kappa = Matrix.from_rows(QQ, [[1, 0, 1], [0, 1, 1]])  # not injective
    assert not check_exactness(rel, kappa)


def test_exactness_identity_quotient():
    rel = relation_morphism(2, Matrix.zero(QQ, 0, 2))
    assert check_exactness(rel, Matrix.identity(QQ, 2))


def test_exactness_dimension_guard():
    rel = relation_morphism(3, Matrix.from_rows(QQ, [[1, 1, -1]]))
    with pytest.raises(DimensionMismatchError):
        check_exactness(rel, Matrix.identity(QQ, 2))


def random_shaped_relations(rng, field, n, d):
    """Relations in the quotient shape: alpha-part on the surviving prefix,
    coefficient -1 on one eliminated vector each."""
    rows = []
    for j in range(n - d):
        row = [rng.randint(-3, 3) for _ in range(d)] + [0] * (n - d)
        row[d + j] = -1
        rows.append(row)
    return Matrix.from_rows(field, rows, cols=n)


def kappa_for(rng_rows, field, n, d):
    """The quotient map determined by the same relations."""
    entries = {}
    for i in range(d):
        entries[(i, i)] = field.one
    for j, row in enumerate(rng_rows):
        for i in range(d):
            v = field.scalar(row[i])
            if v:
                entries[(i, d + j)] = v
    return Matrix(d, n, field, entries)


def test_relation_morphism_exactness_randomized():
    rng = random.Random(2024)
    for field in (QQ, GF(5)):
        for _ in range(25):
            n = rng.randint(2, 8)
            d = rng.randint(1, n)
            raw = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(n - d)]
            rows = []
            for j, alpha in enumerate(raw):
                row = list(alpha) + [0] * (n - d)
                row[d + j] = -1
                rows.append(row)
            rel = relation_morphism(n, Matrix.from_rows(field, rows, cols=n))
            assert rel.r == n - d
            assert check_exactness(rel, kappa_for(raw, field, n, d))


def test_formal_vector_layers_independent():
    v = FormalVector({1: {"a": QQ.one}}, bound_hint=2)
    w = v.with_layer(2, {"b": QQ.scalar(3)})
    assert v.layer(2) == {}
    assert w.layer(1) == {"a": QQ.one}
    assert w.layer(2) == {"b": QQ.scalar(3)}


def test_formal_vector_beyond_bound_raises():
    v = FormalVector({0: {"a": QQ.one}}, bound_hint=1)
    with pytest.raises(UnmaterializedDegreeError):
        v.layer(5)
    assert v.extended(5).layer(5) == {}

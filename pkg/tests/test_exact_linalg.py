from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from descent_quiver.exact_linalg import (
    NEGATIVE,
    POSITIVE,
    ZERO,
    GoldenInt,
    RowSpace,
    SparseMatrix,
    golden_sign,
)

ints = st.integers(min_value=-50, max_value=50)
goldens = st.builds(GoldenInt, ints, ints)
rationals = st.fractions(min_value=-30, max_value=30, max_denominator=30)


def test_golden_sign_cases():
    assert golden_sign(GoldenInt(0, 0)) == ZERO
    assert golden_sign(GoldenInt(1, 0)) == POSITIVE
    # -2 + phi is about -0.382
    assert golden_sign(GoldenInt(-2, 1)) == NEGATIVE
    # -8 + 5 phi > 0 exactly because phi > 8/5
    assert golden_sign(GoldenInt(-8, 5)) == POSITIVE
    # 5 - 3 phi > 0: 5 > 3 phi iff 7 > 3 sqrt5 iff 49 > 45
    assert golden_sign(GoldenInt(5, -3)) == POSITIVE
    assert golden_sign(GoldenInt(-5, 3)) == NEGATIVE


@given(goldens)
def test_golden_sign_antisymmetric(x):
    assert golden_sign(x) == -golden_sign(-x)


@given(goldens)
@settings(max_examples=50)
def test_golden_sign_matches_float(x):
    import math

    value = x.a + x.b * (1 + math.sqrt(5)) / 2
    if abs(value) > 1e-6:
        assert golden_sign(x) == (POSITIVE if value > 0 else NEGATIVE)


@given(goldens, goldens, goldens)
@settings(max_examples=100)
def test_golden_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + (-x) == GoldenInt(0, 0)


def test_golden_defining_identity():
    phi = GoldenInt(0, 1)
    assert phi * phi == phi + 1
    assert GoldenInt(2, 3) * GoldenInt(-1, 4) == GoldenInt(2 * -1 + 3 * 4, 2 * 4 + 3 * -1 + 3 * 4)


def test_golden_comparisons():
    assert GoldenInt(0, 1) > 1  # phi > 1
    assert GoldenInt(0, 1) < 2  # phi < 2
    assert GoldenInt(1, 1) == GoldenInt(1, 1)


@given(rationals, rationals, rationals)
@settings(max_examples=60)
def test_rational_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    if a:
        assert a * (1 / a) == 1


# -- matrices -------------------------------------------------------------


def dense_gauss(rows):
    """Independent dense Gaussian elimination, for cross-checking."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def test_rref_identity():
    m = SparseMatrix.from_rows([[1, 0], [0, 1]])
    red, pivots = m.rref()
    assert red == m
    assert pivots == (0, 1)


def test_rref_rank_one():
    m = SparseMatrix.from_rows([[1, 2], [2, 4]])
    red, pivots = m.rref()
    assert red.to_rows() == [[1, 2], [0, 0]]
    assert pivots == (0,)


def test_rref_random_vs_dense_oracle():
    rng = random.Random(7)
    for _ in range(12):
        rows = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(10)]
            for _ in range(10)
        ]
        m = SparseMatrix.from_rows(rows)
        red, pivots = m.rref()
        want, want_pivots = dense_gauss(rows)
        assert red.to_rows() == want
        assert list(pivots) == want_pivots
        # kernel vectors really lie in the kernel
        kernel = m.kernel_basis()
        assert len(kernel) == 10 - len(pivots)
        for vec in kernel:
            assert all(v == 0 for v in m.matvec(vec))


def test_rref_idempotent():
    rng = random.Random(3)
    rows = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(4)]
    m = SparseMatrix.from_rows(rows)
    red, _ = m.rref()
    again, _ = red.rref()
    assert red == again


def test_kernel_basics():
    assert SparseMatrix.from_rows([[1, 0], [0, 1]]).kernel_basis() == []
    zero = SparseMatrix(3, 3, {})
    assert len(zero.kernel_basis()) == 3
    (vec,) = SparseMatrix.from_rows([[1, 1]]).kernel_basis()
    assert vec[0] == -vec[1] != 0


def test_rank_nullity():
    rng = random.Random(11)
    for _ in range(10):
        rows = [[rng.randint(-2, 2) for _ in range(7)] for _ in range(5)]
        m = SparseMatrix.from_rows(rows)
        assert m.rank() + len(m.kernel_basis()) == 7


def test_row_space_coords():
    rs = RowSpace()
    v1 = {0: Fraction(1), 1: Fraction(2)}
    v2 = {1: Fraction(1)}
    assert rs.insert(v1, "a")
    assert rs.insert(v2, "b")
    assert not rs.insert({0: Fraction(2), 1: Fraction(5)}, "c")
    coords = rs.coords({0: Fraction(3), 1: Fraction(7)})
    assert coords == {"a": Fraction(3), "b": Fraction(1)}
    assert rs.coords({2: Fraction(1)}) is None
    assert rs.dim == 2

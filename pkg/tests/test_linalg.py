import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from growthcodes import (
    FieldMatrix,
    FieldVector,
    LengthMismatchError,
    NotSquareError,
    ShapeMismatchError,
    determinant,
    hamming_distance,
    make_field,
    rank,
    stack_blocks,
    weight,
)
from growthcodes.seeds import build_seed_matrices

F2 = make_field(2)
F3 = make_field(3)
F5 = make_field(5)
F7 = make_field(7)


def test_weight_examples():
    assert weight(FieldVector(F3, [0] * 9)) == 0
    assert weight(FieldVector(F3, [0, 1, -1, 1])) == 3
    a3 = build_seed_matrices(F3, 3).a
    assert all(weight(a3.column(j)) == 5 for j in range(6))


def test_hamming_distance_examples():
    x = FieldVector(F2, [1, 0, 1])
    assert hamming_distance(x, x) == 0
    assert hamming_distance(FieldVector(F2, [1, 1, 0, 0]), FieldVector(F2, [0, 0, 1, 1])) == 4
    assert hamming_distance(FieldVector(F3, [1, -1]), FieldVector(F3, [-1, 1])) == 2


def test_hamming_distance_length_mismatch():
    with pytest.raises(LengthMismatchError):
        hamming_distance(FieldVector(F2, [1]), FieldVector(F2, [1, 0]))


def test_determinant_examples():
    assert int(determinant(FieldMatrix.identity(F7, 4))) == 1
    assert int(determinant(build_seed_matrices(F5, 1).a)) == 1
    assert int(determinant(build_seed_matrices(F2, 2).a)) == 1


def test_determinant_requires_square():
    with pytest.raises(NotSquareError):
        determinant(FieldMatrix.zeros(F2, 2, 3))


def test_determinant_singular():
    assert int(determinant(FieldMatrix(F5, [[1, 2], [2, 4]]))) == 0


def test_rank_examples():
    assert rank(FieldMatrix.zeros(F3, 3, 3)) == 0
    assert rank(FieldMatrix.identity(F3, 5)) == 5
    assert rank(build_seed_matrices(F3, 2).a) == 4


def test_stack_blocks_identity():
    i2 = FieldMatrix.identity(F5, 2)
    z = FieldMatrix.zeros(F5, 2, 2)
    assert stack_blocks([[i2, z], [z, i2]]) == FieldMatrix.identity(F5, 4)


def test_stack_blocks_seed_recursion():
    seeds1 = build_seed_matrices(F3, 1)
    seeds2 = build_seed_matrices(F3, 2)
    assembled = stack_blocks([[seeds1.a, seeds1.b], [-(seeds1.b.transpose()), seeds1.a]])
    assert assembled == seeds2.a


def test_stack_blocks_empty_block():
    b1 = build_seed_matrices(F3, 1).b
    empty = FieldMatrix.zeros(F3, 2, 0)
    assert stack_blocks([[empty, b1]]) == b1


def test_stack_blocks_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        stack_blocks([[FieldMatrix.zeros(F2, 2, 2), FieldMatrix.zeros(F2, 3, 2)]])


def test_matrix_product_checks_shapes():
    with pytest.raises(ShapeMismatchError):
        FieldMatrix.zeros(F2, 2, 3) @ FieldMatrix.zeros(F2, 2, 3)


def test_vectors_are_immutable():
    v = FieldVector(F3, [1, 2])
    with pytest.raises((ValueError, AttributeError)):
        v.entries[0] = 0


vec_entries = st.lists(st.integers(-20, 20), min_size=1, max_size=12)


@given(p=st.sampled_from([2, 3, 7]), xs=vec_entries, ys=vec_entries, zs=vec_entries)
def test_distance_is_weight_of_difference_and_triangle(p, xs, ys, zs):
    m = min(len(xs), len(ys), len(zs))
    field = make_field(p)
    x, y, z = (FieldVector(field, v[:m]) for v in (xs, ys, zs))
    assert hamming_distance(x, y) == weight(x - y)
    assert hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z)


@settings(max_examples=40)
@given(
    p=st.sampled_from([2, 3, 5]),
    seed=st.integers(0, 10**6),
    size=st.integers(1, 5),
)
def test_determinant_multiplicative(p, seed, size):
    rng = np.random.default_rng(seed)
    field = make_field(p)
    a = FieldMatrix(field, rng.integers(0, p, size=(size, size)))
    b = FieldMatrix(field, rng.integers(0, p, size=(size, size)))
    assert determinant(a @ b) == determinant(a) * determinant(b)


@settings(max_examples=40)
@given(
    p=st.sampled_from([2, 3, 5]),
    seed=st.integers(0, 10**6),
    m=st.integers(1, 6),
    n=st.integers(1, 6),
)
def test_rank_equals_rank_of_transpose(p, seed, m, n):
    rng = np.random.default_rng(seed)
    field = make_field(p)
    mat = FieldMatrix(field, rng.integers(0, p, size=(m, n)))
    assert rank(mat) == rank(mat.transpose())

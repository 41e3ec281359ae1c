import pytest

from towercalc.matrix import Matrix, as_matrix

from conftest import det_bareiss


def test_shape_validation():
    with pytest.raises(ValueError):
        Matrix(2, 2, ((1, 2),))
    with pytest.raises(ValueError):
        Matrix(1, 2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        Matrix(-1, 0, ())


def test_zero_dimensional_shapes():
    z = Matrix.zero(0, 3)
    assert z.shape == (0, 3)
    assert z.transpose().shape == (3, 0)
    tall = Matrix.zero(3, 0)
    assert (tall @ z).shape == (3, 3)
    assert (z @ tall).shape == (0, 0)


def test_from_rows_requires_cols_for_empty():
    with pytest.raises(ValueError):
        Matrix.from_rows([])
    assert Matrix.from_rows([], cols=4).shape == (0, 4)


def test_matmul_matches_hand_value():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[5, 6], [7, 8]])
    assert (a @ b).to_lists() == [[19, 22], [43, 50]]


def test_block_assembly():
    a = Matrix.from_rows([[1]])
    b = Matrix.from_rows([[2, 3]])
    c = Matrix.zero(2, 1)
    d = Matrix.from_rows([[4, 5], [6, 7]])
    blk = Matrix.block([[a, b], [c, d]])
    assert blk.to_lists() == [[1, 2, 3], [0, 4, 5], [0, 6, 7]]
    with pytest.raises(ValueError):
        Matrix.block([[a, c]])


def test_unimodular_inverse_roundtrip():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    inv = m.unimodular_inverse()
    assert (m @ inv) == Matrix.identity(2)
    assert (inv @ m) == Matrix.identity(2)
    assert det_bareiss(m.to_lists()) == 1


def test_unimodular_inverse_rejects_nonunimodular():
    with pytest.raises(ValueError):
        Matrix.from_rows([[2, 0], [0, 1]]).unimodular_inverse()
    with pytest.raises(ValueError):
        Matrix.from_rows([[0, 0], [0, 0]]).unimodular_inverse()


def test_apply_and_take():
    m = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.apply([1, 0, -1]) == (-2, -2)
    assert m.take_rows([1]).to_lists() == [[4, 5, 6]]
    assert m.take_columns([0, 2]).to_lists() == [[1, 3], [4, 6]]


def test_as_matrix_coercion_rejects_floats():
    with pytest.raises(TypeError):
        as_matrix([[1.5]])

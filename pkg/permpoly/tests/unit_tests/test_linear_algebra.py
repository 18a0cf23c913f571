import numpy as np

from permpoly.fields.linear_algebra import row_reduce, solve_mod_p


def test_unique_solution():
    matrix = np.array([[1, 2], [2, 2]])
    particular, kernel = solve_mod_p(matrix, np.array([1, 0]), 3)
    assert kernel == []
    assert np.array_equal(matrix @ particular % 3, [1, 0])


def test_kernel_and_particular_solution():
    matrix = np.array([[1, 1], [1, 1]])
    particular, kernel = solve_mod_p(matrix, np.array([1, 1]), 3)
    assert np.array_equal(matrix @ particular % 3, [1, 1])
    assert len(kernel) == 1
    assert np.array_equal(kernel[0], [2, 1])
    assert np.array_equal(matrix @ kernel[0] % 3, [0, 0])


def test_inconsistent_system():
    particular, kernel = solve_mod_p(np.array([[1, 1], [1, 1]]), np.array([1, 2]), 3)
    assert particular is None
    assert len(kernel) == 1


def test_row_reduce_pivots():
    reduced, pivots = row_reduce(np.array([[0, 2, 4], [0, 1, 3]]), 5)
    assert pivots == [1, 2]
    assert np.array_equal(reduced, [[0, 1, 0], [0, 0, 1]])

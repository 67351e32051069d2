"""
betti-utilities - tests/homology/test_field_linear_algebra.py

Licensed under the MIT License.
"""
import numpy as np
import pytest

from betti_utils.homology.field_linear_algebra import FieldSpec, rank_mod_p


def test_field_spec_default():
    assert FieldSpec().p == 32003


@pytest.mark.parametrize("p", [1, 4, 32004, 2 ** 31 + 11, True, 3.0])
def test_field_spec_rejects(p):
    with pytest.raises(ValueError):
        FieldSpec(p)


def test_rank_small_cases():
    assert rank_mod_p(np.eye(4, dtype=np.int64), 7) == 4
    assert rank_mod_p(np.zeros((3, 2), dtype=np.int64), 7) == 0
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 7) == 0
    assert rank_mod_p(np.zeros((3, 0), dtype=np.int64), 7) == 0


def test_rank_depends_on_characteristic():
    matrix = np.array([[1, 1], [1, -1]])
    assert rank_mod_p(matrix, 2) == 1
    assert rank_mod_p(matrix, 3) == 2


def test_rank_rejects_vectors():
    with pytest.raises(ValueError):
        rank_mod_p(np.array([1, 2, 3]), 5)


def test_rank_matches_rational_rank_on_small_sign_matrices():
    # minors of a 6x6 sign matrix are bounded by 6^3, far below 32003
    rng = np.random.default_rng(2024)
    for _ in range(200):
        rows, columns = rng.integers(1, 7, size=2)
        matrix = rng.integers(-1, 2, size=(rows, columns))
        assert rank_mod_p(matrix, 32003) == np.linalg.matrix_rank(matrix.astype(float))

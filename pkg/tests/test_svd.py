# -*- coding: utf-8 -*-
"""foodsubs/svd.py Fixtures & Tests

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

import logging

import numpy as np
import pytest
import scipy.sparse
from hypothesis import given
from hypothesis import strategies as st

from foodsubs.exceptions import PreconditionError
from foodsubs.ppmi import build_ppmi_matrix
from foodsubs.svd import (
    SvdModel,
    choose_algorithm,
    dot_similarity,
    truncated_svd,
)


SOLVER_TOLERANCES = [("exact", 1e-6), ("randomized", 1e-2)]


# Helper Functions

def random_sparse(rows, cols, density=0.2, seed=7):
    return scipy.sparse.random(rows, cols, density=density, format="csr",
                               random_state=np.random.RandomState(seed))


def optimal_error(dense, k):
    s = np.linalg.svd(dense, compute_uv=False)
    return np.sqrt(np.sum(s[k:] ** 2))


def frobenius_error(dense, model):
    return np.linalg.norm(dense - model.reconstruct())


# Tests

def test_diagonal_matrix():
    model = truncated_svd(np.diag([3.0, 2.0, 1.0]), 2)
    np.testing.assert_allclose(model.singular_values, [3.0, 2.0],
                               atol=1e-12)
    np.testing.assert_allclose(model.reconstruct(),
                               np.diag([3.0, 2.0, 0.0]), atol=1e-12)
    assert dot_similarity(model, 0, 0) == pytest.approx(9.0, abs=1e-12)
    assert dot_similarity(model, 0, 1) == pytest.approx(0.0, abs=1e-12)
    assert dot_similarity(model, 2, 2) == pytest.approx(0.0, abs=1e-12)


def test_rank_one_matrix():
    dense = np.array([[1.0, 2.0], [2.0, 4.0]])
    model = truncated_svd(dense, 1)
    assert model.singular_values[0] == pytest.approx(5.0, abs=1e-12)
    np.testing.assert_allclose(model.reconstruct(), dense, atol=1e-12)


def test_full_rank_reconstruction_is_exact():
    dense = np.random.RandomState(3).rand(6, 4)
    model = truncated_svd(dense, 4)
    assert frobenius_error(dense, model) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("algorithm, rel", SOLVER_TOLERANCES)
def test_eckart_young_optimality(algorithm, rel):
    dense = random_sparse(30, 40, seed=11).toarray()
    for k in (1, 5, 12):
        model = truncated_svd(dense, k, algorithm=algorithm)
        assert model.algorithm == algorithm
        assert frobenius_error(dense, model) == \
            pytest.approx(optimal_error(dense, k), rel=rel)


@pytest.mark.parametrize("algorithm, tolerance", SOLVER_TOLERANCES)
def test_error_is_non_increasing_in_k(algorithm, tolerance):
    dense = random_sparse(12, 9, density=0.4, seed=5).toarray()
    errors = [
        frobenius_error(dense, truncated_svd(dense, k, algorithm=algorithm))
        for k in range(1, 10)
    ]
    assert all(b <= a + tolerance for a, b in zip(errors, errors[1:]))
    assert errors[-1] == pytest.approx(0.0, abs=tolerance)


def test_column_factors_are_orthonormal():
    model = truncated_svd(random_sparse(20, 30), 6)
    gram = model.col_factors.T @ model.col_factors
    np.testing.assert_allclose(gram, np.eye(6), atol=1e-6)


def test_dot_similarity_matches_dense_reconstruction():
    matrix = random_sparse(20, 30, seed=2)
    model = truncated_svd(matrix, 8)
    m_k = model.reconstruct()
    for i in range(20):
        for j in range(20):
            assert dot_similarity(model, i, j) == \
                pytest.approx(m_k[i] @ m_k[j], abs=1e-8)


def test_dot_similarity_is_invariant_to_sign_flips():
    model = truncated_svd(random_sparse(15, 10, seed=4), 5)
    signs = np.array([1.0, -1.0, -1.0, 1.0, -1.0])
    flipped = SvdModel(model.singular_values, model.row_embeddings * signs,
                       model.col_factors * signs)
    for i in range(15):
        np.testing.assert_allclose(flipped.row_scores(i),
                                   model.row_scores(i), atol=1e-12)


def test_randomized_solver_agrees_with_exact():
    rng = np.random.RandomState(9)
    low_rank = rng.rand(60, 5) @ rng.rand(5, 80)
    exact = truncated_svd(low_rank, 5, algorithm="exact")
    randomized = truncated_svd(scipy.sparse.csr_matrix(low_rank), 5,
                               algorithm="randomized")
    assert randomized.algorithm == "randomized"
    np.testing.assert_allclose(randomized.singular_values,
                               exact.singular_values, rtol=1e-6)
    np.testing.assert_allclose(randomized.reconstruct(), low_rank,
                               atol=1e-6)


@pytest.mark.parametrize("seed", range(5))
def test_randomized_singular_values_on_full_rank_matrices(seed):
    dense = np.random.RandomState(seed).rand(40, 40)
    exact = truncated_svd(dense, 10, algorithm="exact")
    randomized = truncated_svd(dense, 10, seed=seed, algorithm="randomized")
    np.testing.assert_allclose(randomized.singular_values,
                               exact.singular_values, rtol=1e-2)


def test_exact_solver_logs_the_ignored_range_finder_settings(caplog):
    caplog.set_level(logging.DEBUG, logger="foodsubs.svd")
    model = truncated_svd(np.eye(3), 2, seed=5, power_iters=7)
    assert model.algorithm == "exact"
    assert "seed=5, oversampling=10, power_iters=7" in caplog.text


def test_decomposition_is_deterministic():
    matrix = random_sparse(250, 200, density=0.05, seed=8)
    first = truncated_svd(matrix, 10, seed=42)
    second = truncated_svd(matrix, 10, seed=42)
    assert first.algorithm == "randomized"
    assert np.array_equal(first.singular_values, second.singular_values)
    assert np.array_equal(first.row_embeddings, second.row_embeddings)
    assert first.seed == 42


def test_choose_algorithm():
    assert choose_algorithm((200, 200), 10, 10) == "exact"
    assert choose_algorithm((250, 200), 10, 10) == "randomized"
    assert choose_algorithm((250, 200), 195, 10) == "exact"
    assert choose_algorithm((10, 10), 2, 10, "randomized") == "randomized"
    with pytest.raises(PreconditionError):
        choose_algorithm((10, 10), 2, 10, "lanczos")


@pytest.mark.parametrize("k", [0, 4, -1])
def test_rank_out_of_range(k):
    with pytest.raises(PreconditionError):
        truncated_svd(np.eye(3), k)


def test_all_zero_matrix():
    with pytest.raises(PreconditionError):
        truncated_svd(scipy.sparse.csr_matrix((4, 4)), 2)


def test_out_of_range_rows():
    model = truncated_svd(np.eye(3), 2)
    with pytest.raises(PreconditionError):
        dot_similarity(model, 0, 3)
    with pytest.raises(PreconditionError):
        model.row_scores(-1)
    with pytest.raises(PreconditionError):
        model.row_scores(0, similarity="euclidean")


def test_model_validates_its_factors():
    with pytest.raises(PreconditionError):
        SvdModel([1.0, 2.0], np.ones((3, 2)), np.ones((3, 2)))
    with pytest.raises(PreconditionError):
        SvdModel([2.0, 1.0], np.ones((3, 1)), np.ones((3, 2)))


def test_cosine_scores_against_a_zero_row():
    model = truncated_svd(np.diag([3.0, 2.0, 1.0]), 2)
    scores = model.row_scores(0, similarity="cosine")
    np.testing.assert_allclose(scores, [1.0, 0.0, 0.0], atol=1e-12)
    np.testing.assert_allclose(model.row_scores(2, similarity="cosine"),
                               [0.0, 0.0, 0.0])


def test_ppmi_matrix_input_keeps_the_vocabulary(toy_counts):
    ppmi = build_ppmi_matrix(*toy_counts)
    model = truncated_svd(ppmi, 2)
    assert model.row_vocab is ppmi.row_vocab
    assert model.rows == model.cols == 3


@pytest.mark.parametrize("algorithm, tolerance", SOLVER_TOLERANCES)
@given(st.integers(min_value=1, max_value=8),
       st.integers(min_value=0, max_value=10 ** 6))
def test_small_matrices_match_the_exact_oracle(algorithm, tolerance, k,
                                               seed):
    dense = random_sparse(10, 8, density=0.5, seed=seed % 1000).toarray()
    if not np.any(dense):
        return
    model = truncated_svd(dense, k, seed=seed, algorithm=algorithm)
    expected = np.linalg.svd(dense, compute_uv=False)[:k]
    np.testing.assert_allclose(model.singular_values, expected,
                               rtol=tolerance, atol=1e-9)

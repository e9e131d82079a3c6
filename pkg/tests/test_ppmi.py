# -*- coding: utf-8 -*-
"""foodsubs/ppmi.py Fixtures & Tests

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

import math

import numpy as np
import pytest
import scipy.sparse
from hypothesis import assume, given
from hypothesis import strategies as st

from foodsubs.corpus import PairCounts, Vocabulary
from foodsubs.exceptions import PreconditionError
from foodsubs.ppmi import (
    PpmiMatrix,
    build_ppmi_matrix,
    cosine_similarity,
    pmi_sig_cell,
    row_similarities,
)
from tests.conftest import TOY_KEYS
from tests.utils import naive_cosine, naive_pmi_sig


TOY_AB = math.log(16.0 / 9.0) * math.sqrt(3)
TOY_AC = math.log(8.0 / 6.0) * math.sqrt(3)


# Helper Functions

def vocabulary(n, prefix="k:s:"):
    return Vocabulary(["{}{:03d}".format(prefix, i) for i in range(n)],
                      [1] * n)


def dense_matrix(rows):
    rows = np.asarray(rows, dtype=np.float64)
    return PpmiMatrix(scipy.sparse.csr_matrix(rows),
                      vocabulary(rows.shape[0]), vocabulary(rows.shape[1]))


@st.composite
def consistent_counts(draw):
    total = draw(st.integers(min_value=1, max_value=10 ** 6))
    f_c = draw(st.integers(min_value=1, max_value=total))
    c_c = draw(st.integers(min_value=1, max_value=total))
    pair_c = draw(st.integers(min_value=0, max_value=min(f_c, c_c)))
    return pair_c, f_c, c_c, total


weight_matrices = st.lists(
    st.lists(st.sampled_from([0.0, 0.0, 0.5, 1.0, 2.5, 7.0]),
             min_size=6, max_size=6),
    min_size=2, max_size=12,
)


# pytest Fixtures

@pytest.fixture(scope="module")
def toy_matrix(toy_counts):
    return build_ppmi_matrix(*toy_counts)


# Tests

def test_pmi_sig_cell_examples():
    assert pmi_sig_cell(2, 3, 3, 8) == pytest.approx(0.9966, abs=1e-4)
    assert pmi_sig_cell(2, 3, 3, 8) == pytest.approx(TOY_AB, abs=1e-12)
    assert pmi_sig_cell(3, 6, 4, 8) == 0.0
    assert pmi_sig_cell(1, 4, 4, 8) == 0.0


def test_pmi_sig_cell_zero_pair_count_short_circuits():
    assert pmi_sig_cell(0, 0, 0, 0) == 0.0
    assert pmi_sig_cell(0, 5, 5, 10) == 0.0


@pytest.mark.parametrize("counts", [
    (1, 0, 3, 8),
    (1, 3, 0, 8),
    (1, 3, 3, 0),
    (4, 3, 5, 8),
    (-1, 3, 3, 8),
])
def test_pmi_sig_cell_rejects_inconsistent_counts(counts):
    with pytest.raises(PreconditionError):
        pmi_sig_cell(*counts)


def test_pmi_sig_cell_log_base_and_weighting():
    assert pmi_sig_cell(2, 3, 3, 8, log_base=2) == \
        pytest.approx(TOY_AB / math.log(2), abs=1e-12)
    assert pmi_sig_cell(2, 3, 3, 8, weighting="ppmi") == \
        pytest.approx(math.log(16.0 / 9.0), abs=1e-12)
    with pytest.raises(PreconditionError):
        pmi_sig_cell(2, 3, 3, 8, log_base=1)
    with pytest.raises(PreconditionError):
        pmi_sig_cell(2, 3, 3, 8, weighting="tfidf")


@given(consistent_counts())
def test_pmi_sig_cell_matches_the_naive_formula(counts):
    assert pmi_sig_cell(*counts) == \
        pytest.approx(naive_pmi_sig(*counts), rel=1e-9, abs=1e-9)
    assert pmi_sig_cell(*counts) >= 0.0


@given(consistent_counts())
def test_pmi_sig_cell_is_monotone_in_the_pair_count(counts):
    pair_c, f_c, c_c, total = counts
    assume(pair_c < min(f_c, c_c))
    assert pmi_sig_cell(pair_c + 1, f_c, c_c, total) >= \
        pmi_sig_cell(pair_c, f_c, c_c, total)


def test_toy_matrix_cells(toy_matrix):
    a, b, c = (toy_matrix.row_vocab.id(key) for key in TOY_KEYS)
    col = toy_matrix.col_vocab.id
    assert toy_matrix.shape == (3, 3)
    assert toy_matrix.get(a, col(TOY_KEYS[1])) == \
        pytest.approx(TOY_AB, abs=1e-12)
    assert toy_matrix.get(a, col(TOY_KEYS[2])) == \
        pytest.approx(TOY_AC, abs=1e-12)
    assert toy_matrix.get(c, col(TOY_KEYS[1])) == \
        pytest.approx(TOY_AC, abs=1e-12)
    assert toy_matrix.get(a, col(TOY_KEYS[0])) == 0.0
    assert toy_matrix.nnz == 6


def test_toy_matrix_triples_are_sorted(toy_matrix):
    triples = list(toy_matrix.triples())
    assert [(i, j) for i, j, _ in triples] == \
        sorted((i, j) for i, j, _ in triples)
    assert all(weight > 0 for _, _, weight in triples)


def test_independent_counts_store_nothing():
    counts = PairCounts({(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}, 2, 2)
    ppmi = build_ppmi_matrix(counts, vocabulary(2), vocabulary(2))
    assert ppmi.nnz == 0
    assert ppmi.shape == (2, 2)


def test_matrix_is_deterministic(toy_counts, toy_matrix):
    assert build_ppmi_matrix(*toy_counts) == toy_matrix


def test_matrix_rejects_negative_weights_and_bad_shapes():
    with pytest.raises(PreconditionError):
        dense_matrix([[1.0, -1.0], [0.0, 1.0]])
    with pytest.raises(PreconditionError):
        PpmiMatrix(scipy.sparse.csr_matrix(np.ones((2, 2))),
                   vocabulary(3), vocabulary(2))


def test_cosine_examples():
    m = dense_matrix([[1, 1, 0], [1, 0, 0], [1, 1, 0], [0, 0, 1],
                      [0, 0, 0]])
    assert cosine_similarity(m, 0, 1) == \
        pytest.approx(1 / math.sqrt(2), abs=1e-5)
    assert cosine_similarity(m, 0, 2) == pytest.approx(1.0, abs=1e-12)
    assert cosine_similarity(m, 0, 3) == 0.0
    assert cosine_similarity(m, 0, 4) == 0.0
    assert cosine_similarity(m, 4, 4) == 0.0


def test_cosine_rejects_out_of_range_rows(toy_matrix):
    with pytest.raises(PreconditionError):
        cosine_similarity(toy_matrix, 0, 3)
    with pytest.raises(PreconditionError):
        row_similarities(toy_matrix, -1)


def test_toy_cosine(toy_matrix):
    rows = toy_matrix.toarray()
    for i in range(3):
        for j in range(3):
            assert cosine_similarity(toy_matrix, i, j) == \
                pytest.approx(naive_cosine(rows[i], rows[j]), abs=1e-12)


@given(weight_matrices)
def test_sparse_cosine_matches_dense_brute_force(rows):
    m = dense_matrix(rows)
    dense = m.toarray()
    for i in range(m.rows):
        similarities = row_similarities(m, i)
        for j in range(m.rows):
            expected = naive_cosine(dense[i], dense[j])
            assert similarities[j] == pytest.approx(expected, abs=1e-12)
            assert 0.0 <= cosine_similarity(m, i, j) <= 1.0 + 1e-12


def test_log_base_scales_cells_and_keeps_cosines(toy_counts):
    natural = build_ppmi_matrix(*toy_counts)
    binary = build_ppmi_matrix(*toy_counts, log_base=2)
    np.testing.assert_allclose(binary.toarray(),
                               natural.toarray() / math.log(2), atol=1e-12)
    for i in range(natural.rows):
        np.testing.assert_allclose(row_similarities(binary, i),
                                   row_similarities(natural, i), atol=1e-12)


def test_scaled_matrix_keeps_cosines(toy_matrix):
    scaled = toy_matrix.scaled(3.5)
    np.testing.assert_allclose(scaled.toarray(), toy_matrix.toarray() * 3.5)
    np.testing.assert_allclose(row_similarities(scaled, 0),
                               row_similarities(toy_matrix, 0), atol=1e-12)
    with pytest.raises(PreconditionError):
        toy_matrix.scaled(0)

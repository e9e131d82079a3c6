# -*- coding: utf-8 -*-
"""Rank-k truncated SVD of the food-context matrix.

The model keeps row embeddings E = U_k·Σ_k, so that the dot product of two
rows of E equals the dot product of the same rows of M_k = U_k·Σ_k·V_kᵀ
without ever materializing M_k.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging

import numpy as np
import scipy.linalg
import scipy.sparse
from sklearn.utils import check_random_state
from sklearn.utils.extmath import randomized_svd

from .config import (
    DEFAULT_OVERSAMPLING,
    DEFAULT_POWER_ITERS,
    DEFAULT_SVD_ALGORITHM,
    DEFAULT_SVD_SEED,
    DEFAULT_SVD_SIMILARITY,
    EXACT_SVD_MAX_CELLS,
    SVD_ALGORITHMS,
    SVD_SIMILARITIES,
)
from .exceptions import PreconditionError
from .ppmi import PpmiMatrix
from .utils import check_range, check_type


logger = logging.getLogger(__name__)


class SvdModel(object):
    """Top-k singular values, row embeddings and column factors."""

    def __init__(self, singular_values, row_embeddings, col_factors,
                 seed=DEFAULT_SVD_SEED, algorithm=None, row_vocab=None):
        """Create a model from its factors.

        Args:
            singular_values(array): k non-negative values, descending.
            row_embeddings(array): |V_f| x k matrix U_k·Σ_k.
            col_factors(array): |V_c| x k matrix V_k.
            seed(int): The seed the model was computed with.
            algorithm(str): The solver that produced the model.
            row_vocab(Vocabulary): The food rows, when known.

        Raises:
            PreconditionError: If the factor shapes disagree or the singular
                values are not sorted and non-negative.

        """
        singular_values = np.asarray(singular_values, dtype=np.float64)
        row_embeddings = np.asarray(row_embeddings, dtype=np.float64)
        col_factors = np.asarray(col_factors, dtype=np.float64)
        k = singular_values.shape[0]
        if row_embeddings.ndim != 2 or row_embeddings.shape[1] != k:
            raise PreconditionError("row embeddings must have k columns")
        if col_factors.ndim != 2 or col_factors.shape[1] != k:
            raise PreconditionError("column factors must have k columns")
        if np.any(singular_values < 0) or \
                np.any(np.diff(singular_values) > 0):
            raise PreconditionError(
                "singular values must be non-negative and descending"
            )
        if row_vocab is not None and len(row_vocab) != row_embeddings.shape[0]:
            raise PreconditionError("row vocabulary does not match embeddings")

        self._singular_values = singular_values
        self._row_embeddings = row_embeddings
        self._col_factors = col_factors
        self._seed = seed
        self._algorithm = algorithm
        self._row_vocab = row_vocab
        self._row_norms = np.linalg.norm(row_embeddings, axis=1)

    @property
    def k(self):
        return self._singular_values.shape[0]

    @property
    def singular_values(self):
        return self._singular_values

    @property
    def row_embeddings(self):
        """E = U_k·Σ_k, one row per food."""
        return self._row_embeddings

    @property
    def col_factors(self):
        """V_k, one row per context."""
        return self._col_factors

    @property
    def seed(self):
        return self._seed

    @property
    def algorithm(self):
        return self._algorithm

    @property
    def row_vocab(self):
        return self._row_vocab

    @property
    def rows(self):
        return self._row_embeddings.shape[0]

    @property
    def cols(self):
        return self._col_factors.shape[0]

    def with_vocab(self, row_vocab):
        """The same model attached to a row vocabulary."""
        return SvdModel(self._singular_values, self._row_embeddings,
                        self._col_factors, seed=self._seed,
                        algorithm=self._algorithm, row_vocab=row_vocab)

    def reconstruct(self):
        """The dense rank-k approximation M_k = E·V_kᵀ."""
        return self._row_embeddings @ self._col_factors.T

    def row_scores(self, i, similarity=DEFAULT_SVD_SIMILARITY):
        """Similarity of row i to every row, as a dense vector.

        Args:
            i(int): A row id.
            similarity(str): "dot" (default) or "cosine"; cosine against a
                zero row is 0.

        """
        self._check_row(i)
        if similarity not in SVD_SIMILARITIES:
            raise PreconditionError(
                "Unknown SVD similarity {!r}".format(similarity)
            )
        scores = self._row_embeddings @ self._row_embeddings[i]
        if similarity == "cosine":
            norms = self._row_norms * self._row_norms[i]
            scores = np.divide(scores, norms, out=np.zeros_like(scores),
                               where=norms > 0)
        return scores

    def _check_row(self, i):
        check_type(i, (int, np.integer))
        check_range("row id", int(i), 0, self.rows - 1)

    def __repr__(self):
        return "<SvdModel {}x{} k={} seed={}>".format(
            self.rows, self.cols, self.k, self._seed
        )


def _normalize_signs(u, vt):
    """Make the largest-magnitude entry of every left vector positive."""
    largest = np.argmax(np.abs(u), axis=0)
    signs = np.sign(u[largest, np.arange(u.shape[1])])
    signs[signs == 0] = 1.0
    return u * signs, vt * signs[:, np.newaxis]


def choose_algorithm(shape, k, oversampling, algorithm=DEFAULT_SVD_ALGORITHM):
    """The solver "auto" resolves to for a matrix shape.

    Small matrices, and ranks whose sketch would cover the smaller
    dimension, are decomposed exactly.
    """
    if algorithm not in SVD_ALGORITHMS:
        raise PreconditionError("Unknown SVD algorithm {!r}".format(algorithm))
    if algorithm != "auto":
        return algorithm
    rows, cols = shape
    if rows * cols <= EXACT_SVD_MAX_CELLS or k + oversampling >= min(shape):
        return "exact"
    return "randomized"


def truncated_svd(m, k, seed=DEFAULT_SVD_SEED,
                  oversampling=DEFAULT_OVERSAMPLING,
                  power_iters=DEFAULT_POWER_ITERS,
                  algorithm=DEFAULT_SVD_ALGORITHM):
    """Top-k singular triplets of a matrix.

    Args:
        m: A PpmiMatrix, scipy sparse matrix or 2-D array.
        k(int): The rank, 1 <= k <= min(rows, cols).
        seed(int): Seed of the randomized range finder.
        oversampling(int): Extra sketch columns beyond k.
        power_iters(int): Power iterations of the range finder. The exact
            solver ignores these three.
        algorithm(str): "auto", "randomized" or "exact".

    Returns:
        SvdModel: The decomposition, deterministic for fixed inputs.

    Raises:
        PreconditionError: If k is out of range or the matrix is all zeros.

    """
    row_vocab = None
    if isinstance(m, PpmiMatrix):
        row_vocab = m.row_vocab
        matrix = m.matrix
    elif scipy.sparse.issparse(m):
        matrix = scipy.sparse.csr_matrix(m, dtype=np.float64)
    else:
        matrix = np.asarray(m, dtype=np.float64)
        if matrix.ndim != 2:
            raise PreconditionError("expected a 2-D matrix")

    check_type(k, (int, np.integer))
    check_type(seed, (int, np.integer))
    check_range("k", k, 1, min(matrix.shape))
    check_range("oversampling", oversampling, 0)
    check_range("power_iters", power_iters, 0)
    if scipy.sparse.issparse(matrix):
        all_zero = matrix.count_nonzero() == 0
    else:
        all_zero = not np.any(matrix)
    if all_zero:
        raise PreconditionError("cannot decompose an all-zero matrix")

    solver = choose_algorithm(matrix.shape, k, oversampling, algorithm)
    if solver == "exact":
        logger.debug("Exact SVD ignores the range finder settings: seed=%d, "
                     "oversampling=%d, power_iters=%d",
                     seed, oversampling, power_iters)
        dense = matrix.toarray() if scipy.sparse.issparse(matrix) else matrix
        u, s, vt = scipy.linalg.svd(dense, full_matrices=False)
        u, s, vt = u[:, :k], s[:k], vt[:k]
    else:
        u, s, vt = randomized_svd(
            matrix, k,
            n_oversamples=oversampling,
            n_iter=power_iters,
            flip_sign=False,
            random_state=check_random_state(int(seed)),
        )

    u, vt = _normalize_signs(u, vt)
    s = np.maximum(s, 0.0)
    logger.info("Computed %s SVD of a %dx%d matrix: k=%d, sigma_1=%.6g",
                solver, matrix.shape[0], matrix.shape[1], k, s[0])
    return SvdModel(s, u * s, vt.T, seed=int(seed), algorithm=solver,
                    row_vocab=row_vocab)


def dot_similarity(model, i, j):
    """Dot product of the rank-k representations of rows i and j.

    Equal to the dot product of rows i and j of M_k.

    Raises:
        PreconditionError: If a row id is out of range.

    """
    check_type(model, SvdModel)
    model._check_row(i)
    model._check_row(j)
    return float(model.row_embeddings[i] @ model.row_embeddings[j])

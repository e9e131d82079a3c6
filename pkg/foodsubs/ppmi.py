# -*- coding: utf-8 -*-
"""The PMI_sig-weighted food-context matrix and cosine similarity.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging
import math

import numpy as np
import scipy.sparse
from sklearn.metrics.pairwise import cosine_similarity as _pairwise_cosine

from .config import DEFAULT_LOG_BASE, WEIGHTING_SCHEMES
from .corpus import PairCounts, Vocabulary
from .exceptions import PreconditionError
from .utils import check_range, check_type


logger = logging.getLogger(__name__)


def _log_scale(log_base):
    """Factor turning natural logs into logs of the given base."""
    if log_base in ("e", None):
        return 1.0
    try:
        base = float(log_base)
    except (TypeError, ValueError):
        raise PreconditionError("log_base must be 'e' or a number > 1; "
                                "received {!r}".format(log_base))
    if not base > 1.0:
        raise PreconditionError("log_base must be 'e' or a number > 1; "
                                "received {!r}".format(log_base))
    return 1.0 / math.log(base)


def pmi_sig_cell(pair_c, f_c, c_c, total, log_base=DEFAULT_LOG_BASE,
                 weighting="pmi_sig"):
    """Weight of one food-context cell.

    ``max(log(#(f,c)·|D| / (#(f)·#(c))) · sqrt(max(#(f), #(c))), 0)``.
    A zero pair count short-circuits to 0.

    Args:
        pair_c(int): #(f,c).
        f_c(int): #(f).
        c_c(int): #(c).
        total(int): |D|.
        log_base: "e" (default) or a numeric base.
        weighting(str): "pmi_sig", or "ppmi" to drop the square-root factor.

    Returns:
        float: The non-negative weight.

    Raises:
        PreconditionError: If the counts are inconsistent or a denominator is
            zero while pair_c > 0.

    """
    if weighting not in WEIGHTING_SCHEMES:
        raise PreconditionError("Unknown weighting {!r}".format(weighting))
    if min(pair_c, f_c, c_c, total) < 0:
        raise PreconditionError("counts must be non-negative")
    if pair_c == 0:
        return 0.0
    if f_c == 0 or c_c == 0 or total == 0:
        raise PreconditionError(
            "zero marginal with a positive pair count: "
            "#(f,c)={}, #(f)={}, #(c)={}, |D|={}".format(
                pair_c, f_c, c_c, total
            )
        )
    if pair_c > f_c or pair_c > c_c or pair_c > total:
        raise PreconditionError(
            "pair count {} exceeds a marginal ({}, {}, {})".format(
                pair_c, f_c, c_c, total
            )
        )

    pmi = math.log(pair_c * total / (f_c * c_c)) * _log_scale(log_base)
    if weighting == "pmi_sig":
        pmi *= math.sqrt(max(f_c, c_c))
    return max(pmi, 0.0)


class PpmiMatrix(object):
    """Sparse |V_f| x |V_c| food-context matrix with its vocabularies.

    Only strictly positive weights are stored and column ids are sorted
    within every row. Instances are never modified after construction.
    """

    def __init__(self, matrix, row_vocab, col_vocab):
        """Wrap a sparse matrix.

        Args:
            matrix: A scipy sparse matrix (converted to CSR).
            row_vocab(Vocabulary): The food rows.
            col_vocab(Vocabulary): The context columns.

        Raises:
            PreconditionError: If shapes disagree or a weight is negative.

        """
        check_type(row_vocab, Vocabulary)
        check_type(col_vocab, Vocabulary)
        matrix = scipy.sparse.csr_matrix(matrix, dtype=np.float64, copy=True)
        if matrix.shape != (len(row_vocab), len(col_vocab)):
            raise PreconditionError(
                "matrix shape {} does not match vocabularies ({}, {})".format(
                    matrix.shape, len(row_vocab), len(col_vocab)
                )
            )
        matrix.sum_duplicates()
        matrix.eliminate_zeros()
        matrix.sort_indices()
        if matrix.nnz and matrix.data.min() < 0:
            raise PreconditionError("matrix weights must be non-negative")
        self._matrix = matrix
        self._row_vocab = row_vocab
        self._col_vocab = col_vocab

    @property
    def matrix(self):
        """The CSR storage; callers must not modify it."""
        return self._matrix

    @property
    def row_vocab(self):
        return self._row_vocab

    @property
    def col_vocab(self):
        return self._col_vocab

    @property
    def rows(self):
        return self._matrix.shape[0]

    @property
    def cols(self):
        return self._matrix.shape[1]

    @property
    def shape(self):
        return self._matrix.shape

    @property
    def nnz(self):
        return self._matrix.nnz

    def triples(self):
        """Yield (row id, col id, weight) sorted by (row, col)."""
        indptr = self._matrix.indptr
        indices = self._matrix.indices
        data = self._matrix.data
        for i in range(self.rows):
            for position in range(indptr[i], indptr[i + 1]):
                yield i, int(indices[position]), float(data[position])

    def get(self, i, j):
        return float(self._matrix[i, j])

    def toarray(self):
        return self._matrix.toarray()

    def scaled(self, factor):
        """A copy with every weight multiplied by a positive factor."""
        if not factor > 0:
            raise PreconditionError("scale factor must be positive")
        return PpmiMatrix(self._matrix * factor, self._row_vocab,
                          self._col_vocab)

    def __eq__(self, other):
        if not isinstance(other, PpmiMatrix) or self.shape != other.shape:
            return False
        return (self._row_vocab == other._row_vocab
                and self._col_vocab == other._col_vocab
                and np.array_equal(self._matrix.indptr, other._matrix.indptr)
                and np.array_equal(self._matrix.indices,
                                   other._matrix.indices)
                and np.array_equal(self._matrix.data, other._matrix.data))

    def __repr__(self):
        return "<PpmiMatrix {}x{} nnz={}>".format(self.rows, self.cols,
                                                 self.nnz)


def build_ppmi_matrix(counts, row_vocab, col_vocab,
                      log_base=DEFAULT_LOG_BASE, weighting="pmi_sig"):
    """Weight every observed food-context pair and assemble the matrix.

    Args:
        counts(PairCounts): The pair counts over the vocabularies' ids.
        row_vocab(Vocabulary): The food rows.
        col_vocab(Vocabulary): The context columns.
        log_base: "e" (default) or a numeric base.
        weighting(str): "pmi_sig", or "ppmi" to drop the square-root factor.

    Returns:
        PpmiMatrix: Cells with a strictly positive weight.

    """
    check_type(counts, PairCounts)
    if weighting not in WEIGHTING_SCHEMES:
        raise PreconditionError("Unknown weighting {!r}".format(weighting))
    if counts.shape != (len(row_vocab), len(col_vocab)):
        raise PreconditionError("pair counts do not match the vocabularies")

    rows, cols, pair_c = counts.to_arrays()
    f_c = counts.f_count[rows]
    c_c = counts.c_count[cols]
    total = counts.total

    ratio = (pair_c * total).astype(np.float64) / (f_c * c_c)
    weights = np.log(ratio) * _log_scale(log_base)
    if weighting == "pmi_sig":
        weights *= np.sqrt(np.maximum(f_c, c_c).astype(np.float64))
    positive = weights > 0

    matrix = scipy.sparse.csr_matrix(
        (weights[positive], (rows[positive], cols[positive])),
        shape=(len(row_vocab), len(col_vocab)),
    )
    ppmi = PpmiMatrix(matrix, row_vocab, col_vocab)
    logger.info("Built %s matrix: %dx%d, %d of %d observed cells positive",
                weighting, ppmi.rows, ppmi.cols, ppmi.nnz, len(pair_c))
    return ppmi


def _check_row(m, i):
    check_type(i, (int, np.integer))
    check_range("row id", int(i), 0, m.rows - 1)


def cosine_similarity(m, i, j):
    """Cosine of two food rows; 0 when either row is all zeros.

    Args:
        m(PpmiMatrix): The food-context matrix.
        i(int): A row id.
        j(int): A row id.

    Returns:
        float: The similarity, in [0, 1] since weights are non-negative.

    Raises:
        PreconditionError: If a row id is out of range.

    """
    check_type(m, PpmiMatrix)
    _check_row(m, i)
    _check_row(m, j)
    return float(_pairwise_cosine(m.matrix[i], m.matrix[j])[0, 0])


def row_similarities(m, i):
    """Cosine of row i against every row, as a dense vector."""
    check_type(m, PpmiMatrix)
    _check_row(m, i)
    return _pairwise_cosine(m.matrix[i], m.matrix).ravel()

# -*- coding: utf-8 -*-
"""The build-matrix stage: pair counts to the PMI_sig matrix.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


from foodsubs.config import (
    COL_VOCAB_FILE,
    MATRIX_FILE,
    PROCESSED_MEALS_FILE,
    ROW_VOCAB_FILE,
)
from foodsubs.corpus import build_pair_counts
from foodsubs.formats import (
    read_matrix,
    read_processed_meals,
    read_vocab,
    write_matrix,
    write_vocab,
)
from foodsubs.ppmi import build_ppmi_matrix

from .base import PipelineStage


class BuildMatrixStage(PipelineStage):
    """Count food-context pairs and weight them into the matrix."""

    NAME = "build-matrix"

    def build(self):
        """The PpmiMatrix of the processed meals."""
        meals = read_processed_meals(
            self.store.require(PROCESSED_MEALS_FILE, "ingest")
        )
        counts, row_vocab, col_vocab = build_pair_counts(
            meals, self.config.min_row_count, self.config.min_col_count,
        )
        return build_ppmi_matrix(counts, row_vocab, col_vocab,
                                 log_base=self.config.log_base)

    def run(self):
        ppmi = self.build()
        write_vocab(self.store.path(ROW_VOCAB_FILE), ppmi.row_vocab)
        write_vocab(self.store.path(COL_VOCAB_FILE), ppmi.col_vocab)
        write_matrix(self.store.path(MATRIX_FILE), ppmi)
        return [ROW_VOCAB_FILE, COL_VOCAB_FILE, MATRIX_FILE]

    def load(self):
        """Read the matrix written by a previous run of this stage."""
        row_vocab = read_vocab(self.store.require(ROW_VOCAB_FILE, self.NAME))
        col_vocab = read_vocab(self.store.require(COL_VOCAB_FILE, self.NAME))
        return read_matrix(self.store.require(MATRIX_FILE, self.NAME),
                           row_vocab, col_vocab)

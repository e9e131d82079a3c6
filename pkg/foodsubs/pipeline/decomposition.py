# -*- coding: utf-8 -*-
"""The svd stage: rank-k decomposition of the matrix.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


from foodsubs.config import MODEL_FILE
from foodsubs.formats import read_model, write_model
from foodsubs.svd import truncated_svd

from .base import PipelineStage
from .matrix import BuildMatrixStage


class SvdStage(PipelineStage):
    """Decompose the food-context matrix and store the row embeddings."""

    NAME = "svd"

    def run(self):
        ppmi = BuildMatrixStage(self.store, self.config).load()
        model = truncated_svd(
            ppmi, self.config.svd_k,
            seed=self.config.svd_seed,
            oversampling=self.config.oversampling,
            power_iters=self.config.power_iters,
            algorithm=self.config.svd_algorithm,
        )
        write_model(self.store.path(MODEL_FILE), model)
        return [MODEL_FILE]

    def load(self, row_vocab):
        """Read the model written by a previous run of this stage."""
        return read_model(self.store.require(MODEL_FILE, self.NAME),
                          row_vocab=row_vocab)

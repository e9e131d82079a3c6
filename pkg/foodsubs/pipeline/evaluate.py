# -*- coding: utf-8 -*-
"""The evaluate stage: metrics of the rankings against judgements.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging

from foodsubs.config import (
    AGREEMENT_FILE,
    COMPARISON_FILE,
    METRICS_FILE,
    QUERIES_FILE,
    RANKINGS_FILE,
    SYNTH_JUDGEMENTS_FILE,
)
from foodsubs.evaluation import (
    compare_methods,
    evaluate_rankings,
    load_judgements,
    rater_agreement,
)
from foodsubs.formats import (
    read_clusters,
    read_queries,
    read_rankings,
    write_agreement,
    write_comparison,
    write_judgements,
    write_metrics,
)
from foodsubs.synth import simulate_judgements, subcategory_clusters

from .base import PipelineStage


logger = logging.getLogger(__name__)


class EvaluateStage(PipelineStage):
    """Score rankings with prec@1, prec@10, MAP and NDCG per threshold."""

    NAME = "evaluate"

    def judgements(self, rankings):
        """The judgements file's rows, or simulated ones when configured.

        Returns:
            tuple: (judgements, names of artifacts written).

        """
        if not self.config.simulate_judgements:
            self.config.require("judgements_path")
            return load_judgements(self.config.judgements_path), []

        if self.config.clusters_path:
            clusters = read_clusters(self.config.clusters_path)
        else:
            keys = set()
            for ranked in rankings:
                keys.add(ranked.query.key)
                keys.update(c.key for c in ranked.candidates)
            clusters = subcategory_clusters(keys)
        judgements = simulate_judgements(
            rankings, clusters, n_raters=self.config.judgement_raters,
            seed=self.config.judgement_seed,
        )
        write_judgements(self.store.path(SYNTH_JUDGEMENTS_FILE), judgements)
        logger.info("Simulated %d judgements", len(judgements))
        return judgements, [SYNTH_JUDGEMENTS_FILE]

    def evaluate(self):
        """(metrics rows, comparison rows, agreement rows, written names)."""
        rankings_path = self.store.require(RANKINGS_FILE, "rank-all")
        queries = read_queries(self.store.require(QUERIES_FILE, "rank-all"))
        rankings = read_rankings(rankings_path, queries=queries,
                                 methods=self.config.methods)
        judgements, written = self.judgements(rankings)
        rows = evaluate_rankings(rankings, judgements, self.config.taus,
                                 gain=self.config.ndcg_gain)
        comparison = compare_methods(rows)
        agreement = []
        for tau in self.config.taus:
            agreement.extend(rater_agreement(judgements, tau))
        return rows, comparison, agreement, written

    def run(self):
        rows, comparison, agreement, written = self.evaluate()
        write_metrics(self.store.path(METRICS_FILE), rows,
                      self.config.ndcg_gain)
        write_comparison(self.store.path(COMPARISON_FILE), comparison)
        write_agreement(self.store.path(AGREEMENT_FILE), agreement)
        return written + [METRICS_FILE, COMPARISON_FILE, AGREEMENT_FILE]

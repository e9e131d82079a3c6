# -*- coding: utf-8 -*-
"""The rank-all and query stages: top-k substitute lists.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


from collections import OrderedDict

from foodsubs.config import (
    JUDGEMENT_TASKS_FILE,
    QUERIES_FILE,
    RANKINGS_FILE,
    SURFACE_FORMS_FILE,
)
from foodsubs.formats import (
    read_surface_forms,
    write_judgement_tasks,
    write_queries,
    write_rankings,
)
from foodsubs.ranker import (
    judgement_tasks,
    rank_all,
    sample_queries,
    top_k_substitutes,
)

from .base import PipelineStage
from .decomposition import SvdStage
from .matrix import BuildMatrixStage


class _RankingStage(PipelineStage):

    def models(self):
        """Method name -> similarity model, for the configured methods."""
        ppmi = BuildMatrixStage(self.store, self.config).load()
        models = OrderedDict()
        for method in self.config.methods:
            if method == "PPMI":
                models[method] = ppmi
            else:
                models[method] = SvdStage(self.store, self.config).load(
                    ppmi.row_vocab
                )
        return models

    def surface_forms(self):
        """The ingested surface forms, or {} when ingest did not run here."""
        if self.store.exists(SURFACE_FORMS_FILE):
            return read_surface_forms(self.store.path(SURFACE_FORMS_FILE))
        return {}


class RankAllStage(_RankingStage):
    """Sample evaluation queries and rank substitutes with every method."""

    NAME = "rank-all"

    def rank(self):
        """(queries, rankings grouped by method, then query order)."""
        models = self.models()
        row_vocab = next(iter(models.values())).row_vocab
        queries = sample_queries(
            row_vocab, self.config.query_prefixes, self.config.query_count,
            self.config.query_seed,
        )
        rankings = []
        for model in models.values():
            rankings.extend(rank_all(
                model, queries, self.config.top_k,
                min_score=self.config.min_score,
                similarity=self.config.svd_similarity,
            ))
        return queries, rankings

    def run(self):
        queries, rankings = self.rank()
        write_queries(self.store.path(QUERIES_FILE), queries)
        write_rankings(self.store.path(RANKINGS_FILE), rankings)
        write_judgement_tasks(
            self.store.path(JUDGEMENT_TASKS_FILE),
            judgement_tasks(rankings, self.surface_forms()),
        )
        return [QUERIES_FILE, RANKINGS_FILE, JUDGEMENT_TASKS_FILE]


class QueryStage(_RankingStage):
    """Rank the substitutes of a single food; writes nothing."""

    NAME = "query"

    def run(self, query):
        """The RankedList of the query under every configured method."""
        return [
            top_k_substitutes(model, query, self.config.top_k,
                              min_score=self.config.min_score,
                              similarity=self.config.svd_similarity)
            for model in self.models().values()
        ]

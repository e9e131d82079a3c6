# -*- coding: utf-8 -*-
"""The heatmap stage: subcategory co-occurrence of substitute pairs.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


from foodsubs.config import HEATMAP_FILE, RANKINGS_FILE
from foodsubs.evaluation import subcategory_cooccurrence
from foodsubs.formats import read_rankings, write_heatmap

from .base import PipelineStage


class HeatmapStage(PipelineStage):
    """Jaccard co-occurrence of subcategories across ranked pairs."""

    NAME = "heatmap"

    def pairs(self):
        """(query, candidate) pairs whose query has a configured prefix."""
        rankings = read_rankings(self.store.require(RANKINGS_FILE, "rank-all"))
        prefixes = tuple(self.config.heatmap_prefixes)
        return [
            (ranked.query, candidate)
            for ranked in rankings if ranked.query.has_prefix(prefixes)
            for candidate in ranked.candidates
        ]

    def run(self):
        write_heatmap(self.store.path(HEATMAP_FILE),
                      subcategory_cooccurrence(self.pairs()))
        return [HEATMAP_FILE]

# -*- coding: utf-8 -*-
"""The ingest stage: meal logs to processed meals.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging

from foodsubs.config import (
    CORPUS_STATS_FILE,
    PROCESSED_MEALS_FILE,
    SURFACE_FORMS_FILE,
)
from foodsubs.corpus import (
    EntryNormalizer,
    corpus_statistics,
    load_meals,
    preprocess_corpus,
    surface_forms,
)
from foodsubs.formats import (
    write_json,
    write_processed_meals,
    write_surface_forms,
)
from foodsubs.taxonomy import load_taxonomy

from .base import PipelineStage


logger = logging.getLogger(__name__)


class IngestStage(PipelineStage):
    """Normalize every meal entry to its FoodKey.

    Writes the processed meals, the surface form of every food and the
    corpus statistics.
    """

    NAME = "ingest"

    def load(self):
        """The taxonomy, the reusable meal stream and a shared normalizer."""
        self.config.require("taxonomy_path", "meals_path")
        taxonomy = load_taxonomy(self.config.taxonomy_path)
        meals = load_meals(self.config.meals_path,
                           skip_malformed=self.config.skip_malformed)
        return taxonomy, meals, EntryNormalizer(taxonomy)

    def process(self):
        """Preprocess the corpus without writing anything.

        Returns:
            tuple: (processed meals, DiscardStats, surface forms,
            corpus statistics dict).

        """
        taxonomy, meals, normalizer = self.load()
        processed, stats = preprocess_corpus(
            meals, taxonomy, keep_duplicates=self.config.keep_duplicates,
            normalizer=normalizer,
        )
        forms = surface_forms(meals, taxonomy, normalizer=normalizer)
        statistics = corpus_statistics(meals, processed, stats)
        rate = stats.discard_rate
        if not 0.05 <= rate <= 0.15:
            logger.info("Discard rate %.1f%% is outside the usual 5-15%%",
                        100.0 * rate)
        return processed, stats, forms, statistics

    def run(self):
        processed, _, forms, statistics = self.process()
        write_processed_meals(self.store.path(PROCESSED_MEALS_FILE),
                              processed)
        write_surface_forms(self.store.path(SURFACE_FORMS_FILE), forms)
        write_json(self.store.path(CORPUS_STATS_FILE), statistics)
        return [PROCESSED_MEALS_FILE, SURFACE_FORMS_FILE, CORPUS_STATS_FILE]

# -*- coding: utf-8 -*-
"""The stats stage: the shape of a meal-log corpus.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


from foodsubs.config import CORPUS_STATS_FILE
from foodsubs.formats import write_json

from .ingest import IngestStage


class StatsStage(IngestStage):
    """Count users, meals, entries, discards, foods and pairs."""

    NAME = "stats"

    def statistics(self):
        """The corpus statistics dict, computed from the raw inputs."""
        return self.process()[3]

    def run(self):
        write_json(self.store.path(CORPUS_STATS_FILE), self.statistics())
        return [CORPUS_STATS_FILE]

# -*- coding: utf-8 -*-
"""The synth stage: a synthetic corpus with planted clusters.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import io

from foodsubs.config import (
    SYNTH_CLUSTERS_FILE,
    SYNTH_MEALS_FILE,
    SYNTH_TAXONOMY_FILE,
)
from foodsubs.formats import write_clusters
from foodsubs.synth import generate_corpus

from .base import PipelineStage


class SynthStage(PipelineStage):
    """Write meals.jsonl, a matching taxonomy.tsv and clusters.tsv."""

    NAME = "synth"

    def run(self):
        corpus = generate_corpus(self.config.synth_spec())
        for name, text in ((SYNTH_MEALS_FILE, corpus.meals_jsonl),
                           (SYNTH_TAXONOMY_FILE, corpus.taxonomy_tsv)):
            with io.open(self.store.path(name), "w", encoding="utf-8",
                         newline="\n") as f:
                f.write(text)
        write_clusters(self.store.path(SYNTH_CLUSTERS_FILE),
                       corpus.cluster_map)
        return [SYNTH_MEALS_FILE, SYNTH_TAXONOMY_FILE, SYNTH_CLUSTERS_FILE]

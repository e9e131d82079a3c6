# -*- coding: utf-8 -*-
"""Pipeline run fixtures.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

import os

import pytest

from foodsubs.config import (
    SYNTH_CLUSTERS_FILE,
    SYNTH_MEALS_FILE,
    SYNTH_TAXONOMY_FILE,
)
from foodsubs.pipeline import FoodSubstitutesPipeline
from foodsubs.pipeline.runconfig import RunConfig
from tests.environment import FOODSUBS_TEST_SEED


SYNTH_SETTINGS = dict(
    synth_clusters=8,
    synth_foods_per_cluster=4,
    synth_meals=3000,
    synth_meal_size_range=[2, 3],
    synth_partners=3,
    synth_seed=FOODSUBS_TEST_SEED,
)


# Helper Functions

def mini_pipeline(config_path, output_dir, **overrides):
    config = RunConfig.from_file(config_path, output_dir=str(output_dir),
                                 **overrides)
    return FoodSubstitutesPipeline(config)


# pytest Fixtures

@pytest.fixture(scope="session")
def mini_run(config_path, tmp_path_factory):
    """A complete run over the bundled mini-corpus: (pipeline, manifest)."""
    pipeline = mini_pipeline(config_path, tmp_path_factory.mktemp("mini"))
    return pipeline, pipeline.run()


@pytest.fixture(scope="session")
def synth_dir(tmp_path_factory):
    output_dir = str(tmp_path_factory.mktemp("synth"))
    config = RunConfig(output_dir=output_dir, **SYNTH_SETTINGS)
    FoodSubstitutesPipeline(config).synth.run()
    return output_dir


@pytest.fixture(scope="session")
def synth_run(synth_dir, tmp_path_factory):
    """A complete run over a synthetic corpus with simulated judgements."""
    config = RunConfig(
        taxonomy_path=os.path.join(synth_dir, SYNTH_TAXONOMY_FILE),
        meals_path=os.path.join(synth_dir, SYNTH_MEALS_FILE),
        clusters_path=os.path.join(synth_dir, SYNTH_CLUSTERS_FILE),
        output_dir=str(tmp_path_factory.mktemp("synth-run")),
        min_row_count=1,
        svd_k=8,
        query_prefixes=["synthetic:"],
        heatmap_prefixes=["synthetic:"],
        query_count=10,
        simulate_judgements=True,
    )
    pipeline = FoodSubstitutesPipeline(config)
    return pipeline, pipeline.run()

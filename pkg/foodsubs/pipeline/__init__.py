# -*- coding: utf-8 -*-
"""The food substitute pipeline and its stages.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging
import os
import time
from collections import OrderedDict

from foodsubs._metadata import __version__
from foodsubs.artifacts import ArtifactStore
from foodsubs.config import MANIFEST_FILE
from foodsubs.exceptions import ConfigError
from foodsubs.formats import write_json
from foodsubs.utils import check_type, file_digest

from .decomposition import SvdStage
from .evaluate import EvaluateStage
from .heatmap import HeatmapStage
from .ingest import IngestStage
from .matrix import BuildMatrixStage
from .rankings import QueryStage, RankAllStage
from .runconfig import RunConfig
from .stats import StatsStage
from .synth import SynthStage


logger = logging.getLogger(__name__)


# The stages run_pipeline runs, in dependency order
PIPELINE_STAGES = ("ingest", "build-matrix", "svd", "rank-all", "evaluate",
                   "heatmap")

# Config fields naming input files recorded in the manifest
INPUT_FIELDS = ("taxonomy_path", "meals_path", "judgements_path",
                "clusters_path")


class FoodSubstitutesPipeline(object):
    """Food substitute pipeline wrapper.

    Creates an ArtifactStore for the run's output directory and wraps every
    stage of the pipeline, each bound to that store and the run
    configuration.
    """

    def __init__(self, config):
        """Create a new pipeline for a run configuration.

        Args:
            config(RunConfig): The run configuration; validated here.

        Raises:
            TypeError: If the parameter types are incorrect.
            ConfigError: If the configuration is invalid.

        """
        check_type(config, RunConfig)
        config.validate()

        self._config = config
        self._store = ArtifactStore(config.output_dir)

        # Stage wrappers
        self.ingest = IngestStage(self._store, config)
        self.build_matrix = BuildMatrixStage(self._store, config)
        self.svd = SvdStage(self._store, config)
        self.rank_all = RankAllStage(self._store, config)
        self.query = QueryStage(self._store, config)
        self.evaluate = EvaluateStage(self._store, config)
        self.heatmap = HeatmapStage(self._store, config)
        self.synth = SynthStage(self._store, config)
        self.stats = StatsStage(self._store, config)

    @property
    def config(self):
        return self._config

    @property
    def store(self):
        return self._store

    def stage(self, name):
        """The stage object for a stage name such as "build-matrix"."""
        stage = getattr(self, name.replace("-", "_"), None)
        if stage is None or getattr(stage, "NAME", None) != name:
            raise ConfigError(["unknown stage {!r}".format(name)])
        return stage

    def input_digests(self):
        digests = OrderedDict()
        for name in INPUT_FIELDS:
            path = getattr(self._config, name)
            if path and os.path.isfile(path):
                digests[name] = file_digest(path)
        return digests

    def run(self, stages=None):
        """Run pipeline stages in dependency order and write the manifest.

        Args:
            stages(list): Names from PIPELINE_STAGES; all when None.

        Returns:
            OrderedDict: The manifest: version, config, input digests and
            each stage's timing and output digests.

        Raises:
            ConfigError: If a stage name is not a pipeline stage.
            MissingArtifactError: If a stage's upstream artifacts are absent.

        """
        requested = list(PIPELINE_STAGES if stages is None else stages)
        unknown = [s for s in requested if s not in PIPELINE_STAGES]
        if unknown:
            raise ConfigError(
                "{!r} is not a pipeline stage; choose from {}".format(
                    name, ", ".join(PIPELINE_STAGES)
                ) for name in unknown
            )

        manifest = OrderedDict([
            ("version", __version__),
            ("config", self._config.to_dict()),
            ("inputs", self.input_digests()),
            ("stages", []),
        ])
        for name in PIPELINE_STAGES:
            if name not in requested:
                continue
            logger.info("Running stage %s", name)
            started = time.perf_counter()
            outputs = self.stage(name).run()
            manifest["stages"].append(OrderedDict([
                ("name", name),
                ("seconds", round(time.perf_counter() - started, 6)),
                ("outputs", self._store.digests(outputs)),
            ]))
        write_json(self._store.path(MANIFEST_FILE), manifest)
        return manifest


def run_pipeline(config, stages=None):
    """Run stages of the pipeline for a configuration; see
    FoodSubstitutesPipeline.run."""
    return FoodSubstitutesPipeline(config).run(stages)

# -*- coding: utf-8 -*-
"""ArtifactStore class owning a pipeline run's output directory.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


import logging
import os
from collections import OrderedDict

from .config import (
    AGREEMENT_FILE,
    COL_VOCAB_FILE,
    COMPARISON_FILE,
    CORPUS_STATS_FILE,
    HEATMAP_FILE,
    JUDGEMENT_TASKS_FILE,
    MANIFEST_FILE,
    MATRIX_FILE,
    METRICS_FILE,
    MODEL_FILE,
    PROCESSED_MEALS_FILE,
    QUERIES_FILE,
    RANKINGS_FILE,
    ROW_VOCAB_FILE,
    SURFACE_FORMS_FILE,
    SYNTH_CLUSTERS_FILE,
    SYNTH_JUDGEMENTS_FILE,
    SYNTH_MEALS_FILE,
    SYNTH_TAXONOMY_FILE,
)
from .exceptions import MissingArtifactError
from .utils import check_type, ensure_directory, file_digest


logger = logging.getLogger(__name__)


# Artifact name -> the stage that writes it
ARTIFACT_PRODUCERS = OrderedDict([
    (PROCESSED_MEALS_FILE, "ingest"),
    (SURFACE_FORMS_FILE, "ingest"),
    (CORPUS_STATS_FILE, "ingest"),
    (ROW_VOCAB_FILE, "build-matrix"),
    (COL_VOCAB_FILE, "build-matrix"),
    (MATRIX_FILE, "build-matrix"),
    (MODEL_FILE, "svd"),
    (QUERIES_FILE, "rank-all"),
    (RANKINGS_FILE, "rank-all"),
    (JUDGEMENT_TASKS_FILE, "rank-all"),
    (SYNTH_JUDGEMENTS_FILE, "evaluate"),
    (METRICS_FILE, "evaluate"),
    (COMPARISON_FILE, "evaluate"),
    (AGREEMENT_FILE, "evaluate"),
    (HEATMAP_FILE, "heatmap"),
    (SYNTH_MEALS_FILE, "synth"),
    (SYNTH_TAXONOMY_FILE, "synth"),
    (SYNTH_CLUSTERS_FILE, "synth"),
    (MANIFEST_FILE, "run"),
])


class ArtifactStore(object):
    """The files of one pipeline run.

    Every stage reads and writes its artifacts through the store, which
    resolves names against the output directory, checks that upstream
    artifacts exist and fingerprints files for the run manifest.
    """

    def __init__(self, output_dir, create=True):
        """Initialize a new ArtifactStore.

        Args:
            output_dir(str): The run's output directory.
            create(bool): Create the directory if it does not exist.

        Raises:
            TypeError: If the parameter types are incorrect.

        """
        check_type(output_dir, str)
        check_type(create, bool)

        super(ArtifactStore, self).__init__()

        self._output_dir = os.path.abspath(output_dir)
        if create:
            ensure_directory(self._output_dir)

    @property
    def output_dir(self):
        """The absolute path of the run's output directory."""
        return self._output_dir

    def path(self, name):
        """The absolute path of an artifact name."""
        return os.path.join(self._output_dir, name)

    def exists(self, name):
        return os.path.isfile(self.path(name))

    def require(self, name, stage=None):
        """The path of an artifact that must already exist.

        Args:
            name(str): The artifact name.
            stage(str): The stage that produces it; looked up when None.

        Raises:
            MissingArtifactError: If the artifact has not been written yet.

        """
        path = self.path(name)
        if not os.path.isfile(path):
            raise MissingArtifactError(
                name, stage or ARTIFACT_PRODUCERS.get(name, "unknown"),
                path=path,
            )
        return path

    def digest(self, name):
        """SHA-256 of an artifact's bytes."""
        return file_digest(self.require(name))

    def digests(self, names):
        """Artifact name -> SHA-256, in the given order."""
        return OrderedDict((name, self.digest(name)) for name in names)

    def __repr__(self):
        return "<ArtifactStore {}>".format(self._output_dir)

# -*- coding: utf-8 -*-
"""Base class of the pipeline stages.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


from foodsubs.artifacts import ArtifactStore
from foodsubs.utils import check_type

from .runconfig import RunConfig


class PipelineStage(object):
    """One step of the pipeline, bound to a run's store and configuration.

    Subclasses set NAME and implement run(), returning the names of the
    artifacts they wrote.
    """

    NAME = None

    def __init__(self, store, config):
        """Initialize a new stage with the provided ArtifactStore.

        Args:
            store(ArtifactStore): The run's artifact store.
            config(RunConfig): The validated run configuration.

        Raises:
            TypeError: If the parameter types are incorrect.

        """
        check_type(store, ArtifactStore)
        check_type(config, RunConfig)

        super(PipelineStage, self).__init__()

        self._store = store
        self._config = config

    @property
    def store(self):
        return self._store

    @property
    def config(self):
        return self._config

    def run(self):
        raise NotImplementedError

    def __repr__(self):
        return "<{} {}>".format(self.__class__.__name__, self._store)

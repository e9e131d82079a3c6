# -*- coding: utf-8 -*-
"""foodsubs/pipeline/runconfig.py Fixtures & Tests

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

import json
import os

import pytest

from foodsubs.config import DEFAULT_SVD_RANK, DEFAULT_TAUS
from foodsubs.exceptions import ConfigError
from foodsubs.pipeline.runconfig import FIELDS, RunConfig
from foodsubs.synth import SynthSpec
from tests.utils import write_text


# Helper Functions

def write_config(path, data):
    return write_text(path, json.dumps(data))


# Tests

def test_defaults():
    config = RunConfig()
    assert config.svd_k == DEFAULT_SVD_RANK
    assert config.taus == list(DEFAULT_TAUS)
    assert config.methods == ["PPMI", "SVD"]
    assert config.taxonomy_path is None
    assert list(config.to_dict()) == [field.name for field in FIELDS]
    assert config.problems() == []


def test_list_defaults_are_not_shared():
    first = RunConfig()
    first.taus.append(5.0)
    assert RunConfig().taus == list(DEFAULT_TAUS)


def test_unknown_settings_are_rejected():
    with pytest.raises(ConfigError) as exc_info:
        RunConfig(svd_rank=5)
    assert "svd_rank" in exc_info.value.problems[0]


def test_file_paths_resolve_against_the_file(tmp_path):
    path = write_config(tmp_path / "run.json",
                        {"taxonomy_path": "data/taxonomy.tsv",
                         "meals_path": "/abs/meals.jsonl",
                         "svd_k": 16})
    config = RunConfig.from_file(path)
    assert config.taxonomy_path == \
        os.path.join(str(tmp_path), "data", "taxonomy.tsv")
    assert config.meals_path == "/abs/meals.jsonl"
    assert config.svd_k == 16


def test_overrides_win_unless_none(tmp_path):
    path = write_config(tmp_path / "run.json", {"svd_k": 16, "top_k": 5})
    config = RunConfig.from_file(path, svd_k=32, top_k=None)
    assert config.svd_k == 32
    assert config.top_k == 5


def test_from_sources_without_a_file():
    config = RunConfig.from_sources(None, svd_k=4, top_k=None)
    assert config.svd_k == 4
    assert config.top_k == RunConfig().top_k


@pytest.mark.parametrize("text", ["[1, 2]", "{svd_k: 3}"])
def test_bad_config_files(tmp_path, text):
    path = write_text(tmp_path / "run.json", text)
    with pytest.raises(ConfigError):
        RunConfig.from_file(path)


def test_missing_config_file(tmp_path):
    with pytest.raises(OSError):
        RunConfig.from_file(str(tmp_path / "absent.json"))


def test_bundled_config(config_path, data_dir):
    config = RunConfig.from_file(config_path)
    assert config.meals_path == os.path.join(data_dir, "meals.jsonl")
    assert config.simulate_judgements is True
    assert config.validate() is config


@pytest.mark.parametrize("settings, problem", [
    (dict(svd_k=0), "svd_k: must be >= 1"),
    (dict(top_k="10"), "top_k: expected an integer"),
    (dict(keep_duplicates=1), "keep_duplicates: expected true or false"),
    (dict(methods=["PPMI", "LSA"]), "methods: unknown values LSA"),
    (dict(methods=[]), "methods: expected a non-empty list"),
    (dict(log_base=1), "log_base: must be 'e' or a number > 1"),
    (dict(svd_algorithm="lanczos"), "svd_algorithm: must be one of"),
    (dict(taus=[3.0, 8.0]), "taus: thresholds must lie in [1, 7]"),
    (dict(svd_seed=-1), "seeds must be non-negative"),
    (dict(synth_meal_size_range=[2]), "synth_meal_size_range: expected 2"),
    (dict(synth_meal_size_range=[2, 60]), "larger than synth_clusters"),
    (dict(synth_partners=50), "synth_partners: must be < synth_clusters"),
    (dict(simulate_judgements=True, judgements_path="j.csv"), "exclusive"),
    (dict(output_dir=None), "output_dir: a value is required"),
])
def test_problems(settings, problem):
    problems = RunConfig(**settings).problems()
    assert any(p.startswith(problem) or problem in p for p in problems)
    with pytest.raises(ConfigError):
        RunConfig(**settings).validate()


def test_every_problem_is_reported():
    with pytest.raises(ConfigError) as exc_info:
        RunConfig(svd_k=0, top_k=0, ndcg_gain="binary").validate()
    assert len(exc_info.value.problems) == 3


def test_require():
    config = RunConfig(meals_path="meals.jsonl")
    config.require("meals_path")
    with pytest.raises(ConfigError) as exc_info:
        config.require("meals_path", "taxonomy_path")
    assert exc_info.value.problems == ["taxonomy_path: required by this stage"]


def test_synth_spec():
    spec = RunConfig(synth_clusters=6, synth_meal_size_range=[2, 3],
                     synth_partners=2).synth_spec()
    assert isinstance(spec, SynthSpec)
    assert spec.n_clusters == 6
    assert spec.meal_size_range == (2, 3)
    with pytest.raises(ConfigError):
        RunConfig(synth_clusters=2).synth_spec()

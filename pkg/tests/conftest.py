# -*- coding: utf-8 -*-
"""pytest configuration and top-level fixtures.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""

import os

import pytest
from hypothesis import settings

import foodsubs
from foodsubs.corpus import ProcessedMeal, build_pair_counts
from foodsubs.pipeline.runconfig import RunConfig
from foodsubs.taxonomy import FoodKey, load_taxonomy, parse_taxonomy
from tests.environment import FOODSUBS_TEST_MAX_EXAMPLES


settings.register_profile("foodsubs", max_examples=FOODSUBS_TEST_MAX_EXAMPLES,
                          deadline=None)
settings.load_profile("foodsubs")


DATA_DIR = os.path.join(os.path.dirname(foodsubs.__file__), "data")

TOY_KEYS = ("toy:food:a", "toy:food:b", "toy:food:c")

EXAMPLE_TAXONOMY = [
    "# category\tsubcategory\tentity\tsynonyms",
    "meats\tpoultry\tchicken\tchicken|chicken breast",
    "meats\tcured meat\tbacon\t",
    "staple foods\twheat\twrap\ttortilla wrap",
    "preparation methods\tdry heat\tgrill\tgrilled|grill|bbq",
    "meats\tseafood\ttuna\t",
    "staple foods\twheat\tsandwich\tsub",
]


# Helper Functions
def toy_meal(*keys):
    return ProcessedMeal(FoodKey.parse(key) for key in keys)


# pytest Fixtures

@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def taxonomy_path():
    return os.path.join(DATA_DIR, "taxonomy.tsv")


@pytest.fixture(scope="session")
def meals_path():
    return os.path.join(DATA_DIR, "meals.jsonl")


@pytest.fixture(scope="session")
def config_path():
    return os.path.join(DATA_DIR, "config.json")


@pytest.fixture(scope="session")
def mini_taxonomy(taxonomy_path):
    return load_taxonomy(taxonomy_path)


@pytest.fixture(scope="session")
def example_taxonomy():
    return parse_taxonomy(EXAMPLE_TAXONOMY)


@pytest.fixture(scope="session")
def toy_meals():
    """Meals {A,B}, {A,B}, {A,C}, {B,C}."""
    a, b, c = TOY_KEYS
    return [toy_meal(a, b), toy_meal(a, b), toy_meal(a, c), toy_meal(b, c)]


@pytest.fixture(scope="session")
def toy_counts(toy_meals):
    return build_pair_counts(toy_meals, 1, 1)


@pytest.fixture()
def mini_config(config_path, tmp_path):
    return RunConfig.from_file(config_path,
                               output_dir=str(tmp_path / "run"))

# -*- coding: utf-8 -*-
"""IPython Project Console.

Used to interactively work with the main package contents in IPython. The
pipeline is bound to the bundled mini-corpus configuration; pass another
config path in FOODSUBS_CONFIG to explore a different run.
"""


import os

import foodsubs
from foodsubs.environment import FOODSUBS_CONFIG

__copyright__ = "Copyright (c) 2026 The foodsubs developers."
__license__ = "MIT"


DATA_DIR = os.path.join(os.path.dirname(foodsubs.__file__), "data")

config = foodsubs.RunConfig.from_file(
    FOODSUBS_CONFIG or os.path.join(DATA_DIR, "config.json"),
    output_dir="foodsubs-console",
)
pipeline = foodsubs.FoodSubstitutesPipeline(config)

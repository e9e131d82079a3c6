# -*- coding: utf-8 -*-
"""Package configuration.

Copyright (c) 2026 The foodsubs developers.

Released under the MIT License; see the LICENSE file for details.
"""


# Corpus construction
DEFAULT_MIN_ROW_COUNT = 5

DEFAULT_MIN_COL_COUNT = 1

DEFAULT_KEEP_DUPLICATES = False

DEFAULT_SKIP_MALFORMED = False

# Food-context matrix
DEFAULT_LOG_BASE = "e"

WEIGHTING_SCHEMES = ("pmi_sig", "ppmi")

# Truncated SVD
DEFAULT_SVD_RANK = 500

DEFAULT_SVD_SEED = 0

DEFAULT_OVERSAMPLING = 10

DEFAULT_POWER_ITERS = 4

DEFAULT_SVD_ALGORITHM = "auto"

SVD_ALGORITHMS = ("auto", "randomized", "exact")

# Matrices with at most this many cells are decomposed exactly by "auto".
EXACT_SVD_MAX_CELLS = 40000

DEFAULT_SVD_SIMILARITY = "dot"

SVD_SIMILARITIES = ("dot", "cosine")

# Ranking
METHODS = ("PPMI", "SVD")

DEFAULT_TOP_K = 10

DEFAULT_QUERY_PREFIXES = ("meats:", "beans and legumes:", "nuts and seeds:")

DEFAULT_QUERY_COUNT = 100

DEFAULT_QUERY_SEED = 0

UNKNOWN_QUERY_SUGGESTIONS = 3

# Scores equal to this many decimals of the largest score tie and fall back
# to key order
SCORE_DECIMALS = 12

# Evaluation
DEFAULT_TAUS = (3.0, 4.0)

MIN_RATING = 1

MAX_RATING = 7

DEFAULT_NDCG_GAIN = "linear"

NDCG_GAINS = ("linear", "exponential")

# Synthetic corpora
DEFAULT_SYNTH_CLUSTERS = 50

DEFAULT_SYNTH_FOODS_PER_CLUSTER = 10

DEFAULT_SYNTH_MEALS = 100000

DEFAULT_SYNTH_MEAL_SIZE_RANGE = (2, 5)

DEFAULT_SYNTH_AFFINITY = 0.9

DEFAULT_SYNTH_PARTNERS = 4

DEFAULT_SYNTH_ZIPF_EXPONENT = 0.5

DEFAULT_SYNTH_SEED = 7

SYNTH_CATEGORY = "synthetic"

# Artifact file names, relative to the run's output directory
PROCESSED_MEALS_FILE = "meals.processed.jsonl"
SURFACE_FORMS_FILE = "surface_forms.tsv"
CORPUS_STATS_FILE = "corpus_stats.json"
ROW_VOCAB_FILE = "vocab.rows.tsv"
COL_VOCAB_FILE = "vocab.cols.tsv"
MATRIX_FILE = "matrix.ppmi"
MODEL_FILE = "model.svd"
QUERIES_FILE = "queries.txt"
RANKINGS_FILE = "rankings.tsv"
JUDGEMENT_TASKS_FILE = "judgement_tasks.csv"
METRICS_FILE = "metrics.tsv"
COMPARISON_FILE = "comparison.tsv"
AGREEMENT_FILE = "agreement.tsv"
HEATMAP_FILE = "heatmap.csv"
MANIFEST_FILE = "manifest.json"
SYNTH_MEALS_FILE = "meals.jsonl"
SYNTH_TAXONOMY_FILE = "taxonomy.tsv"
SYNTH_CLUSTERS_FILE = "clusters.tsv"
SYNTH_JUDGEMENTS_FILE = "judgements.csv"

# Environment
CONFIG_ENVIRONMENT_VARIABLE = "FOODSUBS_CONFIG"

LOG_LEVEL_ENVIRONMENT_VARIABLE = "FOODSUBS_LOG_LEVEL"

DEFAULT_LOG_LEVEL = "WARNING"

FLOAT_FORMAT = "{:.17g}"
